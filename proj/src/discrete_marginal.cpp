#include "taustar/discrete_marginal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace taustar {

DiscreteMarginal::DiscreteMarginal(std::vector<double> support,
                                   std::vector<double> masses)
    : support_(std::move(support)), masses_(std::move(masses)) {
  if (support_.empty() || support_.size() != masses_.size())
    throw std::invalid_argument(
        "discrete marginal: support and masses must be nonempty and equal "
        "length");
  double total = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (!std::isfinite(support_[i]))
      throw std::invalid_argument("discrete marginal: non-finite support");
    if (i > 0 && !(support_[i] > support_[i - 1]))
      throw std::invalid_argument(
          "discrete marginal: support must be strictly increasing");
    if (!(masses_[i] > 0.0) || !std::isfinite(masses_[i]))
      throw std::invalid_argument("discrete marginal: masses must be positive");
    total += masses_[i];
  }
  if (std::fabs(total - 1.0) > 1e-12)
    throw std::invalid_argument(
        "discrete marginal: masses must sum to 1 within 1e-12");
  cdf_.resize(masses_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    acc += masses_[i];
    cdf_[i] = acc;
  }
  cdf_.back() = 1.0;
}

DiscreteMarginal DiscreteMarginal::from_data(std::span<const double> values) {
  if (values.empty())
    throw std::invalid_argument("discrete marginal: empty data");
  std::map<double, std::size_t> counts;
  for (double v : values) {
    if (!std::isfinite(v))
      throw std::invalid_argument("discrete marginal: non-finite data");
    ++counts[v];
  }
  std::vector<double> support, masses;
  support.reserve(counts.size());
  masses.reserve(counts.size());
  double n = static_cast<double>(values.size());
  for (const auto& [v, c] : counts) {
    support.push_back(v);
    masses.push_back(static_cast<double>(c) / n);
  }
  // counts sum to n exactly, but guard the float division
  double total = 0.0;
  for (double m : masses) total += m;
  for (double& m : masses) m /= total;
  return DiscreteMarginal(std::move(support), std::move(masses));
}

}  // namespace taustar
