#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace taustar {

// A finite discrete marginal: strictly increasing support points with
// positive masses summing to one (within 1e-12).
class DiscreteMarginal {
 public:
  DiscreteMarginal(std::vector<double> support, std::vector<double> masses);

  // Empirical pmf on the distinct observed values.
  static DiscreteMarginal from_data(std::span<const double> values);

  const std::vector<double>& support() const { return support_; }
  const std::vector<double>& masses() const { return masses_; }
  // cumulative mass F(u_i), inclusive
  const std::vector<double>& cdf() const { return cdf_; }
  std::size_t size() const { return support_.size(); }

 private:
  std::vector<double> support_;
  std::vector<double> masses_;
  std::vector<double> cdf_;
};

}  // namespace taustar
