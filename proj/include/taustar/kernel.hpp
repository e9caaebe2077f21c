#pragma once

#include <array>
#include <vector>

#include "taustar/discrete_marginal.hpp"

// The quadruple sign kernel behind the t* statistic, plus the exact
// conditional-expectation kernels used as analytic oracles in the tests.

namespace taustar {

struct Point {
  double x;
  double y;
};

using Quadruple = std::array<Point, 4>;

enum class Classification { Concordant, Discordant, Inseparable };

// Sign function a(z1, z2, z3, z4) =
//   I(z1,z3 < z2,z4) + I(z1,z3 > z2,z4) - I(z1,z2 < z3,z4) - I(z1,z2 > z3,z4)
// where "a,b < c,d" abbreviates max(a,b) < min(c,d).  The two positive and
// the two negative indicators are mutually exclusive, so the value is in
// {-1, 0, +1}.
int a_sign(double z1, double z2, double z3, double z4);

// Classifies four points: sort by x, then the quadruple is inseparable when
// the two middle x order statistics tie or the two middle y order statistics
// tie; otherwise concordant when the lower-x pair's y-range lies strictly
// below or strictly above the upper-x pair's, and discordant otherwise.
Classification classify(const Quadruple& q);

// Kernel value as an integer numerator over 3: concordant -> 2,
// discordant -> -1, inseparable -> 0.
int h_thirds(Classification c);

// h in {2/3, -1/3, 0}
double h_kernel(const Quadruple& q);

// Sum over all 24 argument permutations of a(x_perm) * a(y_perm); the
// kernel equals this divided by 24.  Kept separate so tests can compare the
// two routes exactly.
int h_permutation_sum(const Quadruple& q);
double h_kernel_by_average(const Quadruple& q);

// Cramer-von Mises kernel c(x1, x2) = x1^2/2 + x2^2/2 - max(x1, x2) + 1/3
// on the unit square.
double cvm_c(double x1, double x2);

// Two-point projection of h for uniform marginals: 6 c(x1,x2) c(y1,y2).
double h2_uniform(Point p1, Point p2);

// g(u1, u2) = E[a(u1, u2, U3, U4)] for U3, U4 iid from the given marginal,
// evaluated by exact summation over the support.
double g_discrete(double u1, double u2, const DiscreteMarginal& m);

// One-point projection of h under the product marginal mx (x) my, computed
// by full enumeration over triples of joint support points.  Errors when
// the joint support exceeds 40 points (40^3 triples).
double h1_bruteforce(double x, double y, const DiscreteMarginal& mx,
                     const DiscreteMarginal& my);

// Same, for an arbitrary finite joint distribution given as a mass table.
struct JointMass {
  double x;
  double y;
  double p;
};
double h1_bruteforce_joint(double x, double y,
                           const std::vector<JointMass>& joint);

}  // namespace taustar
