#pragma once

// Scalar special functions backing the distribution code: regularized
// incomplete gamma and beta, and the normal/chi-square/Student-t CDFs
// built on them.  Self-contained on purpose; accuracy is checked against
// externally computed reference values in the test suite.

namespace taustar {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
double gamma_p(double a, double x);

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

// Regularized incomplete beta I_x(a, b).
double beta_inc(double a, double b, double x);

double normal_cdf(double z);

// chi-square with `dof` degrees of freedom
double chi_square_cdf(double x, double dof);
double chi_square_pdf(double x, double dof);

// two-sided p-value of a Student-t statistic with `dof` degrees of freedom
double student_t_two_sided_p(double t, double dof);

}  // namespace taustar
