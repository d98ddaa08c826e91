#pragma once

namespace priorpol {

// Regularized incomplete beta I_x(a, b) for a, b > 0 and 0 <= x <= 1.
// Continued fraction evaluated with the modified Lentz method, using the
// symmetry I_x(a, b) = 1 - I_{1-x}(b, a) to stay in the fast-converging
// region. Absolute error below 1e-12 for the arguments used here.
[[nodiscard]] double regularized_incomplete_beta(double x, double a, double b);

// Two-tailed P(|T| >= |t|) for Student's t with `df` degrees of freedom.
[[nodiscard]] double student_t_two_tailed(double t, double df);

// Upper tail of chi-square with one degree of freedom: erfc(sqrt(x / 2)).
[[nodiscard]] double chi_square_1df_upper(double x);

}  // namespace priorpol
