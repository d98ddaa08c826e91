#include "priorpol/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "priorpol/error.hpp"

namespace priorpol {

namespace {

double beta_continued_fraction(double x, double a, double b)
{
    constexpr int kMaxIterations = 10000;
    constexpr double kEpsilon = 1e-16;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) {
        d = kTiny;
    }
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) {
            d = kTiny;
        }
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) {
            c = kTiny;
        }
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) {
            d = kTiny;
        }
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) {
            c = kTiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEpsilon) {
            return h;
        }
    }
    throw Error("incomplete beta continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b)
{
    if (!(a > 0.0 && b > 0.0) || !(x >= 0.0 && x <= 1.0)) {
        throw Error("incomplete beta argument out of domain");
    }
    if (x == 0.0 || x == 1.0) {
        return x;
    }
    const double log_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(x, a, b) / a;
    }
    return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

double student_t_two_tailed(double t, double df)
{
    if (!(df > 0.0)) {
        throw Error("t distribution needs positive degrees of freedom");
    }
    if (std::isinf(t)) {
        return 0.0;
    }
    const double x = df / (df + t * t);
    return std::clamp(regularized_incomplete_beta(x, 0.5 * df, 0.5), 0.0, 1.0);
}

double chi_square_1df_upper(double x)
{
    if (x <= 0.0) {
        return 1.0;
    }
    return std::erfc(std::sqrt(0.5 * x));
}

}  // namespace priorpol
