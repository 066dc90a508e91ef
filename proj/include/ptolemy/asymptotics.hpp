#pragma once

#include <vector>

#include <gmpxx.h>

namespace ptolemy {

inline constexpr double kRootTolerance = 1e-13;

// Leading term alpha / sqrt(pi N^3) * rho^N of [y^N] P(y).
struct AsymptoticParams {
    double rho = 0;    // largest positive root of 8x^3 - 48x^2 - 47x + 4
    double alpha = 0;  // smallest positive root of 1136x^6 - 71x^4 - 98x^2 + 1
};

// Integer polynomial evaluated by Horner's rule; coefficients are listed from
// the leading term down to the constant term.
double eval_poly(const std::vector<long>& poly, double x);

// Bisection on [lo, hi]; throws BracketError without a sign change.
double find_root(const std::vector<long>& poly, double lo, double hi, double tol = kRootTolerance);

const std::vector<long>& rho_polynomial();
const std::vector<long>& alpha_polynomial();

AsymptoticParams asymptotic_params();

// Natural log of the leading-term estimate, finite for every N >= 1.
double log_asymptotic_estimate(int N);
double asymptotic_estimate(int N);

// Natural log of a positive big integer.
double log_of(const mpz_class& v);

// [y^N] P divided by its leading-term estimate, computed in log space.
double exact_to_estimate_ratio(int N);

}  // namespace ptolemy
