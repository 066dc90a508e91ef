#include "ptolemy/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "ptolemy/error.hpp"
#include "ptolemy/series.hpp"

namespace ptolemy {

double eval_poly(const std::vector<long>& poly, double x) {
    double acc = 0;
    for (long c : poly) acc = acc * x + static_cast<double>(c);
    return acc;
}

double find_root(const std::vector<long>& poly, double lo, double hi, double tol) {
    if (!(tol > 0)) throw InvalidInput("root tolerance must be positive");
    if (lo > hi) std::swap(lo, hi);
    double flo = eval_poly(poly, lo);
    double fhi = eval_poly(poly, hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo < 0) == (fhi < 0)) throw BracketError("polynomial has no sign change on the bracket");
    while (hi - lo > tol) {
        double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;  // bracket below one ulp
        double fmid = eval_poly(poly, mid);
        if (fmid == 0) return mid;
        if ((fmid < 0) == (flo < 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return lo + (hi - lo) / 2;
}

const std::vector<long>& rho_polynomial() {
    static const std::vector<long> p{8, -48, -47, 4};
    return p;
}

const std::vector<long>& alpha_polynomial() {
    static const std::vector<long> p{1136, 0, -71, 0, -98, 0, 1};
    return p;
}

AsymptoticParams asymptotic_params() {
    static const AsymptoticParams params{find_root(rho_polynomial(), 6, 7), find_root(alpha_polynomial(), 0.05, 0.2)};
    return params;
}

double log_asymptotic_estimate(int N) {
    if (N < 1) throw InvalidInput("coefficient index must be at least 1");
    const auto [rho, alpha] = asymptotic_params();
    const double n = N;
    return std::log(alpha) - 0.5 * std::log(std::numbers::pi * n * n * n) + n * std::log(rho);
}

double asymptotic_estimate(int N) { return std::exp(log_asymptotic_estimate(N)); }

double log_of(const mpz_class& v) {
    if (v <= 0) throw InvalidInput("log of a nonpositive integer");
    long exp2 = 0;
    double mantissa = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp2) * std::numbers::ln2;
}

double exact_to_estimate_ratio(int N) {
    // [y^N] P counts the (N+1)-gon, Dynkin index N - 2; [y^1] P = 1.
    const mpz_class exact = N == 1 ? mpz_class(1) : count_closed_formula(N - 2);
    return std::exp(log_of(exact) - log_asymptotic_estimate(N));
}

}  // namespace ptolemy
