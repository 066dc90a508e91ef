#include "ptolemy/series.hpp"

#include <stdexcept>
#include <string>

#include "ptolemy/error.hpp"

namespace ptolemy {

namespace {

mpq_class fraction(long num, long den) {
    mpq_class q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

}  // namespace

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw InvalidInput("negative truncation order");
    coeffs_.assign(order + 1, mpq_class(0));
}

PowerSeries::PowerSeries(int order, std::initializer_list<mpq_class> coeffs) : PowerSeries(order) {
    int k = 0;
    for (const auto& c : coeffs) {
        if (k > order) break;
        coeffs_[k++] = c;
    }
}

PowerSeries PowerSeries::monomial(int order, int k, const mpq_class& c) {
    PowerSeries f(order);
    if (k >= 0 && k <= order) f.coeffs_[k] = c;
    return f;
}

int PowerSeries::valuation() const noexcept {
    for (int k = 0; k <= order(); ++k)
        if (coeffs_[k] != 0) return k;
    return order() + 1;
}

void PowerSeries::require_same_order(const PowerSeries& g) const {
    if (g.order() != order())
        throw InvalidInput("power series orders differ: " + std::to_string(order()) + " vs " +
                           std::to_string(g.order()));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& g) {
    require_same_order(g);
    for (int k = 0; k <= order(); ++k) coeffs_[k] += g.coeffs_[k];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& g) {
    require_same_order(g);
    for (int k = 0; k <= order(); ++k) coeffs_[k] -= g.coeffs_[k];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const mpq_class& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    f.require_same_order(g);
    const int n = f.order();
    PowerSeries h(n);
    const int vf = f.valuation(), vg = g.valuation();
    for (int i = vf; i <= n; ++i) {
        if (f.coeffs_[i] == 0) continue;
        for (int j = vg; i + j <= n; ++j) h.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return h;
}

PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g) { return f * g; }

PowerSeries ps_log_inv(const PowerSeries& f) {
    if (f[0] != 0) throw InvalidInput("log(1/(1-f)) needs f with zero constant term");
    const int n = f.order();
    PowerSeries sum(n);
    const int v = f.valuation();
    PowerSeries power = f;
    for (int k = 1; k * v <= n; ++k) {
        sum += power * fraction(1, k);
        power = power * f;
    }
    return sum;
}

PowerSeries ps_substitute_power(const PowerSeries& f, int d) {
    if (d < 1) throw InvalidInput("substitution exponent must be positive");
    PowerSeries g(f.order());
    for (int k = 0; k * d <= f.order(); ++k) g[k * d] = f[k];
    return g;
}

PowerSeries ps_inverse(const PowerSeries& f) {
    if (f[0] == 0) throw InvalidInput("series with zero constant term is not invertible");
    const int n = f.order();
    PowerSeries g(n);
    g[0] = 1 / f[0];
    for (int k = 1; k <= n; ++k) {
        mpq_class s = 0;
        for (int i = 1; i <= k; ++i) s += f[i] * g[k - i];
        g[k] = -s / f[0];
    }
    return g;
}

PowerSeries solve_ptolemy_series(int order) {
    if (order < 1) throw InvalidInput("series order must be at least 1");
    // p_k = [k == 1] - p_{k-1} + 2 [y^k] P^2 + [y^k] P^3, where the right side
    // only involves p_j with j < k because p_0 = 0.
    std::vector<mpz_class> p(order + 1, 0), sq(order + 1, 0);
    for (int k = 1; k <= order; ++k) {
        mpz_class square = 0;
        for (int i = 1; i < k; ++i) square += p[i] * p[k - i];
        sq[k] = square;
        mpz_class cube = 0;
        for (int i = 2; i < k; ++i) cube += sq[i] * p[k - i];
        p[k] = (k == 1 ? 1 : 0) - p[k - 1] + 2 * square + cube;
    }
    PowerSeries f(order);
    for (int k = 0; k <= order; ++k) f[k] = p[k];
    return f;
}

namespace {

mpz_class pow_series_coefficient(const PowerSeries& base, unsigned long exponent, int k) {
    PowerSeries result = PowerSeries::monomial(base.order(), 0);
    PowerSeries b = base;
    while (exponent) {
        if (exponent & 1u) result = result * b;
        exponent >>= 1;
        if (exponent) b = b * b;
    }
    const mpq_class& c = result[k];
    if (c.get_den() != 1) throw std::domain_error("non-integral coefficient in Lagrange inversion");
    return c.get_num();
}

}  // namespace

mpz_class lagrange_coefficient(int N) {
    if (N < 1) throw InvalidInput("coefficient index must be at least 1");
    const int order = N - 1;
    PowerSeries numerator(order, {1, -1});
    PowerSeries denominator(order, {1, -2, -1});
    PowerSeries a = numerator * ps_inverse(denominator);
    mpz_class c = pow_series_coefficient(a, static_cast<unsigned long>(N), order);
    if (c % N != 0) throw std::domain_error("Lagrange coefficient not divisible by N");
    return c / N;
}

mpz_class count_closed_formula(int n) {
    if (n < 0) throw InvalidInput("Dynkin index must be nonnegative");
    mpz_class sum = 0;
    const unsigned long un = static_cast<unsigned long>(n);
    for (unsigned long l = 0; 2 * l <= un + 1; ++l) {
        mpz_class term, b1, b2;
        mpz_ui_pow_ui(term.get_mpz_t(), 2, l);
        mpz_bin_uiui(b1.get_mpz_t(), un + 1 + l, l);
        mpz_bin_uiui(b2.get_mpz_t(), 2 * un + 2, un + 1 - 2 * l);
        sum += term * b1 * b2;
    }
    if (sum % (n + 2) != 0) throw std::domain_error("closed formula sum not divisible by n + 2");
    return sum / (n + 2);
}

long totient(long d) {
    if (d < 1) throw InvalidInput("totient needs a positive argument");
    long result = d;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        while (d % p == 0) d /= p;
        result -= result / p;
    }
    if (d > 1) result -= result / d;
    return result;
}

PowerSeries rotation_gf_by_vertices(int order) {
    if (order < 1) throw InvalidInput("series order must be at least 1");
    const PowerSeries p = solve_ptolemy_series(order);
    const PowerSeries p2 = p * p;
    const PowerSeries p3 = p2 * p;

    PowerSeries cycles(order);
    for (int d = 1; d <= order; ++d)
        cycles += ps_log_inv(ps_substitute_power(p, d)) * fraction(totient(d), d);

    PowerSeries y_p(order);
    for (int k = 1; k <= order; ++k) y_p[k] = p[k - 1];

    PowerSeries g = cycles * mpq_class(2);
    g -= (p2 * mpq_class(3) + ps_substitute_power(p, 2)) * fraction(1, 2);
    g -= (p3 + ps_substitute_power(p, 3) * mpq_class(2)) * fraction(1, 3);
    g -= p * mpq_class(2);
    g += y_p;
    return g;
}

PowerSeries rotation_gf(int order) {
    if (order < 0) throw InvalidInput("series order must be nonnegative");
    const PowerSeries g = rotation_gf_by_vertices(order + 1);
    PowerSeries out(order);
    for (int k = 0; k <= order; ++k) out[k] = g[k + 1];
    return out;
}

std::vector<mpz_class> integer_coefficients(const PowerSeries& f) {
    std::vector<mpz_class> out;
    out.reserve(f.order() + 1);
    for (int k = 0; k <= f.order(); ++k) {
        if (f[k].get_den() != 1)
            throw std::domain_error("coefficient of y^" + std::to_string(k) + " is not an integer");
        out.push_back(f[k].get_num());
    }
    return out;
}

}  // namespace ptolemy
