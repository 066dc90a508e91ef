#pragma once

// Truncated formal power series in y with exact rational coefficients, and
// the generating functions of Ptolemy diagrams built on them.
//
// P(y) counts Ptolemy diagrams with a distinguished base edge: [y^N] P is
// the number of diagrams of the (N+1)-gon, [y^1] = 1 being the degenerate
// two-vertex diagram.

#include <initializer_list>
#include <vector>

#include <gmpxx.h>

namespace ptolemy {

class PowerSeries {
public:
    // Zero series truncated at y^order.
    explicit PowerSeries(int order);
    PowerSeries(int order, std::initializer_list<mpq_class> coeffs);

    static PowerSeries monomial(int order, int k, const mpq_class& c = 1);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& operator[](int k) const { return coeffs_.at(k); }
    mpq_class& operator[](int k) { return coeffs_.at(k); }
    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

    // Index of the first nonzero coefficient, order() + 1 for the zero series.
    int valuation() const noexcept;

    PowerSeries& operator+=(const PowerSeries& g);
    PowerSeries& operator-=(const PowerSeries& g);
    PowerSeries& operator*=(const mpq_class& c);
    friend PowerSeries operator+(PowerSeries f, const PowerSeries& g) { return f += g; }
    friend PowerSeries operator-(PowerSeries f, const PowerSeries& g) { return f -= g; }
    friend PowerSeries operator*(PowerSeries f, const mpq_class& c) { return f *= c; }
    friend PowerSeries operator*(const mpq_class& c, PowerSeries f) { return f *= c; }
    friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);

    friend bool operator==(const PowerSeries& f, const PowerSeries& g) { return f.coeffs_ == g.coeffs_; }

private:
    void require_same_order(const PowerSeries& g) const;

    std::vector<mpq_class> coeffs_;
};

// Cauchy product truncated at the common order; InvalidInput on mismatch.
PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g);

// log(1/(1-f)) = sum_{k>=1} f^k / k. f must have zero constant term.
PowerSeries ps_log_inv(const PowerSeries& f);

// f(y^d), truncated at the order of f.
PowerSeries ps_substitute_power(const PowerSeries& f, int d);

// 1/f for a series with nonzero constant term.
PowerSeries ps_inverse(const PowerSeries& f);

// The series P with zero constant term solving P = y + (P^2 + P^3)/(1 - P),
// via the recurrence obtained from P(1 - 2P - P^2) = y(1 - P).
PowerSeries solve_ptolemy_series(int order);

// [y^N] P = (1/N) [y^(N-1)] ((1-y)/(1-2y-y^2))^N.
mpz_class lagrange_coefficient(int N);

// (1/(n+2)) sum_l 2^l C(n+1+l, l) C(2n+2, n+1-2l): Ptolemy diagrams of the
// (n+3)-gon.
mpz_class count_closed_formula(int n);

// Ptolemy diagrams up to rotation, counted by vertices: [y^N] is the number
// of rotation classes on the N-gon.
//   2 sum_d (phi(d)/d) log(1/(1-P(y^d))) - (3P^2 + P(y^2))/2
//     - (P^3 + 2P(y^3))/3 - 2P + yP
PowerSeries rotation_gf_by_vertices(int order);

// The same series divided by y, indexed like P: [y^(n+2)] is the number of
// rotation classes on the (n+3)-gon.
PowerSeries rotation_gf(int order);

long totient(long d);

// Coefficients as integers; throws std::domain_error if any is fractional.
std::vector<mpz_class> integer_coefficients(const PowerSeries& f);

}  // namespace ptolemy
