#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ptolemy/polygon.hpp"

namespace ptolemy {

// Search space of the brute-force kernel is 2^(N(N-3)/2); the default
// ceiling is overridable up to kHardMaxBrutePolygon.
inline constexpr int kDefaultMaxBrutePolygon = 9;
inline constexpr int kHardMaxBrutePolygon = 10;

// Every Ptolemy diagram of the n-gon, in increasing bit-mask order.
// Parallel over blocks of the mask space; output order does not depend on
// the thread count. Throws CapacityError unless 3 <= n <= max_n.
std::vector<Diagram> enumerate_brute(int n, int max_n = kDefaultMaxBrutePolygon);
std::uint64_t count_brute(int n, int max_n = kDefaultMaxBrutePolygon);

// Generates each Ptolemy diagram of the n-gon once by choosing the root
// region (empty cell or clique over an increasing vertex sequence from 1 to
// n) and recursing on every sub-polygon. Nothing is materialized. n >= 2.
void enumerate_recursive(int n, const std::function<void(const Diagram&)>& visit);
std::vector<Diagram> enumerate_recursive(int n);

// Same recursion in counting mode, with sub-polygon counts memoized by
// vertex count.
mpz_class count_recursive(int n);

// Least bit mask among all rotations.
Diagram canonical_rotation_form(const Diagram& dg);

// Rotation classes via the average number of fixed diagrams per rotation.
mpz_class count_orbits_burnside(int n, int max_n = kDefaultMaxBrutePolygon);

// Rotation classes by collecting distinct canonical forms.
mpz_class count_orbits_canonical(int n, int max_n = kDefaultMaxBrutePolygon);

enum class Method { Formula, Series, Lagrange, Brute, Recursive };

std::string_view to_string(Method m) noexcept;
Method parse_method(std::string_view s);

struct EnumerationReport {
    int n_gon = 0;
    mpz_class total;
    mpz_class orbit_total;
    Method method = Method::Formula;
};

// Ptolemy diagrams of the n-gon counted by the chosen pipeline.
mpz_class count_diagrams(int n, Method method, int max_brute_n = kDefaultMaxBrutePolygon);

// Rotation classes: the rotation series for the algebraic methods, Burnside
// counting over the enumerated diagrams for brute and recursive.
mpz_class count_rotation_classes(int n, Method method, int max_brute_n = kDefaultMaxBrutePolygon);

EnumerationReport enumeration_report(int n, Method method, int max_brute_n = kDefaultMaxBrutePolygon);

// Serial implementations retained as test oracles for the parallel kernels.
namespace reference {

std::vector<Diagram> enumerate_brute(int n);
mpz_class count_orbits_burnside(int n);

}  // namespace reference

}  // namespace ptolemy
