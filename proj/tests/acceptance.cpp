// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ptolemy/asymptotics.hpp"
#include "ptolemy/decomposition.hpp"
#include "ptolemy/enumerate.hpp"
#include "ptolemy/ptolemy.hpp"
#include "ptolemy/series.hpp"

using namespace ptolemy;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(const std::string& name, double budget_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && elapsed >= budget_seconds) {
        o.ok = false;
        o.detail = "exceeded time budget of " + std::to_string(budget_seconds) + " s";
    }
    if (!o.ok) ++failures;
    std::printf("[%s] %s (%.2f s / %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), elapsed, budget_seconds,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
}

const std::vector<std::string> kBaseEdgeCounts{
    "1",        "4",         "17",         "82",          "422",          "2274",
    "12665",    "72326",     "421214",     "2492112",     "14937210",     "90508256",
    "553492552", "3411758334", "21175624713", "132226234854", "830077057878"};

const std::vector<std::string> kRotationCounts{
    "1",       "3",        "5",         "19",         "62",          "301",
    "1413",    "7304",     "38294",     "208052",     "1149018",     "6466761",
    "36899604", "213245389", "1245624985", "7345962126", "43688266206"};

std::set<DiagonalSet> as_set(const std::vector<Diagram>& v) {
    std::set<DiagonalSet> s;
    for (const auto& dg : v) s.insert(dg.bits());
    return s;
}

bool decomposes(const Diagram& dg) { return std::holds_alternative<CellDecomposition>(try_decompose(dg)); }

bool all_triangles(const Region& r) {
    if (r.kind == RegionKind::Clique) return false;
    if (r.kind == RegionKind::EmptyCell && r.boundary.size() != 3) return false;
    for (const auto& c : r.children)
        if (!all_triangles(c.region)) return false;
    return true;
}

bool is_triangulation(const Diagram& dg) {
    auto ds = dg.diagonals();
    if (static_cast<int>(ds.size()) != dg.n() - 3) return false;
    for (const auto& a : ds)
        for (const auto& b : ds)
            if (crosses(a, b)) return false;
    return true;
}

// Number of subsets on which the three recognizers disagree.
long long disagreements(int n, const std::vector<std::uint64_t>& masks) {
    long long bad = 0;
    const long long count = static_cast<long long>(masks.size());
#pragma omp parallel for schedule(static) reduction(+ : bad)
    for (long long i = 0; i < count; ++i) {
        Diagram dg = Diagram::from_bits(n, DiagonalSet::from_low_word(masks[i]));
        bool p = is_ptolemy_pairwise(dg);
        if (p != is_fixed_by_ncnc(dg) || p != decomposes(dg)) ++bad;
    }
    return bad;
}

}  // namespace

int main() {
    criterion("closed formula reproduces the listed counts for n = 0..16", 1, [](Outcome& o) {
        for (int n = 0; n <= 16; ++n)
            o.require(count_closed_formula(n) == mpz_class(kBaseEdgeCounts[n]), "mismatch at n=" + std::to_string(n));
    });

    criterion("formula = Lagrange inversion = series coefficients for n <= 40", 5, [](Outcome& o) {
        auto series = integer_coefficients(solve_ptolemy_series(42));
        for (int n = 0; n <= 40; ++n) {
            mpz_class f = count_closed_formula(n);
            o.require(f == lagrange_coefficient(n + 2), "Lagrange differs at n=" + std::to_string(n));
            o.require(f == series[n + 2], "series differs at n=" + std::to_string(n));
        }
    });

    criterion("brute-force counts for N = 3..8 are 1, 4, 17, 82, 422, 2274", 60, [](Outcome& o) {
        for (int n = 3; n <= 8; ++n)
            o.require(mpz_class(std::to_string(count_brute(n))) == mpz_class(kBaseEdgeCounts[n - 3]),
                      "N=" + std::to_string(n));
    });

    criterion("recursive generator = brute force set-wise (N <= 8), = formula count-wise (N <= 12)", 60, [](Outcome& o) {
        for (int n = 3; n <= 8; ++n) {
            auto rec = enumerate_recursive(n);
            auto rec_set = as_set(rec);
            o.require(rec_set.size() == rec.size(), "duplicates at N=" + std::to_string(n));
            o.require(rec_set == as_set(enumerate_brute(n)), "set differs at N=" + std::to_string(n));
        }
        for (int n = 3; n <= 12; ++n) {
            std::uint64_t count = 0;
            enumerate_recursive(n, [&](const Diagram&) { ++count; });
            o.require(mpz_class(std::to_string(count)) == count_closed_formula(n - 3),
                      "count differs at N=" + std::to_string(n));
        }
    });

    criterion("rotation series reproduces the listed counts for n = 0..16", 5, [](Outcome& o) {
        auto g = integer_coefficients(rotation_gf(18));
        for (int n = 0; n <= 16; ++n)
            o.require(g[n + 2] == mpz_class(kRotationCounts[n]), "mismatch at n=" + std::to_string(n));
    });

    criterion("Burnside orbit counts match the rotation series for N = 3..8", 60, [](Outcome& o) {
        for (int n = 3; n <= 8; ++n)
            o.require(count_orbits_burnside(n) == mpz_class(kRotationCounts[n - 3]), "N=" + std::to_string(n));
    });

    criterion("pairwise <=> ncnc fixed point <=> decomposable: exhaustive N <= 6, 10^6 random N = 7, 8", 120,
              [](Outcome& o) {
                  for (int n = 3; n <= 6; ++n) {
                      std::vector<std::uint64_t> masks(std::uint64_t{1} << num_diagonals(n));
                      for (std::size_t m = 0; m < masks.size(); ++m) masks[m] = m;
                      o.require(disagreements(n, masks) == 0, "discrepancy at N=" + std::to_string(n));
                  }
                  std::mt19937_64 rng(20100806);
                  for (int n : {7, 8}) {
                      const std::uint64_t full = (std::uint64_t{1} << num_diagonals(n)) - 1;
                      std::vector<std::uint64_t> masks(1000000);
                      for (auto& m : masks) m = rng() & full;
                      o.require(disagreements(n, masks) == 0, "discrepancy at N=" + std::to_string(n));
                  }
              });

    criterion("decomposition: round trip, nc exchanges cells and cliques, self-dual iff triangulation", 60,
              [](Outcome& o) {
                  const long catalan[] = {1, 2, 5, 14, 42};
                  for (int n = 2; n <= 8; ++n) {
                      long self_dual = 0;
                      for (const auto& dg : enumerate_recursive(n)) {
                          CellDecomposition cd = decompose(dg);
                          o.require(recompose(cd) == dg, "round trip fails at N=" + std::to_string(n));
                          o.require(decompose(recompose(cd)) == cd, "tree round trip fails at N=" + std::to_string(n));
                          if (n >= 3) {
                              o.require(decompose(nc(dg)) == exchange_cells_and_cliques(cd),
                                        "nc does not exchange kinds at N=" + std::to_string(n));
                              bool fixed = nc(dg) == dg;
                              o.require(fixed == is_triangulation(dg), "self-duality differs at N=" + std::to_string(n));
                              o.require(fixed == all_triangles(cd.root), "triangular tree mismatch");
                              self_dual += fixed;
                          }
                      }
                      if (n >= 3 && n <= 7)
                          o.require(self_dual == catalan[n - 3], "triangulation count at N=" + std::to_string(n));
                  }
              });

    criterion("torsion pairs: ext(a, rotate(b, -1)) = 0 for a in X, b in Y, all N <= 8", 60, [](Outcome& o) {
        long long violations = 0;
        for (int n = 3; n <= 8; ++n) {
            for (const auto& dg : enumerate_recursive(n)) {
                TorsionPair tp = torsion_pair(dg);
                o.require(tp.y == rotate(nc(tp.x), 1), "Y is not the rotated nc of X");
                auto ys = tp.y.diagonals();
                for (const auto& a : tp.x.diagonals())
                    for (const auto& b : ys) violations += ext_dim(a, rotate(b, -1)).value;
            }
        }
        o.require(violations == 0, std::to_string(violations) + " violations");
    });

    criterion("asymptotics: rho, alpha to 1e-12; ratio within 5% at N=50, 2% at N=200, improving", 5, [](Outcome& o) {
        const auto [rho, alpha] = asymptotic_params();
        o.require(std::abs(rho - 6.847333996370022) < 1e-12, "rho off");
        o.require(std::abs(alpha - 0.10070579427884086) < 1e-12, "alpha off");
        const double e50 = std::abs(exact_to_estimate_ratio(50) - 1);
        const double e200 = std::abs(exact_to_estimate_ratio(200) - 1);
        o.require(e50 < 0.05, "N=50 ratio error " + std::to_string(e50));
        o.require(e200 < 0.02, "N=200 ratio error " + std::to_string(e200));
        o.require(e200 < e50, "accuracy does not improve");
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
