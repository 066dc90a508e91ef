#include "ptolemy/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "ptolemy/ptolemy.hpp"
#include "ptolemy/series.hpp"

namespace ptolemy {

namespace {

void check_brute_range(int n, int max_n) {
    int cap = std::min(max_n, kHardMaxBrutePolygon);
    if (n < 3 || n > cap)
        throw CapacityError("brute-force enumeration supports 3 <= N <= " + std::to_string(cap) + ", got N=" +
                            std::to_string(n));
}

// 64-bit crossing and forced-diagonal tables; valid while N(N-3)/2 <= 64.
struct BruteTables {
    int count = 0;
    std::vector<std::uint64_t> crossing;  // by index
    std::vector<std::uint64_t> forced;    // by i * count + j, i < j crossing

    explicit BruteTables(int n) {
        const auto& t = polygon_tables(n);
        count = t.count;
        crossing.resize(count);
        forced.assign(static_cast<std::size_t>(count) * count, 0);
        for (int i = 0; i < count; ++i) {
            crossing[i] = t.crossing[i].low_word();
            auto [a1, a2] = t.endpoints[i];
            for (int j = 0; j < count; ++j) {
                if (!t.crossing[i].test(j)) continue;
                auto [b1, b2] = t.endpoints[j];
                std::uint64_t m = 0;
                for (auto [u, v] : {std::pair{a1, b1}, {a1, b2}, {a2, b1}, {a2, b2}}) {
                    int k = t.index(u, v);
                    if (k >= 0) m |= std::uint64_t{1} << k;
                }
                forced[static_cast<std::size_t>(i) * count + j] = m;
            }
        }
    }

    bool is_ptolemy(std::uint64_t s) const noexcept {
        for (std::uint64_t rest = s; rest; rest &= rest - 1) {
            int i = std::countr_zero(rest);
            // partners above i only; each crossing pair is checked once
            std::uint64_t partners = crossing[i] & s & ~((std::uint64_t{2} << i) - 1);
            const std::uint64_t* row = forced.data() + static_cast<std::size_t>(i) * count;
            for (; partners; partners &= partners - 1)
                if (row[std::countr_zero(partners)] & ~s) return false;
        }
        return true;
    }
};

constexpr int kBlockBits = 16;

template <class Emit>
void scan_block(const BruteTables& bt, std::uint64_t block, int block_bits, Emit&& emit) {
    const std::uint64_t begin = block << block_bits;
    const std::uint64_t end = begin + (std::uint64_t{1} << block_bits);
    for (std::uint64_t s = begin; s != end; ++s)
        if (bt.is_ptolemy(s)) emit(s);
}

class RecursiveGenerator {
public:
    using Sink = std::function<void(const DiagonalSet&)>;

    explicit RecursiveGenerator(int n) : t_(polygon_tables(n)) {}

    void interval(int lo, int hi, const DiagonalSet& acc, const Sink& sink) const {
        if (hi - lo == 1) {
            sink(acc);
            return;
        }
        const int interior = hi - lo - 1;
        std::vector<int> seq;
        for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << interior); ++pick) {
            seq.clear();
            seq.push_back(lo);
            for (int v = 0; v < interior; ++v)
                if (pick >> v & 1u) seq.push_back(lo + 1 + v);
            seq.push_back(hi);
            DiagonalSet glued = acc;
            for (std::size_t j = 0; j + 1 < seq.size(); ++j)
                if (seq[j + 1] - seq[j] >= 2) glued.set(t_.index(seq[j], seq[j + 1]));
            children(seq, 0, glued, sink);
            if (std::popcount(pick) >= 2) {
                DiagonalSet clique = glued;
                const int m = static_cast<int>(seq.size());
                for (int i = 0; i < m; ++i)
                    for (int j = i + 2; j < m; ++j)
                        if (!(i == 0 && j == m - 1)) clique.set(t_.index(seq[i], seq[j]));
                children(seq, 0, clique, sink);
            }
        }
    }

private:
    void children(const std::vector<int>& seq, std::size_t j, const DiagonalSet& acc, const Sink& sink) const {
        if (j + 1 == seq.size()) {
            sink(acc);
            return;
        }
        interval(seq[j], seq[j + 1], acc, [&](const DiagonalSet& a) { children(seq, j + 1, a, sink); });
    }

    const PolygonTables& t_;
};

std::vector<std::uint64_t> burnside_fixed_counts(const std::vector<Diagram>& all, int n) {
    std::vector<std::uint64_t> fixed(n, 0);
    const long long total = static_cast<long long>(all.size());
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(n, 0);
#pragma omp for schedule(static)
        for (long long i = 0; i < total; ++i) {
            const Diagram& dg = all[i];
            for (int k = 0; k < n; ++k)
                if (rotate(dg, k) == dg) ++local[k];
        }
#pragma omp critical
        for (int k = 0; k < n; ++k) fixed[k] += local[k];
    }
    return fixed;
}

mpz_class average_fixed(const std::vector<std::uint64_t>& fixed, int n) {
    mpz_class sum = 0;
    for (auto f : fixed) sum += mpz_class(std::to_string(f));
    if (sum % n != 0) throw std::logic_error("Burnside sum not divisible by the group order");
    return sum / n;
}

}  // namespace

std::vector<Diagram> enumerate_brute(int n, int max_n) {
    check_brute_range(n, max_n);
    const BruteTables bt(n);
    const int block_bits = std::min(bt.count, kBlockBits);
    const long long blocks = 1LL << (bt.count - block_bits);
    std::vector<std::vector<std::uint64_t>> found(blocks);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long b = 0; b < blocks; ++b)
        scan_block(bt, static_cast<std::uint64_t>(b), block_bits, [&](std::uint64_t s) { found[b].push_back(s); });
    std::vector<Diagram> out;
    for (const auto& block : found)
        for (auto s : block) out.push_back(Diagram::from_bits(n, DiagonalSet::from_low_word(s)));
    return out;
}

std::uint64_t count_brute(int n, int max_n) {
    check_brute_range(n, max_n);
    const BruteTables bt(n);
    const int block_bits = std::min(bt.count, kBlockBits);
    const long long blocks = 1LL << (bt.count - block_bits);
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total)
    for (long long b = 0; b < blocks; ++b) {
        std::uint64_t local = 0;
        scan_block(bt, static_cast<std::uint64_t>(b), block_bits, [&](std::uint64_t) { ++local; });
        total += local;
    }
    return total;
}

void enumerate_recursive(int n, const std::function<void(const Diagram&)>& visit) {
    RecursiveGenerator gen(n);
    gen.interval(1, n, DiagonalSet{}, [&](const DiagonalSet& s) { visit(Diagram::from_bits(n, s)); });
}

std::vector<Diagram> enumerate_recursive(int n) {
    std::vector<Diagram> out;
    enumerate_recursive(n, [&](const Diagram& dg) { out.push_back(dg); });
    return out;
}

mpz_class count_recursive(int n) {
    if (n < 2) throw CapacityError("polygon size must be at least 2");
    // by_vertices[L]: diagrams of an L-vertex sub-polygon with fixed base edge.
    // parts[k][e]: ways to fill a path of e boundary edges split into k glued
    // sub-polygons, weighted by their counts.
    std::vector<mpz_class> by_vertices(n + 1, 0);
    std::vector<std::vector<mpz_class>> parts(n + 1, std::vector<mpz_class>(n + 1, 0));
    by_vertices[2] = 1;
    parts[1][1] = 1;
    for (int e = 2; e <= n - 1; ++e) {
        mpz_class empty_cells = 0, cliques = 0;
        for (int k = 2; k <= e; ++k) {
            mpz_class& w = parts[k][e];
            for (int g = 1; g <= e - k + 1; ++g) w += by_vertices[g + 1] * parts[k - 1][e - g];
            empty_cells += w;
            if (k >= 3) cliques += w;
        }
        by_vertices[e + 1] = empty_cells + cliques;
        parts[1][e] = by_vertices[e + 1];
    }
    return by_vertices[n];
}

Diagram canonical_rotation_form(const Diagram& dg) {
    Diagram best = dg;
    for (int k = 1; k < dg.n(); ++k) {
        Diagram r = rotate(dg, k);
        if (r.bits() < best.bits()) best = r;
    }
    return best;
}

mpz_class count_orbits_burnside(int n, int max_n) {
    check_brute_range(n, max_n);
    return average_fixed(burnside_fixed_counts(enumerate_brute(n, max_n), n), n);
}

mpz_class count_orbits_canonical(int n, int max_n) {
    std::set<DiagonalSet> forms;
    for (const auto& dg : enumerate_brute(n, max_n)) forms.insert(canonical_rotation_form(dg).bits());
    return mpz_class(std::to_string(forms.size()));
}

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::Formula: return "formula";
        case Method::Series: return "series";
        case Method::Lagrange: return "lagrange";
        case Method::Brute: return "brute";
        case Method::Recursive: return "recursive";
    }
    return "?";
}

Method parse_method(std::string_view s) {
    for (Method m : {Method::Formula, Method::Series, Method::Lagrange, Method::Brute, Method::Recursive})
        if (to_string(m) == s) return m;
    throw InvalidInput("unknown method '" + std::string(s) + "'");
}

mpz_class count_diagrams(int n, Method method, int max_brute_n) {
    if (n < 3) throw CapacityError("counting needs N >= 3");
    switch (method) {
        case Method::Formula: return count_closed_formula(n - 3);
        case Method::Lagrange: return lagrange_coefficient(n - 1);
        case Method::Series: return integer_coefficients(solve_ptolemy_series(n - 1)).back();
        case Method::Brute: return mpz_class(std::to_string(count_brute(n, max_brute_n)));
        case Method::Recursive: return count_recursive(n);
    }
    return 0;
}

mpz_class count_rotation_classes(int n, Method method, int max_brute_n) {
    if (n < 3) throw CapacityError("counting needs N >= 3");
    switch (method) {
        case Method::Brute: return count_orbits_burnside(n, max_brute_n);
        case Method::Recursive: {
            std::vector<std::uint64_t> fixed(n, 0);
            enumerate_recursive(n, [&](const Diagram& dg) {
                for (int k = 0; k < n; ++k)
                    if (rotate(dg, k) == dg) ++fixed[k];
            });
            return average_fixed(fixed, n);
        }
        default: return integer_coefficients(rotation_gf(n - 1)).back();
    }
}

EnumerationReport enumeration_report(int n, Method method, int max_brute_n) {
    EnumerationReport r;
    r.n_gon = n;
    r.method = method;
    r.total = count_diagrams(n, method, max_brute_n);
    r.orbit_total = count_rotation_classes(n, method, max_brute_n);
    return r;
}

namespace reference {

std::vector<Diagram> enumerate_brute(int n) {
    check_brute_range(n, kHardMaxBrutePolygon);
    const int d = num_diagonals(n);
    std::vector<Diagram> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << d); ++s) {
        Diagram dg = Diagram::from_bits(n, DiagonalSet::from_low_word(s));
        if (is_ptolemy_pairwise(dg)) out.push_back(dg);
    }
    return out;
}

mpz_class count_orbits_burnside(int n) {
    auto all = reference::enumerate_brute(n);
    std::vector<std::uint64_t> fixed(n, 0);
    for (const auto& dg : all)
        for (int k = 0; k < n; ++k)
            if (rotate(dg, k) == dg) ++fixed[k];
    return average_fixed(fixed, n);
}

}  // namespace reference

}  // namespace ptolemy
