#pragma once

// Vertices, diagonals and diagonal sets of a labeled convex N-gon.
//
// Vertices are 1..N counterclockwise; the distinguished base edge is {1, N}.
// Diagonals of the N-gon are indexed 0..N(N-3)/2-1 in lexicographic (a, b)
// order and a Diagram is a bit mask over that index space.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptolemy/error.hpp"

namespace ptolemy {

inline constexpr int kMaxPolygon = 32;

constexpr int num_diagonals(int n) noexcept { return n < 4 ? 0 : n * (n - 3) / 2; }

inline constexpr int kMaxDiagonals = num_diagonals(kMaxPolygon);

// Fixed-width bit set over diagonal indices. Ordering compares the masks as
// unsigned integers (bit i has weight 2^i).
class DiagonalSet {
public:
    static constexpr int kWords = (kMaxDiagonals + 63) / 64;

    constexpr DiagonalSet() = default;

    constexpr bool test(int i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    constexpr void set(int i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    constexpr void reset(int i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    constexpr int count() const noexcept {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    constexpr bool none() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    constexpr bool intersects(const DiagonalSet& o) const noexcept {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    constexpr bool is_subset_of(const DiagonalSet& o) const noexcept {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    constexpr DiagonalSet& operator|=(const DiagonalSet& o) noexcept {
        for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    constexpr DiagonalSet& operator&=(const DiagonalSet& o) noexcept {
        for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    constexpr DiagonalSet& subtract(const DiagonalSet& o) noexcept {
        for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend constexpr DiagonalSet operator|(DiagonalSet a, const DiagonalSet& b) noexcept { return a |= b; }
    friend constexpr DiagonalSet operator&(DiagonalSet a, const DiagonalSet& b) noexcept { return a &= b; }

    // Calls f(index) for every set bit in increasing order.
    template <class F>
    constexpr void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
                f(w * 64 + std::countr_zero(bits));
        }
    }

    // Low 64 bits, valid as the whole mask when N <= 13.
    constexpr std::uint64_t low_word() const noexcept { return words_[0]; }
    static constexpr DiagonalSet from_low_word(std::uint64_t w) noexcept {
        DiagonalSet s;
        s.words_[0] = w;
        return s;
    }

    friend constexpr bool operator==(const DiagonalSet&, const DiagonalSet&) = default;
    friend constexpr std::strong_ordering operator<=>(const DiagonalSet& a, const DiagonalSet& b) noexcept {
        for (int i = kWords - 1; i >= 0; --i)
            if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
        return std::strong_ordering::equal;
    }

private:
    std::array<std::uint64_t, kWords> words_{};
};

// An unordered pair of non-neighbouring vertices of an N-gon, stored a < b.
class Diagonal {
public:
    // Accepts endpoints in either order; throws InvalidInput unless {a, b}
    // is a diagonal (not an edge, not a vertex) of the n-gon.
    Diagonal(int n, int a, int b);

    int n() const noexcept { return n_; }
    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    int index() const noexcept;

    static bool is_diagonal(int n, int a, int b) noexcept;

    friend bool operator==(const Diagonal&, const Diagonal&) = default;
    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;

private:
    int n_;
    int a_;
    int b_;
};

// Read-only lookup tables for one polygon size: index <-> endpoints and the
// crossing mask of every diagonal. Built once, shared by all threads.
struct PolygonTables {
    int n = 0;
    int count = 0;
    std::vector<std::pair<int, int>> endpoints;   // by index
    std::vector<int> index_of;                    // (a, b) -> index or -1, row-major (n+1)^2
    std::vector<DiagonalSet> crossing;            // by index
    DiagonalSet all;

    int index(int a, int b) const noexcept {
        if (a > b) std::swap(a, b);
        return index_of[a * (n + 1) + b];
    }
};

// Throws CapacityError for n outside [2, kMaxPolygon].
const PolygonTables& polygon_tables(int n);

class Diagram {
public:
    explicit Diagram(int n);
    Diagram(int n, std::initializer_list<std::pair<int, int>> diagonals);

    // Keeps only bits that are valid diagonal indices for n.
    static Diagram from_bits(int n, const DiagonalSet& bits);
    static Diagram full(int n);

    int n() const noexcept { return n_; }
    const DiagonalSet& bits() const noexcept { return bits_; }

    bool contains(const Diagonal& d) const;
    void insert(const Diagonal& d);
    void erase(const Diagonal& d);
    int size() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }
    bool is_subset_of(const Diagram& o) const;

    // Members in lexicographic order.
    std::vector<Diagonal> diagonals() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;

private:
    Diagram(int n, const DiagonalSet& bits) : n_(n), bits_(bits) {}
    void check_same_polygon(const Diagonal& d) const;

    int n_;
    DiagonalSet bits_;
};

struct ExtDim {
    int value = 0;
    friend bool operator==(const ExtDim&, const ExtDim&) = default;
};

// True iff exactly one endpoint of d2 lies strictly inside (d1.a, d1.b).
// Diagonals sharing an endpoint, and a diagonal with itself, never cross.
bool crosses(const Diagonal& d1, const Diagonal& d2);

ExtDim ext_dim(const Diagonal& a, const Diagonal& b);

// Vertex v goes to ((v - 1 + k) mod N) + 1. Negative k rotates clockwise.
Diagonal rotate(const Diagonal& d, int k);
Diagram rotate(const Diagram& dg, int k);

// All diagonals of the polygon crossing no member of dg.
Diagram nc(const Diagram& dg);

// Text form `N; a-b a-b ...`, diagonals in lexicographic order; `N;` when empty.
std::string to_string(const Diagram& dg);
std::string to_string(const Diagonal& d);

Diagram parse_diagram(std::string_view text);

}  // namespace ptolemy
