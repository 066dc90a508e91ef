#include "ptolemy/decomposition.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace ptolemy {

std::string_view to_string(RegionKind kind) noexcept {
    switch (kind) {
        case RegionKind::DegenerateLeaf: return "DegenerateLeaf";
        case RegionKind::EmptyCell: return "EmptyCell";
        case RegionKind::Clique: return "Clique";
    }
    return "?";
}

namespace {

class Decomposer {
public:
    explicit Decomposer(const Diagram& dg) : t_(polygon_tables(dg.n())), members_(dg.bits()) {
        members_.for_each([&](int i) {
            if (!t_.crossing[i].intersects(members_)) skeleton_.set(i);
        });
    }

    // Region on the sub-polygon lo..hi with base edge {lo, hi}.
    std::optional<Region> region(int lo, int hi) {
        Region r;
        if (hi - lo == 1) {
            r.boundary = {lo, hi};
            return r;
        }
        r.boundary = face(lo, hi);
        const auto& f = r.boundary;
        const int m = static_cast<int>(f.size());
        int present = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 2; j < m; ++j)
                if (!(i == 0 && j == m - 1) && members_.test(t_.index(f[i], f[j]))) ++present;
        const int internal = m * (m - 3) / 2;
        if (present == 0) {
            r.kind = RegionKind::EmptyCell;
        } else if (present == internal) {
            r.kind = RegionKind::Clique;
        } else {
            bad_face_ = f;
            return std::nullopt;
        }
        for (int j = 0; j + 1 < m; ++j) {
            auto child = region(f[j], f[j + 1]);
            if (!child) return std::nullopt;
            r.children.push_back(GluedChild{f[j], f[j + 1], std::move(*child)});
        }
        return r;
    }

    std::vector<int> bad_face_;

private:
    // Walk from lo toward hi, always taking the farthest skeleton neighbour.
    std::vector<int> face(int lo, int hi) const {
        std::vector<int> f{lo};
        int c = lo;
        while (c != hi) {
            int next = c + 1;
            for (int v = hi; v > c + 1; --v) {
                if (c == lo && v == hi) continue;
                int k = t_.index(c, v);
                if (k >= 0 && skeleton_.test(k)) {
                    next = v;
                    break;
                }
            }
            f.push_back(next);
            c = next;
        }
        return f;
    }

    const PolygonTables& t_;
    DiagonalSet members_;
    DiagonalSet skeleton_;
};

void collect(const Region& r, int n, const PolygonTables& t, DiagonalSet& out, int lo, int hi) {
    const auto& f = r.boundary;
    const int m = static_cast<int>(f.size());
    auto fail = [](const std::string& why) { throw InvalidInput("invalid decomposition: " + why); };
    if (m < 2 || f.front() != lo || f.back() != hi) fail("region boundary does not span its base edge");
    for (int j = 0; j + 1 < m; ++j)
        if (f[j] >= f[j + 1]) fail("region boundary is not increasing");
    switch (r.kind) {
        case RegionKind::DegenerateLeaf:
            if (m != 2 || hi - lo != 1 || !r.children.empty()) fail("degenerate leaf must be a single polygon edge");
            return;
        case RegionKind::EmptyCell:
            if (m < 3) fail("empty cell needs at least three vertices");
            break;
        case RegionKind::Clique:
            if (m < 4) fail("clique needs at least four vertices");
            for (int i = 0; i < m; ++i)
                for (int j = i + 2; j < m; ++j)
                    if (!(i == 0 && j == m - 1)) out.set(t.index(f[i], f[j]));
            break;
    }
    if (static_cast<int>(r.children.size()) != m - 1) fail("region must have one child per non-base edge");
    for (int j = 0; j + 1 < m; ++j) {
        const auto& c = r.children[j];
        if (c.a != f[j] || c.b != f[j + 1]) fail("child glued along the wrong edge");
        if (f[j + 1] - f[j] >= 2) out.set(t.index(f[j], f[j + 1]));
        collect(c.region, n, t, out, f[j], f[j + 1]);
    }
}

Region exchange(const Region& r) {
    Region out = r;
    if (r.kind == RegionKind::Clique)
        out.kind = RegionKind::EmptyCell;
    else if (r.kind == RegionKind::EmptyCell && r.boundary.size() >= 4)
        out.kind = RegionKind::Clique;
    for (auto& c : out.children) c.region = exchange(c.region);
    return out;
}

void append_region(std::string& s, const Region& r) {
    s += '(';
    s += to_string(r.kind);
    s += " boundary=[";
    for (std::size_t i = 0; i < r.boundary.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(r.boundary[i]);
    }
    s += "] children=[";
    for (std::size_t i = 0; i < r.children.size(); ++i) {
        if (i) s += ", ";
        const auto& c = r.children[i];
        s += "edge=(" + std::to_string(c.a) + "," + std::to_string(c.b) + "): ";
        append_region(s, c.region);
    }
    s += "])";
}

class TreeParser {
public:
    explicit TreeParser(std::string_view s) : s_(s) {}

    Region region() {
        expect('(');
        Region r;
        std::string_view kind = word();
        if (kind == "DegenerateLeaf")
            r.kind = RegionKind::DegenerateLeaf;
        else if (kind == "EmptyCell")
            r.kind = RegionKind::EmptyCell;
        else if (kind == "Clique")
            r.kind = RegionKind::Clique;
        else
            fail("unknown region kind '" + std::string(kind) + "'");
        keyword("boundary=");
        expect('[');
        if (!peek(']')) {
            do r.boundary.push_back(number());
            while (accept(','));
        }
        expect(']');
        keyword("children=");
        expect('[');
        if (!peek(']')) {
            do {
                keyword("edge=");
                expect('(');
                GluedChild c;
                c.a = number();
                expect(',');
                c.b = number();
                expect(')');
                expect(':');
                c.region = region();
                r.children.push_back(std::move(c));
            } while (accept(','));
        }
        expect(']');
        expect(')');
        return r;
    }

    void finish() {
        skip();
        if (pos_ != s_.size()) fail("trailing characters");
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidInput("malformed decomposition at offset " + std::to_string(pos_) + ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    void keyword(std::string_view kw) {
        skip();
        if (s_.substr(pos_, kw.size()) != kw) fail("expected '" + std::string(kw) + "'");
        pos_ += kw.size();
    }
    std::string_view word() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }
    int number() {
        skip();
        int v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (ec != std::errc{}) fail("expected a vertex number");
        pos_ = static_cast<std::size_t>(ptr - s_.data());
        return v;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::variant<CellDecomposition, NonPtolemyFace> try_decompose(const Diagram& dg) {
    Decomposer d(dg);
    auto root = d.region(1, dg.n());
    if (!root) return NonPtolemyFace{std::move(d.bad_face_)};
    return CellDecomposition{dg.n(), std::move(*root)};
}

CellDecomposition decompose(const Diagram& dg) {
    auto r = try_decompose(dg);
    if (auto* bad = std::get_if<NonPtolemyFace>(&r)) throw NotPtolemy(std::move(bad->face));
    return std::get<CellDecomposition>(std::move(r));
}

Diagram recompose(const CellDecomposition& cd) {
    if (cd.n < 2 || cd.n > kMaxPolygon) throw InvalidInput("invalid decomposition: polygon size out of range");
    const auto& t = polygon_tables(cd.n);
    DiagonalSet out;
    collect(cd.root, cd.n, t, out, 1, cd.n);
    return Diagram::from_bits(cd.n, out);
}

CellDecomposition exchange_cells_and_cliques(const CellDecomposition& cd) {
    return CellDecomposition{cd.n, exchange(cd.root)};
}

std::string to_string(const CellDecomposition& cd) {
    std::string s;
    append_region(s, cd.root);
    return s;
}

CellDecomposition parse_decomposition(std::string_view text) {
    TreeParser p(text);
    Region root = p.region();
    p.finish();
    if (root.boundary.size() < 2 || root.boundary.front() != 1)
        throw InvalidInput("invalid decomposition: root boundary must run from 1 to N");
    CellDecomposition cd{root.boundary.back(), std::move(root)};
    recompose(cd);  // structural validation
    return cd;
}

}  // namespace ptolemy
