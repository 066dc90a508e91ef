#include "ptolemy/polygon.hpp"

#include <charconv>
#include <memory>
#include <mutex>

namespace ptolemy {

namespace {

bool interleaved(int a1, int b1, int a2, int b2) noexcept {
    bool a2_inside = a1 < a2 && a2 < b1;
    bool b2_inside = a1 < b2 && b2 < b1;
    return a2_inside != b2_inside && a2 != a1 && a2 != b1 && b2 != a1 && b2 != b1;
}

PolygonTables build_tables(int n) {
    PolygonTables t;
    t.n = n;
    t.index_of.assign(static_cast<std::size_t>(n + 1) * (n + 1), -1);
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 2; b <= n; ++b) {
            if (a == 1 && b == n) continue;
            t.index_of[a * (n + 1) + b] = static_cast<int>(t.endpoints.size());
            t.endpoints.emplace_back(a, b);
        }
    }
    t.count = static_cast<int>(t.endpoints.size());
    t.crossing.resize(t.count);
    for (int i = 0; i < t.count; ++i) {
        t.all.set(i);
        auto [a1, b1] = t.endpoints[i];
        for (int j = 0; j < t.count; ++j) {
            auto [a2, b2] = t.endpoints[j];
            if (interleaved(a1, b1, a2, b2)) t.crossing[i].set(j);
        }
    }
    return t;
}

int wrap_vertex(int v, int k, int n) noexcept {
    int r = (v - 1 + k) % n;
    if (r < 0) r += n;
    return r + 1;
}

}  // namespace

const PolygonTables& polygon_tables(int n) {
    if (n < 2 || n > kMaxPolygon)
        throw CapacityError("polygon size " + std::to_string(n) + " outside [2, " +
                            std::to_string(kMaxPolygon) + "]");
    static std::array<std::unique_ptr<const PolygonTables>, kMaxPolygon + 1> cache;
    static std::array<std::once_flag, kMaxPolygon + 1> once;
    std::call_once(once[n], [n] { cache[n] = std::make_unique<const PolygonTables>(build_tables(n)); });
    return *cache[n];
}

bool Diagonal::is_diagonal(int n, int a, int b) noexcept {
    if (n < 2 || n > kMaxPolygon) return false;
    if (a > b) std::swap(a, b);
    return a >= 1 && b <= n && b - a >= 2 && !(a == 1 && b == n);
}

Diagonal::Diagonal(int n, int a, int b) : n_(n), a_(std::min(a, b)), b_(std::max(a, b)) {
    if (!is_diagonal(n, a, b))
        throw InvalidInput("{" + std::to_string(a) + "," + std::to_string(b) +
                           "} is not a diagonal of the " + std::to_string(n) + "-gon");
}

int Diagonal::index() const noexcept { return polygon_tables(n_).index(a_, b_); }

Diagram::Diagram(int n) : n_(n) { polygon_tables(n); }

Diagram::Diagram(int n, std::initializer_list<std::pair<int, int>> diagonals) : Diagram(n) {
    for (auto [a, b] : diagonals) insert(Diagonal(n, a, b));
}

Diagram Diagram::from_bits(int n, const DiagonalSet& bits) {
    return Diagram(n, bits & polygon_tables(n).all);
}

Diagram Diagram::full(int n) { return Diagram(n, polygon_tables(n).all); }

void Diagram::check_same_polygon(const Diagonal& d) const {
    if (d.n() != n_)
        throw InvalidInput("diagonal of the " + std::to_string(d.n()) + "-gon used with a " +
                           std::to_string(n_) + "-gon diagram");
}

bool Diagram::contains(const Diagonal& d) const {
    check_same_polygon(d);
    return bits_.test(d.index());
}

void Diagram::insert(const Diagonal& d) {
    check_same_polygon(d);
    bits_.set(d.index());
}

void Diagram::erase(const Diagonal& d) {
    check_same_polygon(d);
    bits_.reset(d.index());
}

bool Diagram::is_subset_of(const Diagram& o) const {
    if (o.n_ != n_) throw InvalidInput("diagrams of different polygons");
    return bits_.is_subset_of(o.bits_);
}

std::vector<Diagonal> Diagram::diagonals() const {
    const auto& t = polygon_tables(n_);
    std::vector<Diagonal> out;
    out.reserve(size());
    bits_.for_each([&](int i) { out.emplace_back(n_, t.endpoints[i].first, t.endpoints[i].second); });
    return out;
}

bool crosses(const Diagonal& d1, const Diagonal& d2) {
    if (d1.n() != d2.n()) throw InvalidInput("crossing test on diagonals of different polygons");
    return interleaved(d1.a(), d1.b(), d2.a(), d2.b());
}

ExtDim ext_dim(const Diagonal& a, const Diagonal& b) { return ExtDim{crosses(a, b) ? 1 : 0}; }

Diagonal rotate(const Diagonal& d, int k) {
    return Diagonal(d.n(), wrap_vertex(d.a(), k, d.n()), wrap_vertex(d.b(), k, d.n()));
}

Diagram rotate(const Diagram& dg, int k) {
    const int n = dg.n();
    const auto& t = polygon_tables(n);
    DiagonalSet out;
    dg.bits().for_each([&](int i) {
        auto [a, b] = t.endpoints[i];
        out.set(t.index(wrap_vertex(a, k, n), wrap_vertex(b, k, n)));
    });
    return Diagram::from_bits(n, out);
}

Diagram nc(const Diagram& dg) {
    const auto& t = polygon_tables(dg.n());
    DiagonalSet out;
    for (int i = 0; i < t.count; ++i)
        if (!t.crossing[i].intersects(dg.bits())) out.set(i);
    return Diagram::from_bits(dg.n(), out);
}

std::string to_string(const Diagonal& d) { return std::to_string(d.a()) + "-" + std::to_string(d.b()); }

std::string to_string(const Diagram& dg) {
    std::string s = std::to_string(dg.n()) + ";";
    for (const auto& d : dg.diagonals()) {
        s += ' ';
        s += to_string(d);
    }
    return s;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view context) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw InvalidInput("malformed integer '" + std::string(s) + "' in " + std::string(context));
    return v;
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
    const std::string context = "diagram '" + std::string(trim(text)) + "'";
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw InvalidInput("missing ';' in " + context);
    int n = parse_int(trim(text.substr(0, semi)), context);
    if (n < 2 || n > kMaxPolygon)
        throw InvalidInput("polygon size " + std::to_string(n) + " outside [2, " + std::to_string(kMaxPolygon) +
                           "] in " + context);
    Diagram dg(n);
    std::string_view rest = text.substr(semi + 1);
    while (true) {
        while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
        if (rest.empty()) break;
        std::size_t end = 0;
        while (end < rest.size() && !is_space(rest[end])) ++end;
        std::string_view tok = rest.substr(0, end);
        rest.remove_prefix(end);
        auto dash = tok.find('-');
        if (dash == std::string_view::npos || dash == 0)
            throw InvalidInput("malformed diagonal '" + std::string(tok) + "' in " + context);
        int a = parse_int(tok.substr(0, dash), context);
        int b = parse_int(tok.substr(dash + 1), context);
        if (a < 1 || a > n || b < 1 || b > n)
            throw InvalidInput("vertex out of range in '" + std::string(tok) + "' in " + context);
        if (!Diagonal::is_diagonal(n, a, b))
            throw InvalidInput("'" + std::string(tok) + "' is an edge, not a diagonal, in " + context);
        Diagonal d(n, a, b);
        if (dg.contains(d)) throw InvalidInput("duplicate diagonal '" + std::string(tok) + "' in " + context);
        dg.insert(d);
    }
    return dg;
}

}  // namespace ptolemy
