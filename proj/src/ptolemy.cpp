#include "ptolemy/ptolemy.hpp"

namespace ptolemy {

bool is_ptolemy_pairwise(const Diagram& dg) {
    const auto& t = polygon_tables(dg.n());
    const DiagonalSet& s = dg.bits();
    bool ok = true;
    s.for_each([&](int i) {
        if (!ok) return;
        auto [a1, a2] = t.endpoints[i];
        (t.crossing[i] & s).for_each([&](int j) {
            if (!ok || j < i) return;
            auto [b1, b2] = t.endpoints[j];
            for (auto [u, v] : {std::pair{a1, b1}, {a1, b2}, {a2, b1}, {a2, b2}}) {
                int k = t.index(u, v);
                if (k >= 0 && !s.test(k)) {
                    ok = false;
                    return;
                }
            }
        });
    });
    return ok;
}

bool is_fixed_by_ncnc(const Diagram& dg) { return nc(nc(dg)) == dg; }

TorsionPair torsion_pair(const Diagram& dg) {
    if (!is_ptolemy_pairwise(dg)) throw NotPtolemy();
    return TorsionPair{dg, rotate(nc(dg), 1)};
}

std::string to_string(const TorsionPair& tp) { return "X: " + to_string(tp.x) + "\nY: " + to_string(tp.y); }

}  // namespace ptolemy
