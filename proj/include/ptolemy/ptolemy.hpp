#pragma once

#include <string>

#include "ptolemy/polygon.hpp"

namespace ptolemy {

// Whenever two members cross, every connecting pair of their endpoints that
// is a diagonal is also a member.
bool is_ptolemy_pairwise(const Diagram& dg);

// nc(nc(dg)) == dg.
bool is_fixed_by_ncnc(const Diagram& dg);

// Pair of diagonal sets encoding a torsion pair: y is nc(x) rotated by one
// vertex, and no member of x crosses any member of y rotated back.
struct TorsionPair {
    Diagram x;
    Diagram y;
    friend bool operator==(const TorsionPair&, const TorsionPair&) = default;
};

// Throws NotPtolemy unless is_ptolemy_pairwise(dg).
TorsionPair torsion_pair(const Diagram& dg);

// Two lines: `X: <diagram>` and `Y: <diagram>`.
std::string to_string(const TorsionPair& tp);

}  // namespace ptolemy
