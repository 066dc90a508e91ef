#pragma once

// Unique decomposition of a Ptolemy diagram with base edge {1, N} into empty
// cells and cliques glued along diagonals.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ptolemy/polygon.hpp"

namespace ptolemy {

enum class RegionKind { DegenerateLeaf, EmptyCell, Clique };

std::string_view to_string(RegionKind kind) noexcept;

struct GluedChild;

// A region bounded by the increasing vertex sequence `boundary`; its base
// edge is {boundary.front(), boundary.back()}. children[j] is glued along
// {boundary[j], boundary[j + 1]}. Polygon edges carry DegenerateLeaf children.
struct Region {
    RegionKind kind = RegionKind::DegenerateLeaf;
    std::vector<int> boundary;
    std::vector<GluedChild> children;

    friend bool operator==(const Region&, const Region&);
};

struct GluedChild {
    int a = 0;
    int b = 0;
    Region region;

    friend bool operator==(const GluedChild&, const GluedChild&) = default;
};

inline bool operator==(const Region& l, const Region& r) {
    return l.kind == r.kind && l.boundary == r.boundary && l.children == r.children;
}

struct CellDecomposition {
    int n = 2;
    Region root;
    friend bool operator==(const CellDecomposition&, const CellDecomposition&) = default;
};

// Face of the non-crossing skeleton holding a proper nonempty subset of its
// internal diagonals.
struct NonPtolemyFace {
    std::vector<int> face;
};

std::variant<CellDecomposition, NonPtolemyFace> try_decompose(const Diagram& dg);

// Throws NotPtolemy carrying the offending face.
CellDecomposition decompose(const Diagram& dg);

// Union of gluing diagonals and clique internals. Throws InvalidInput when
// the tree does not tile the polygon or a region violates its kind's size.
Diagram recompose(const CellDecomposition& cd);

// Same skeleton with empty cells of at least four vertices and cliques
// exchanged; this is the decomposition of nc of the recomposed diagram.
CellDecomposition exchange_cells_and_cliques(const CellDecomposition& cd);

// `(kind boundary=[v1,...] children=[edge=(a,b): <region>, ...])`
std::string to_string(const CellDecomposition& cd);
CellDecomposition parse_decomposition(std::string_view text);

}  // namespace ptolemy
