#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsi/euclidean.hpp"

namespace qsi {

/// d = p*h + sum over families of labels[i] * e_i, with every label
/// nonnegative and at least one zero label per family.
struct CanonicalDecomposition {
    Int p;
    std::vector<IntVec> coefficients;  // one label vector per family

    bool operator==(const CanonicalDecomposition&) const = default;
};

CanonicalDecomposition canonical_decomposition(const EuclideanStructure& es,
                                               const DimVec& d);  // NotRegular
bool is_regular(const EuclideanStructure& es, const DimVec& d);

/// Polygon of one family with the canonical labels attached to its
/// vertices; edge k runs from vertex k to vertex k+1 mod u and carries e_k.
struct LabeledPolygon {
    std::size_t family;
    IntVec labels;

    std::size_t size() const { return labels.size(); }
};

LabeledPolygon labeled_polygon(const CanonicalDecomposition& cd, std::size_t family);

/// Clockwise arc from polygon vertex `start` to vertex `end`, traversing
/// edges e_start .. e_{end-1} (cyclically); 1 <= length <= u-1.
struct Arc {
    std::size_t family;
    std::size_t start;
    std::size_t end;

    std::size_t length(std::size_t u) const { return (end + u - start) % u; }
    bool operator==(const Arc&) const = default;
};

/// Arcs with equal extreme labels and strictly larger interior labels,
/// ordered by start vertex then length.
std::vector<Arc> admissible_arcs(const LabeledPolygon& poly);

struct ArcGeneratorData {
    std::string id;       // "E:family:i:j"
    std::string display;  // E_{i,j} with family ticks
    std::size_t socle;    // i
    std::size_t top;      // j
    DimVec dim;
    Weight weight;
};

ArcGeneratorData arc_generator_data(const EuclideanStructure& es, const LabeledPolygon& poly,
                                    const Arc& arc);

/// Sum of the family's edge vectors along the arc.
DimVec arc_dimension(const EuclideanStructure& es, const Arc& arc);

/// The admissible arcs between cyclically consecutive zero-labeled
/// vertices; they partition the polygon's edges and their dimensions sum
/// to h. None if only a single vertex is labeled zero.
std::optional<std::vector<Arc>> min_level_partition(const LabeledPolygon& poly);

struct GenericSummand {
    DimVec dim;
    Int multiplicity;

    bool operator==(const GenericSummand&) const = default;
};

/// Dimension vectors of the indecomposable summands of a general
/// representation: p copies of h plus the arc sums peeled off the labeled
/// polygons level by level.
struct GenericDecomposition {
    Int h_multiplicity;
    std::vector<GenericSummand> summands;  // non-h summands, sorted by dim

    bool operator==(const GenericDecomposition&) const = default;
};

GenericDecomposition generic_decomposition(const EuclideanStructure& es,
                                           const CanonicalDecomposition& cd);

}  // namespace qsi
