#pragma once

#include <string>
#include <vector>

#include "qsi/quiver.hpp"

namespace qsi {

enum class GraphKind { Dynkin, Euclidean, Wild };

struct GraphClass {
    GraphKind kind = GraphKind::Wild;
    std::string type;  // "A3", "D~4", "E~6", ...; empty for Wild

    bool operator==(const GraphClass&) const = default;
};

/// Positive-definiteness test of q_Q plus a pattern match on the diagram.
GraphClass classify_graph(const Quiver& q);

/// Primitive positive generator of the radical of q_Q.
DimVec radical_generator(const Quiver& q);  // NotEuclidean

/// One Coxeter orbit of non-homogeneous simple regular dimension vectors.
/// vectors[i+1 mod u] == C(vectors[i]); the cycle starts at the
/// lexicographically smallest member.
struct OrbitFamily {
    std::vector<DimVec> vectors;

    std::size_t size() const { return vectors.size(); }
};

struct EuclideanStructure {
    QuiverPtr quiver;
    GraphClass cls;
    DimVec h;
    Weight defect_weight;  // coordinates of <h,->
    std::vector<OrbitFamily> families;
};

Int defect(const EuclideanStructure& es, const IntVec& d);

/// Coxeter element C = s_1 s_2 ... s_n applied reflection-at-sink first
/// (s_n, then s_{n-1}, ...); relies on the topological vertex order.
IntVec coxeter_transform(const Quiver& q, const IntVec& a);
IntVec coxeter_inverse(const Quiver& q, const IntVec& a);

/// All b with 0 < b <= h componentwise, b != h, q_Q(b) = 1 and defect 0,
/// by exhaustive scan of the box [0,h]. Sorted lexicographically.
std::vector<DimVec> defect_zero_roots_below_h(const Quiver& q);  // NotEuclidean

/// Orbit families of the minimal defect-zero roots, fully validated.
EuclideanStructure simple_regular_orbits(const QuiverPtr& q);
// throws NotEuclidean, StructureCheckFailed

/// Re-validates every OrbitFamily invariant; used by the verification
/// harness to surface corrupted structures.
void check_structure(const EuclideanStructure& es);  // StructureCheckFailed

}  // namespace qsi
