#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsi/tubes.hpp"

namespace qsi {

struct Generator {
    enum class Kind { Homogeneous, Arc };

    std::string id;  // "c0".."cp" or "E:family:i:j"
    Kind kind;
    Int index = 0;  // homogeneous: k in 0..p
    std::size_t family = 0;
    Arc arc{0, 0, 0};
    std::string display;
    DimVec dim;  // arc generators only
    Weight weight;

    bool operator==(const Generator&) const = default;
};

/// lhs is a formal sum of homogeneous ids, rhs a formal product of arc ids.
struct Relation {
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    std::size_t family;

    bool operator==(const Relation&) const = default;
};

enum class AlgebraClass { PolynomialRing, Hypersurface, DenseOrbitPolynomial, OutOfScope };

std::string to_string(AlgebraClass c);

struct Presentation {
    DimVec d;
    bool regular = false;
    Int p = 0;
    std::vector<Generator> generators;
    std::vector<Relation> relations;
    AlgebraClass classification = AlgebraClass::OutOfScope;
    std::map<long, Int> weight_space_dims;  // m -> dim SI(Q,d)_{m*defect}
    std::vector<std::string> warnings;

    bool operator==(const Presentation&) const = default;
};

/// p+1 homogeneous generators of weight <h,-> plus one generator per
/// admissible arc per family. Requires a regular d with p >= 1.
std::vector<Generator> generators(const EuclideanStructure& es, const DimVec& d);
// throws NotRegular, DenseOrbitCase

/// One relation per family whose minimal-level arcs partition the polygon:
/// the first such family binds c_0, the second c_p, the third c_0+...+c_p.
std::vector<Relation> relations(const EuclideanStructure& es, const DimVec& d);
// throws NotRegular, DenseOrbitCase

/// Dense-orbit cases are polynomial; otherwise Tietze-style elimination of
/// the homogeneous generators decides between a polynomial ring and a
/// hypersurface.
AlgebraClass classify_algebra(const EuclideanStructure& es, const DimVec& d);

/// binomial(p+m, m).
Int weight_space_dim_formula(const Int& p, const Int& m);

struct PresentationConfig {
    long dim_table_max_m = 4;
};

Presentation make_presentation(const EuclideanStructure& es, const DimVec& d,
                               const PresentationConfig& cfg = {});

}  // namespace qsi
