#pragma once

#include <optional>
#include <vector>

#include "qsi/matrix.hpp"
#include "qsi/quiver.hpp"

namespace qsi {

/// Point of Rep(Q, dim): one dim(head) x dim(tail) matrix per arrow.
struct Representation {
    QuiverPtr quiver;
    DimVec dim;
    std::vector<Matrix> maps;
};

Representation make_representation(QuiverPtr q, DimVec dim,
                                   std::vector<Matrix> maps);  // IndexMismatch on bad shapes
Representation zero_representation(QuiverPtr q, DimVec dim);
Representation direct_sum(const Representation& a, const Representation& b);  // QuiverMismatch

/// Element of GL(dim): one invertible square block per vertex.
struct GroupElement {
    QuiverPtr quiver;
    std::vector<Matrix> blocks;
};

GroupElement diagonal_group_element(QuiverPtr q, const DimVec& dim,
                                    const std::vector<std::vector<Rat>>& diag);  // SingularBlock

/// Matrix of the canonical-sequence map
///   (phi(x))_x  |->  (W(a) phi(ta) - phi(ha) V(a))_a
/// from  (+)_x Hom(V(x),W(x))  to  (+)_a Hom(V(ta),W(ha)),
/// in the frozen basis: vertices/arrows in quiver order, Hom blocks
/// row-major. Columns = sum_x a(x)b(x), rows = sum_a a(ta)b(ha); square
/// exactly when <dim V, dim W> = 0.
Matrix build_dvw(const Representation& v, const Representation& w);  // QuiverMismatch

/// c(V,W) = det of the canonical-sequence matrix. Fixing V gives the
/// semi-invariant c^V on Rep(Q, dim W), fixing W gives c_W.
Rat schofield_value(const Representation& v, const Representation& w);  // NotOrthogonal

/// dim Hom = dim ker of the canonical-sequence matrix; ext = hom - <a,b>.
Int hom_dim(const Representation& v, const Representation& w);
Int ext_dim(const Representation& v, const Representation& w);

/// (g.V)(a) = g(ha) V(a) g(ta)^{-1}.
Representation act(const GroupElement& g, const Representation& v);  // SingularBlock

/// prod_x det(g(x))^{s(x)}.
Rat character_value(const GroupElement& g, const Weight& s);  // SingularBlock

/// Transformation weight of c^V under the frozen convention:
/// c^V(g.W) = character_value(g, schofield_weight(q, dim V)) * c^V(W).
/// Equals the negative of weight_of_left_form(dim V); the determinant of
/// the canonical-sequence matrix (domain Hom(V(x),W(x))) transforms with
/// the opposite sign from the classical c^V of the transposed convention.
Weight schofield_weight(const Quiver& q, const IntVec& alpha);

/// Mod-p screened value; nullopt when a denominator collides with p.
std::optional<std::uint64_t> schofield_value_mod_p(const Representation& v,
                                                   const Representation& w, std::uint64_t p);

}  // namespace qsi
