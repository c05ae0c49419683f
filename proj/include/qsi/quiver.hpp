#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qsi/errors.hpp"
#include "qsi/types.hpp"

namespace qsi {

/// Arrow between dense vertex indices. The Quiver invariant guarantees
/// tail < head, so the stored vertex order is topological.
struct Arrow {
    std::string id;
    std::size_t tail = 0;
    std::size_t head = 0;

    bool operator==(const Arrow&) const = default;
};

/// Finite connected acyclic quiver. Vertices live at dense indices
/// 0..n-1 in a topological order; the original ids are kept as labels.
class Quiver {
public:
    Quiver(std::vector<std::string> labels, std::vector<Arrow> arrows)
        : labels_(std::move(labels)), arrows_(std::move(arrows)) {}

    std::size_t num_vertices() const { return labels_.size(); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::size_t vertex_index(const std::string& label) const;  // IndexMismatch

    bool operator==(const Quiver&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<Arrow> arrows_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

struct RawArrow {
    std::string id;
    std::string tail;
    std::string head;
};

/// Validates connectivity/acyclicity and reindexes the vertices into a
/// topological order (stable with respect to the input order).
QuiverPtr validate_quiver(const std::vector<std::string>& vertices,
                          const std::vector<RawArrow>& arrows);
// throws CyclicQuiver, Disconnected, DuplicateId

/// <a,b> = sum_x a(x)b(x) - sum_arrows a(tail)b(head).
Int euler_form(const Quiver& q, const IntVec& a, const IntVec& b);

/// q_Q(a) = <a,a>.
Int quadratic_form(const Quiver& q, const IntVec& a);

/// Coordinates of the linear form <a,-> : apply_weight(result, b) == <a,b>.
Weight weight_of_left_form(const Quiver& q, const IntVec& a);

/// Coordinates of -<-,b> : apply_weight(result, a) == -<a,b>.
Weight weight_of_right_form(const Quiver& q, const IntVec& b);

Int apply_weight(const Weight& s, const IntVec& g);

/// Size guard shared by all the form evaluations.
void check_indexed(const Quiver& q, const IntVec& v);  // IndexMismatch

}  // namespace qsi
