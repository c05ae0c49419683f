#include "qsi/euclidean.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qsi/matrix.hpp"

namespace qsi {

namespace {

// Symmetrized Euler matrix; a^T S a = 2 q_Q(a).
Matrix symmetrized_form(const Quiver& q) {
    const std::size_t n = q.num_vertices();
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) s.at(i, i) = 2;
    for (const auto& a : q.arrows()) {
        s.at(a.tail, a.head) -= 1;
        s.at(a.head, a.tail) -= 1;
    }
    return s;
}

struct FormSignature {
    bool psd = false;
    std::size_t nullity = 0;
};

// Symmetric elimination: a symmetric matrix is PSD iff every pivot is
// nonnegative and a zero pivot only occurs on an all-zero row of the
// current Schur complement.
FormSignature form_signature(Matrix s) {
    const std::size_t n = s.rows();
    FormSignature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (s.at(k, k) < 0) return sig;
        if (s.at(k, k) == 0) {
            for (std::size_t j = k + 1; j < n; ++j)
                if (s.at(k, j) != 0) return sig;
            ++sig.nullity;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (s.at(i, k) == 0) continue;
            const Rat f = s.at(i, k) / s.at(k, k);
            for (std::size_t j = k; j < n; ++j) s.at(i, j) -= f * s.at(k, j);
        }
        for (std::size_t j = k + 1; j < n; ++j) s.at(k, j) = 0;
        // keep columns in sync so later zero-pivot rows are inspected correctly
        for (std::size_t i = k + 1; i < n; ++i) s.at(i, k) = 0;
    }
    sig.psd = true;
    return sig;
}

std::vector<std::size_t> undirected_degrees(const Quiver& q) {
    std::vector<std::size_t> deg(q.num_vertices(), 0);
    for (const auto& a : q.arrows()) {
        ++deg[a.tail];
        ++deg[a.head];
    }
    return deg;
}

// Arm lengths of a tree from a branch vertex, longest-last.
std::vector<std::size_t> arm_lengths(const Quiver& q, std::size_t branch) {
    const std::size_t n = q.num_vertices();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& a : q.arrows()) {
        adj[a.tail].push_back(a.head);
        adj[a.head].push_back(a.tail);
    }
    std::vector<std::size_t> arms;
    for (std::size_t start : adj[branch]) {
        std::size_t prev = branch, cur = start, len = 1;
        while (adj[cur].size() == 2) {
            std::size_t nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
}

std::string diagram_name(const Quiver& q, GraphKind kind) {
    const std::size_t n = q.num_vertices();
    const std::size_t m = q.arrows().size();
    const auto deg = undirected_degrees(q);
    std::vector<std::size_t> branches;
    for (std::size_t v = 0; v < n; ++v)
        if (deg[v] >= 3) branches.push_back(v);

    if (kind == GraphKind::Euclidean) {
        if (m == n) return "A~" + std::to_string(n - 1);  // the cycle types
        if (branches.size() == 2) return "D~" + std::to_string(n - 1);
        if (branches.size() == 1) {
            if (deg[branches[0]] == 4) return "D~4";
            const auto arms = arm_lengths(q, branches[0]);
            if (arms == std::vector<std::size_t>{2, 2, 2}) return "E~6";
            if (arms == std::vector<std::size_t>{1, 3, 3}) return "E~7";
            if (arms == std::vector<std::size_t>{1, 2, 5}) return "E~8";
        }
    } else if (kind == GraphKind::Dynkin) {
        if (branches.empty()) return "A" + std::to_string(n);
        if (branches.size() == 1 && deg[branches[0]] == 3) {
            const auto arms = arm_lengths(q, branches[0]);
            if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
            if (arms == std::vector<std::size_t>{1, 2, 2}) return "E6";
            if (arms == std::vector<std::size_t>{1, 2, 3}) return "E7";
            if (arms == std::vector<std::size_t>{1, 2, 4}) return "E8";
        }
    }
    throw StructureCheckFailed("diagram shape does not match the form signature");
}

}  // namespace

GraphClass classify_graph(const Quiver& q) {
    const auto sig = form_signature(symmetrized_form(q));
    if (!sig.psd || sig.nullity >= 2) return {GraphKind::Wild, ""};
    GraphKind kind = sig.nullity == 0 ? GraphKind::Dynkin : GraphKind::Euclidean;
    return {kind, diagram_name(q, kind)};
}

DimVec radical_generator(const Quiver& q) {
    if (classify_graph(q).kind != GraphKind::Euclidean)
        throw NotEuclidean("radical generator requires a Euclidean quiver");
    const std::size_t n = q.num_vertices();
    Matrix s = symmetrized_form(q);

    // Rational RREF of S; the kernel is one-dimensional.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && s.at(piv, col) == 0) ++piv;
        if (piv == n) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(s.at(rank, j), s.at(piv, j));
        const Rat inv_p = 1 / s.at(rank, col);
        for (std::size_t j = col; j < n; ++j) s.at(rank, j) *= inv_p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || s.at(i, col) == 0) continue;
            const Rat f = s.at(i, col);
            for (std::size_t j = col; j < n; ++j) s.at(i, j) -= f * s.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank != n - 1) throw NotEuclidean("radical is not one-dimensional");

    std::size_t free_col = 0;
    {
        std::vector<bool> is_pivot(n, false);
        for (auto c : pivot_col) is_pivot[c] = true;
        while (is_pivot[free_col]) ++free_col;
    }
    std::vector<Rat> ker(n);
    ker[free_col] = 1;
    for (std::size_t k = 0; k < rank; ++k) ker[pivot_col[k]] = -s.at(k, free_col);

    Int l = 1;
    for (const auto& x : ker) l = lcm(l, x.get_den());
    IntVec h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = ker[i].get_num() * (l / ker[i].get_den());
    Int g = 0;
    for (const auto& x : h) g = gcd(g, x);
    for (auto& x : h) x /= g;
    Int total = 0;
    for (const auto& x : h) total += x;
    if (total < 0)
        for (auto& x : h) x = -x;
    for (const auto& x : h)
        if (x < 1) throw StructureCheckFailed("radical generator has a non-positive entry");
    return h;
}

Int defect(const EuclideanStructure& es, const IntVec& d) {
    return euler_form(*es.quiver, es.h, d);
}

namespace {

void reflect(const Quiver& q, IntVec& r, std::size_t i) {
    Int s = -r[i];
    for (const auto& a : q.arrows()) {
        if (a.tail == i) s += r[a.head];
        if (a.head == i) s += r[a.tail];
    }
    r[i] = s;
}

}  // namespace

IntVec coxeter_transform(const Quiver& q, const IntVec& a) {
    check_indexed(q, a);
    IntVec r(a);
    for (std::size_t i = q.num_vertices(); i-- > 0;) reflect(q, r, i);
    return r;
}

IntVec coxeter_inverse(const Quiver& q, const IntVec& a) {
    check_indexed(q, a);
    IntVec r(a);
    for (std::size_t i = 0; i < q.num_vertices(); ++i) reflect(q, r, i);
    return r;
}

std::vector<DimVec> defect_zero_roots_below_h(const Quiver& q) {
    const DimVec h = radical_generator(q);
    const Weight dw = weight_of_left_form(q, h);
    const std::size_t n = q.num_vertices();

    std::vector<DimVec> roots;
    IntVec cur(n, 0);
    while (true) {
        // advance the odometer
        std::size_t i = 0;
        while (i < n && cur[i] == h[i]) cur[i++] = 0;
        if (i == n) break;
        cur[i] += 1;
        bool is_h = true;
        for (std::size_t j = 0; j < n && is_h; ++j) is_h = (cur[j] == h[j]);
        if (is_h) continue;
        if (apply_weight(dw, cur) != 0) continue;
        if (quadratic_form(q, cur) != 1) continue;
        roots.push_back(cur);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

void check_structure(const EuclideanStructure& es) {
    const Quiver& q = *es.quiver;
    const std::size_t n = q.num_vertices();
    auto fail = [](const std::string& what) { throw StructureCheckFailed(what); };

    if (quadratic_form(q, es.h) != 0) fail("q_Q(h) != 0");
    Int g = 0;
    for (const auto& x : es.h) {
        if (x < 1) fail("h entry < 1");
        g = gcd(g, x);
    }
    if (g != 1) fail("h is not primitive");
    if (es.defect_weight != weight_of_left_form(q, es.h)) fail("defect weight mismatch");

    std::size_t slack = 0;
    for (const auto& fam : es.families) {
        if (fam.size() < 2) fail("orbit family of size < 2");
        slack += fam.size() - 1;
        IntVec sum(n, 0);
        for (std::size_t i = 0; i < fam.size(); ++i) {
            const auto& e = fam.vectors[i];
            if (!is_nonnegative(e)) fail("family vector has a negative entry");
            if (quadratic_form(q, e) != 1) fail("family vector is not a root");
            if (apply_weight(es.defect_weight, e) != 0) fail("family vector has nonzero defect");
            if (coxeter_transform(q, e) != fam.vectors[(i + 1) % fam.size()])
                fail("family is not closed under the Coxeter transform");
            sum = add(sum, e);
        }
        if (sum != es.h) fail("family does not sum to h");
    }
    if (slack != n - 2) fail("sum of (family size - 1) != |Q_0| - 2");

    // Every defect-zero root below h must be a consecutive cyclic sum in
    // exactly one family, and every such sum must be a root.
    const auto roots = defect_zero_roots_below_h(q);
    std::set<DimVec> root_set(roots.begin(), roots.end());
    std::set<DimVec> sums;
    std::size_t count = 0;
    for (const auto& fam : es.families) {
        const std::size_t u = fam.size();
        for (std::size_t s = 0; s < u; ++s) {
            IntVec acc(n, 0);
            for (std::size_t len = 1; len < u; ++len) {
                acc = add(acc, fam.vectors[(s + len - 1) % u]);
                if (!root_set.count(acc)) fail("consecutive family sum is not a root");
                sums.insert(acc);
                ++count;
            }
        }
    }
    if (count != sums.size()) fail("consecutive family sums are not distinct");
    if (sums.size() != root_set.size()) fail("roots not exhausted by family sums");
}

EuclideanStructure simple_regular_orbits(const QuiverPtr& q) {
    GraphClass cls = classify_graph(*q);
    if (cls.kind != GraphKind::Euclidean)
        throw NotEuclidean("orbit families require a Euclidean quiver");

    EuclideanStructure es;
    es.quiver = q;
    es.cls = cls;
    es.h = radical_generator(*q);
    es.defect_weight = weight_of_left_form(*q, es.h);

    const auto roots = defect_zero_roots_below_h(*q);
    const std::set<DimVec> root_set(roots.begin(), roots.end());

    // Minimal = not a sum of two defect-zero roots below h.
    std::set<DimVec> remaining;
    for (const auto& r : roots) {
        bool minimal = true;
        for (const auto& a : roots) {
            IntVec b = sub(r, a);
            if (!is_nonnegative(b) || is_zero(b)) continue;
            if (root_set.count(b)) {
                minimal = false;
                break;
            }
        }
        if (minimal) remaining.insert(r);
    }

    while (!remaining.empty()) {
        OrbitFamily fam;
        const DimVec start = *remaining.begin();  // lex smallest not yet grouped
        IntVec v = start;
        do {
            if (!remaining.count(v))
                throw StructureCheckFailed("Coxeter orbit escaped the minimal root set");
            remaining.erase(v);
            fam.vectors.push_back(v);
            v = coxeter_transform(*q, v);
            if (fam.vectors.size() > 3 * q->num_vertices() + 3)
                throw StructureCheckFailed("Coxeter orbit does not close");
        } while (v != start);
        if (fam.size() < 2) throw StructureCheckFailed("Coxeter orbit of size 1");
        es.families.push_back(std::move(fam));
    }
    std::sort(es.families.begin(), es.families.end(),
              [](const OrbitFamily& a, const OrbitFamily& b) { return a.vectors[0] < b.vectors[0]; });

    check_structure(es);
    return es;
}

}  // namespace qsi
