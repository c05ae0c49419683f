#include "qsi/tubes.hpp"

#include <algorithm>
#include <map>

#include "qsi/matrix.hpp"

namespace qsi {

CanonicalDecomposition canonical_decomposition(const EuclideanStructure& es, const DimVec& d) {
    const Quiver& q = *es.quiver;
    check_indexed(q, d);
    if (!is_nonnegative(d)) throw NotRegular("dimension vector has a negative entry");
    if (apply_weight(es.defect_weight, d) != 0) throw NotRegular("nonzero defect");

    // Express d in the basis {h} + {e_i : i < u-1 per family}; the dropped
    // last vectors are restored by the min-label normalization below.
    const std::size_t n = q.num_vertices();
    std::size_t ncols = 1;
    for (const auto& fam : es.families) ncols += fam.size() - 1;
    Matrix a(n, ncols);
    for (std::size_t x = 0; x < n; ++x) a.at(x, 0) = Rat(es.h[x]);
    {
        std::size_t col = 1;
        for (const auto& fam : es.families)
            for (std::size_t i = 0; i + 1 < fam.size(); ++i, ++col)
                for (std::size_t x = 0; x < n; ++x) a.at(x, col) = Rat(fam.vectors[i][x]);
    }
    std::vector<Rat> rhs(n);
    for (std::size_t x = 0; x < n; ++x) rhs[x] = Rat(d[x]);
    auto sol = solve_unique(a, rhs);
    if (!sol) throw NotRegular("not in the span of h and the simple regulars");
    for (const auto& x : *sol)
        if (x.get_den() != 1) throw NotRegular("no integer decomposition");

    CanonicalDecomposition cd;
    cd.p = (*sol)[0].get_num();
    std::size_t col = 1;
    for (const auto& fam : es.families) {
        IntVec labels(fam.size(), 0);
        for (std::size_t i = 0; i + 1 < fam.size(); ++i, ++col) labels[i] = (*sol)[col].get_num();
        const Int m = *std::min_element(labels.begin(), labels.end());
        for (auto& l : labels) l -= m;
        cd.p += m;  // h = sum of the family's vectors
        cd.coefficients.push_back(std::move(labels));
    }
    if (cd.p < 0) throw NotRegular("no nonnegative decomposition");
    return cd;
}

bool is_regular(const EuclideanStructure& es, const DimVec& d) {
    try {
        canonical_decomposition(es, d);
        return true;
    } catch (const NotRegular&) {
        return false;
    }
}

LabeledPolygon labeled_polygon(const CanonicalDecomposition& cd, std::size_t family) {
    return {family, cd.coefficients.at(family)};
}

std::vector<Arc> admissible_arcs(const LabeledPolygon& poly) {
    const std::size_t u = poly.size();
    std::vector<Arc> arcs;
    for (std::size_t s = 0; s < u; ++s) {
        Int interior_min;
        bool have_interior = false;
        for (std::size_t len = 1; len < u; ++len) {
            const std::size_t t = (s + len) % u;
            const bool extremes_equal = poly.labels[s] == poly.labels[t];
            if (extremes_equal && (!have_interior || interior_min > poly.labels[s]))
                arcs.push_back({poly.family, s, t});
            // vertex t becomes interior for the next longer arc
            if (!have_interior || poly.labels[t] < interior_min) {
                interior_min = poly.labels[t];
                have_interior = true;
            }
        }
    }
    std::sort(arcs.begin(), arcs.end(), [u](const Arc& a, const Arc& b) {
        return a.start != b.start ? a.start < b.start : a.length(u) < b.length(u);
    });
    return arcs;
}

DimVec arc_dimension(const EuclideanStructure& es, const Arc& arc) {
    const auto& fam = es.families.at(arc.family);
    const std::size_t u = fam.size();
    DimVec dim(es.quiver->num_vertices(), 0);
    for (std::size_t k = arc.start; k != arc.end; k = (k + 1) % u) dim = add(dim, fam.vectors[k]);
    return dim;
}

ArcGeneratorData arc_generator_data(const EuclideanStructure& es, const LabeledPolygon& poly,
                                    const Arc& arc) {
    const std::size_t u = poly.size();
    ArcGeneratorData g;
    g.socle = (arc.end + u - 1) % u;
    g.top = arc.start;
    g.id = "E:" + std::to_string(arc.family) + ":" + std::to_string(g.socle) + ":" +
           std::to_string(g.top);
    static const char* ticks[] = {"", "'", "''"};
    g.display = std::string("E") + (arc.family < 3 ? ticks[arc.family] : "") + "_{" +
                std::to_string(g.socle) + "," + std::to_string(g.top) + "}";
    g.dim = arc_dimension(es, arc);
    g.weight = weight_of_left_form(*es.quiver, g.dim);
    return g;
}

std::optional<std::vector<Arc>> min_level_partition(const LabeledPolygon& poly) {
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (poly.labels[i] == 0) zeros.push_back(i);
    if (zeros.size() < 2) return std::nullopt;
    std::vector<Arc> arcs;
    for (std::size_t k = 0; k < zeros.size(); ++k)
        arcs.push_back({poly.family, zeros[k], zeros[(k + 1) % zeros.size()]});
    return arcs;
}

GenericDecomposition generic_decomposition(const EuclideanStructure& es,
                                           const CanonicalDecomposition& cd) {
    GenericDecomposition gd;
    gd.h_multiplicity = cd.p;

    std::map<DimVec, Int> summands;
    for (std::size_t f = 0; f < es.families.size(); ++f) {
        IntVec labels = cd.coefficients[f];
        const std::size_t u = labels.size();
        Int level = *std::max_element(labels.begin(), labels.end());
        // Peel the top level: split {i : labels[i] == level} into maximal
        // cyclic runs, each run contributes the sum of its edge vectors.
        for (; level > 0; --level) {
            std::vector<bool> on(u);
            for (std::size_t i = 0; i < u; ++i) on[i] = labels[i] == level;
            std::vector<bool> visited(u, false);
            for (std::size_t i = 0; i < u; ++i) {
                if (!on[i] || visited[i]) continue;
                if (on[(i + u - 1) % u] && !visited[(i + u - 1) % u])
                    continue;  // not the start of its run
                std::size_t j = i;
                DimVec v(es.quiver->num_vertices(), 0);
                while (on[j] && !visited[j]) {
                    visited[j] = true;
                    v = add(v, es.families[f].vectors[j]);
                    j = (j + 1) % u;
                }
                summands[v] += 1;
            }
            for (std::size_t i = 0; i < u; ++i)
                if (on[i]) labels[i] -= 1;
        }
    }
    for (auto& [dim, mult] : summands) gd.summands.push_back({dim, mult});
    return gd;
}

}  // namespace qsi
