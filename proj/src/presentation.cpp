#include "qsi/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qsi {

std::string to_string(AlgebraClass c) {
    switch (c) {
        case AlgebraClass::PolynomialRing: return "PolynomialRing";
        case AlgebraClass::Hypersurface: return "Hypersurface";
        case AlgebraClass::DenseOrbitPolynomial: return "DenseOrbitPolynomial";
        case AlgebraClass::OutOfScope: return "OutOfScope";
    }
    return "?";
}

namespace {

long small(const Int& x) {
    if (!x.fits_slong_p()) throw IndexMismatch("value out of range");
    return x.get_si();
}

CanonicalDecomposition decomposition_with_p(const EuclideanStructure& es, const DimVec& d) {
    CanonicalDecomposition cd = canonical_decomposition(es, d);
    if (cd.p == 0) throw DenseOrbitCase("p = 0: dense orbit, the algebra is polynomial");
    return cd;
}

}  // namespace

std::vector<Generator> generators(const EuclideanStructure& es, const DimVec& d) {
    const CanonicalDecomposition cd = decomposition_with_p(es, d);
    std::vector<Generator> gens;
    const Weight dw = es.defect_weight;
    for (long k = 0; k <= small(cd.p); ++k) {
        Generator g;
        g.id = "c" + std::to_string(k);
        g.kind = Generator::Kind::Homogeneous;
        g.index = k;
        g.display = g.id;
        g.weight = dw;
        gens.push_back(std::move(g));
    }
    for (std::size_t f = 0; f < es.families.size(); ++f) {
        const LabeledPolygon poly = labeled_polygon(cd, f);
        for (const Arc& arc : admissible_arcs(poly)) {
            const ArcGeneratorData data = arc_generator_data(es, poly, arc);
            Generator g;
            g.id = data.id;
            g.kind = Generator::Kind::Arc;
            g.family = f;
            g.arc = arc;
            g.display = data.display;
            g.dim = data.dim;
            g.weight = data.weight;
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

std::vector<Relation> relations(const EuclideanStructure& es, const DimVec& d) {
    const CanonicalDecomposition cd = decomposition_with_p(es, d);
    const long p = small(cd.p);
    std::vector<Relation> rels;
    std::size_t slot = 0;
    for (std::size_t f = 0; f < es.families.size(); ++f) {
        const LabeledPolygon poly = labeled_polygon(cd, f);
        const auto partition = min_level_partition(poly);
        if (!partition) continue;
        Relation r;
        r.family = f;
        if (slot == 0) {
            r.lhs = {"c0"};
        } else if (slot == 1) {
            r.lhs = {"c" + std::to_string(p)};
        } else {
            for (long k = 0; k <= p; ++k) r.lhs.push_back("c" + std::to_string(k));
        }
        for (const Arc& arc : *partition)
            r.rhs.push_back(arc_generator_data(es, poly, arc).id);
        rels.push_back(std::move(r));
        ++slot;
    }
    return rels;
}

namespace {

// Formal relation "sum of homogeneous generators = polynomial in arc
// generators", closed under solving one relation for a homogeneous
// generator and substituting into the rest. Monomials are sorted id lists.
struct FormalRelation {
    std::map<std::string, Rat> linear;                 // homogeneous id -> coefficient
    std::map<std::vector<std::string>, Rat> nonlinear;  // monomial -> coefficient

    bool trivial() const { return linear.empty() && nonlinear.empty(); }
};

void prune(FormalRelation& r) {
    std::erase_if(r.linear, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(r.nonlinear, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

AlgebraClass classify_algebra(const EuclideanStructure& es, const DimVec& d) {
    CanonicalDecomposition cd;
    try {
        cd = canonical_decomposition(es, d);
    } catch (const NotRegular&) {
        return AlgebraClass::DenseOrbitPolynomial;
    }
    if (cd.p == 0) return AlgebraClass::DenseOrbitPolynomial;

    std::vector<FormalRelation> work;
    for (const Relation& r : relations(es, d)) {
        FormalRelation fr;
        for (const auto& id : r.lhs) fr.linear[id] += 1;
        std::vector<std::string> mono = r.rhs;
        std::sort(mono.begin(), mono.end());
        fr.nonlinear[mono] -= 1;
        work.push_back(std::move(fr));
    }

    // Tietze elimination: solve a relation for a homogeneous generator that
    // occurs in it linearly, substitute everywhere, drop both.
    while (true) {
        std::size_t rel_idx = work.size();
        std::string gen;
        // Prefer a generator confined to a single relation.
        for (std::size_t i = 0; i < work.size() && rel_idx == work.size(); ++i)
            for (const auto& [id, coeff] : work[i].linear) {
                bool elsewhere = false;
                for (std::size_t j = 0; j < work.size() && !elsewhere; ++j)
                    elsewhere = j != i && work[j].linear.count(id);
                if (!elsewhere) {
                    rel_idx = i;
                    gen = id;
                    break;
                }
            }
        for (std::size_t i = 0; i < work.size() && rel_idx == work.size(); ++i)
            if (!work[i].linear.empty()) {
                rel_idx = i;
                gen = work[i].linear.begin()->first;
            }
        if (rel_idx == work.size()) break;

        FormalRelation solved = work[rel_idx];
        const Rat pivot = solved.linear[gen];
        solved.linear.erase(gen);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(rel_idx));
        for (FormalRelation& r : work) {
            auto it = r.linear.find(gen);
            if (it == r.linear.end()) continue;
            const Rat f = it->second / pivot;
            r.linear.erase(it);
            for (const auto& [id, c] : solved.linear) r.linear[id] -= f * c;
            for (const auto& [mono, c] : solved.nonlinear) r.nonlinear[mono] -= f * c;
            prune(r);
        }
    }

    std::erase_if(work, [](const FormalRelation& r) { return r.trivial(); });
    if (work.empty()) return AlgebraClass::PolynomialRing;
    if (work.size() == 1) return AlgebraClass::Hypersurface;
    throw StructureCheckFailed("elimination left more than one relation");
}

Int weight_space_dim_formula(const Int& p, const Int& m) {
    if (p < 0 || m < 0) throw IndexMismatch("binomial arguments must be nonnegative");
    Int n = p + m;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), m.get_ui());
    return r;
}

Presentation make_presentation(const EuclideanStructure& es, const DimVec& d,
                               const PresentationConfig& cfg) {
    Presentation pres;
    pres.d = d;
    pres.classification = classify_algebra(es, d);
    try {
        const CanonicalDecomposition cd = canonical_decomposition(es, d);
        pres.regular = true;
        pres.p = cd.p;
        if (cd.p >= 1) {
            pres.generators = generators(es, d);
            pres.relations = relations(es, d);
            for (std::size_t f = 0; f < es.families.size(); ++f)
                if (!min_level_partition(labeled_polygon(cd, f)))
                    pres.warnings.push_back("family " + std::to_string(f) +
                                            " has a single minimal-label vertex; no relation emitted");
        } else {
            pres.warnings.push_back("p = 0: dense orbit, generator list not computed");
        }
        for (long m = 0; m <= cfg.dim_table_max_m; ++m)
            pres.weight_space_dims[m] = weight_space_dim_formula(cd.p, m);
    } catch (const NotRegular&) {
        pres.regular = false;
        pres.warnings.push_back("d is not a regular dimension vector; dense-orbit case");
    }
    return pres;
}

}  // namespace qsi
