#include "qsi/json_io.hpp"

#include <sstream>

namespace qsi {

namespace {

Json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw ParseError("expected an integer");
}

}  // namespace

QuiverPtr quiver_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw ParseError("quiver JSON needs \"vertices\" and \"arrows\"");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw ParseError("vertex ids must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<RawArrow> arrows;
    for (const auto& a : j.at("arrows")) {
        if (!a.is_object() || !a.contains("id") || !a.contains("tail") || !a.contains("head"))
            throw ParseError("arrow needs \"id\", \"tail\" and \"head\"");
        arrows.push_back({a.at("id").get<std::string>(), a.at("tail").get<std::string>(),
                          a.at("head").get<std::string>()});
    }
    return validate_quiver(vertices, arrows);
}

Json quiver_to_json(const Quiver& q) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& label : q.vertex_labels()) j["vertices"].push_back(label);
    j["arrows"] = Json::array();
    for (const auto& a : q.arrows()) {
        Json arrow;
        arrow["id"] = a.id;
        arrow["tail"] = q.vertex_labels()[a.tail];
        arrow["head"] = q.vertex_labels()[a.head];
        j["arrows"].push_back(arrow);
    }
    return j;
}

IntVec intvec_from_json(const Quiver& q, const Json& j) {
    if (!j.is_object()) throw ParseError("dimension vector must be an object keyed by vertex id");
    IntVec v(q.num_vertices());
    std::vector<bool> seen(q.num_vertices(), false);
    for (const auto& [key, value] : j.items()) {
        const std::size_t x = q.vertex_index(key);
        v[x] = int_from_json(value);
        seen[x] = true;
    }
    for (std::size_t x = 0; x < q.num_vertices(); ++x)
        if (!seen[x])
            throw IndexMismatch("missing entry for vertex " + q.vertex_labels()[x]);
    return v;
}

DimVec dimvec_from_json(const Quiver& q, const Json& j) {
    DimVec v = intvec_from_json(q, j);
    if (!is_nonnegative(v)) throw ParseError("dimension vector entries must be nonnegative");
    return v;
}

Json intvec_to_json(const Quiver& q, const IntVec& v) {
    Json j = Json::object();
    for (std::size_t x = 0; x < q.num_vertices(); ++x)
        j[q.vertex_labels()[x]] = int_to_json(v[x]);
    return j;
}

Json classification_to_json(const GraphClass& cls) {
    Json j;
    switch (cls.kind) {
        case GraphKind::Dynkin: j["class"] = "Dynkin"; break;
        case GraphKind::Euclidean: j["class"] = "Euclidean"; break;
        case GraphKind::Wild: j["class"] = "Wild"; break;
    }
    if (!cls.type.empty()) j["type"] = cls.type;
    return j;
}

Json orbits_to_json(const EuclideanStructure& es) {
    const Quiver& q = *es.quiver;
    Json j;
    j["type"] = es.cls.type;
    j["h"] = intvec_to_json(q, es.h);
    j["defect_weight"] = intvec_to_json(q, es.defect_weight);
    j["families"] = Json::array();
    for (const auto& fam : es.families) {
        Json f;
        f["size"] = fam.size();
        f["vectors"] = Json::array();
        for (const auto& e : fam.vectors) f["vectors"].push_back(intvec_to_json(q, e));
        j["families"].push_back(f);
    }
    return j;
}

Json decomposition_to_json(const EuclideanStructure& es, const CanonicalDecomposition& cd,
                           const GenericDecomposition& gd) {
    const Quiver& q = *es.quiver;
    Json j;
    j["p"] = int_to_json(cd.p);
    j["labels"] = Json::array();
    for (const auto& labels : cd.coefficients) {
        Json l = Json::array();
        for (const auto& x : labels) l.push_back(int_to_json(x));
        j["labels"].push_back(l);
    }
    Json g;
    g["h_multiplicity"] = int_to_json(gd.h_multiplicity);
    g["summands"] = Json::array();
    for (const auto& s : gd.summands) {
        Json sj;
        sj["dim"] = intvec_to_json(q, s.dim);
        sj["multiplicity"] = int_to_json(s.multiplicity);
        g["summands"].push_back(sj);
    }
    j["generic"] = g;
    return j;
}

Json arcs_to_json(const EuclideanStructure& es, const CanonicalDecomposition& cd) {
    const Quiver& q = *es.quiver;
    Json j;
    j["families"] = Json::array();
    for (std::size_t f = 0; f < es.families.size(); ++f) {
        const LabeledPolygon poly = labeled_polygon(cd, f);
        Json fj;
        fj["labels"] = Json::array();
        for (const auto& l : poly.labels) fj["labels"].push_back(int_to_json(l));
        fj["arcs"] = Json::array();
        for (const Arc& arc : admissible_arcs(poly)) {
            const ArcGeneratorData data = arc_generator_data(es, poly, arc);
            Json aj;
            aj["arc"] = Json::array({arc.start, arc.end});
            aj["generator"] = data.id;
            aj["name"] = data.display;
            aj["dim"] = intvec_to_json(q, data.dim);
            fj["arcs"].push_back(aj);
        }
        j["families"].push_back(fj);
    }
    return j;
}

std::string polygons_to_dot(const EuclideanStructure& es, const CanonicalDecomposition& cd) {
    std::ostringstream out;
    out << "digraph polygons {\n";
    for (std::size_t f = 0; f < es.families.size(); ++f) {
        const auto& labels = cd.coefficients[f];
        const std::size_t u = labels.size();
        out << "  subgraph cluster_" << f << " {\n    label=\"family " << f << "\";\n";
        for (std::size_t i = 0; i < u; ++i)
            out << "    f" << f << "v" << i << " [label=\"" << labels[i].get_str() << "\"];\n";
        for (std::size_t i = 0; i < u; ++i)
            out << "    f" << f << "v" << i << " -> f" << f << "v" << (i + 1) % u
                << " [label=\"e" << i << "\"];\n";
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

Json generator_to_json(const EuclideanStructure& es, const Generator& g) {
    Json j;
    j["id"] = g.id;
    if (g.kind == Generator::Kind::Homogeneous) {
        j["kind"] = "homogeneous";
        j["index"] = int_to_json(g.index);
    } else {
        j["kind"] = "arc";
        j["family"] = g.family;
        j["arc"] = Json::array({g.arc.start, g.arc.end});
        j["name"] = g.display;
        j["dim"] = intvec_to_json(*es.quiver, g.dim);
    }
    j["weight"] = intvec_to_json(*es.quiver, g.weight);
    return j;
}

}  // namespace

Json presentation_to_json(const EuclideanStructure& es, const Presentation& pres) {
    const Quiver& q = *es.quiver;
    Json j;
    j["d"] = intvec_to_json(q, pres.d);
    j["regular"] = pres.regular;
    j["p"] = int_to_json(pres.p);
    j["classification"] = to_string(pres.classification);
    j["generators"] = Json::array();
    for (const auto& g : pres.generators) j["generators"].push_back(generator_to_json(es, g));
    j["relations"] = Json::array();
    for (const auto& r : pres.relations) {
        Json rj;
        rj["family"] = r.family;
        rj["lhs"] = r.lhs;
        rj["rhs"] = r.rhs;
        j["relations"].push_back(rj);
    }
    j["weight_space_dims"] = Json::object();
    for (const auto& [m, dim] : pres.weight_space_dims)
        j["weight_space_dims"][std::to_string(m)] = int_to_json(dim);
    j["warnings"] = pres.warnings;
    return j;
}

Presentation presentation_from_json(const EuclideanStructure& es, const Json& j) {
    const Quiver& q = *es.quiver;
    Presentation pres;
    pres.d = dimvec_from_json(q, j.at("d"));
    pres.regular = j.at("regular").get<bool>();
    pres.p = int_from_json(j.at("p"));
    const std::string cls = j.at("classification").get<std::string>();
    for (AlgebraClass c : {AlgebraClass::PolynomialRing, AlgebraClass::Hypersurface,
                           AlgebraClass::DenseOrbitPolynomial, AlgebraClass::OutOfScope})
        if (to_string(c) == cls) pres.classification = c;
    for (const auto& gj : j.at("generators")) {
        Generator g;
        g.id = gj.at("id").get<std::string>();
        if (gj.at("kind").get<std::string>() == "homogeneous") {
            g.kind = Generator::Kind::Homogeneous;
            g.index = int_from_json(gj.at("index"));
            g.display = g.id;
        } else {
            g.kind = Generator::Kind::Arc;
            g.family = gj.at("family").get<std::size_t>();
            g.arc = Arc{g.family, gj.at("arc").at(0).get<std::size_t>(),
                        gj.at("arc").at(1).get<std::size_t>()};
            g.display = gj.at("name").get<std::string>();
            g.dim = dimvec_from_json(q, gj.at("dim"));
        }
        g.weight = intvec_from_json(q, gj.at("weight"));
        pres.generators.push_back(std::move(g));
    }
    for (const auto& rj : j.at("relations")) {
        Relation r;
        r.family = rj.at("family").get<std::size_t>();
        r.lhs = rj.at("lhs").get<std::vector<std::string>>();
        r.rhs = rj.at("rhs").get<std::vector<std::string>>();
        pres.relations.push_back(std::move(r));
    }
    for (const auto& [key, value] : j.at("weight_space_dims").items())
        pres.weight_space_dims[std::stol(key)] = int_from_json(value);
    pres.warnings = j.at("warnings").get<std::vector<std::string>>();
    return pres;
}

Json report_to_json(const VerificationReport& report) {
    Json j = report_to_json_stable(report);
    Json timings = Json::object();
    for (const auto& c : report.checks) timings[c.name] = c.ms;
    j["timing_ms"] = timings;
    return j;
}

Json report_to_json_stable(const VerificationReport& report) {
    Json j;
    j["seed"] = report.seed;
    j["pass"] = report.all_pass();
    j["checks"] = Json::array();
    for (const auto& c : report.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["details"] = c.details;
        j["checks"].push_back(cj);
    }
    return j;
}

namespace {

void render_value(const Json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || value.is_array()) {
                out << pad << key << ":\n";
                render_value(value, out, indent + 1);
            } else {
                out << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                out << pad << "-\n";
                render_value(value, out, indent + 1);
            } else {
                out << pad << "- " << value.dump() << "\n";
            }
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream out;
    render_value(j, out, 0);
    return out.str();
}

}  // namespace qsi
