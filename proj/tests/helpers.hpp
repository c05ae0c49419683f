#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qsi/schofield.hpp"
#include "qsi/verify.hpp"

namespace qsi::test {

inline IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline QuiverPtr make_quiver(std::initializer_list<const char*> vertices,
                             std::initializer_list<std::pair<const char*, const char*>> arrows) {
    std::vector<std::string> vs;
    for (const char* v : vertices) vs.emplace_back(v);
    std::vector<RawArrow> as;
    int k = 0;
    for (const auto& [t, h] : arrows) as.push_back({"a" + std::to_string(k++), t, h});
    return validate_quiver(vs, as);
}

// Kronecker quiver: two vertices, two parallel arrows.
inline QuiverPtr k2() { return make_quiver({"1", "2"}, {{"1", "2"}, {"1", "2"}}); }

// Four-pointed star with central sink: extended Dynkin D~4.
inline QuiverPtr d4() {
    return make_quiver({"a1", "a2", "b1", "b2", "z"},
                       {{"a1", "z"}, {"a2", "z"}, {"b1", "z"}, {"b2", "z"}});
}

// Acyclic orientation of the triangle (extended Dynkin A~2).
inline QuiverPtr a2t() { return make_quiver({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}}); }

// Three arms of length two into a central sink: extended Dynkin E~6.
inline QuiverPtr e6() {
    return make_quiver({"a1", "a2", "b1", "b2", "c1", "c2", "z"},
                       {{"a1", "a2"}, {"a2", "z"}, {"b1", "b2"}, {"b2", "z"},
                        {"c1", "c2"}, {"c2", "z"}});
}

// Five-cycle oriented acyclically with four forward arrows and one chord:
// extended Dynkin A~4 with a single non-homogeneous tube of rank 4.
inline QuiverPtr a41() {
    return make_quiver({"0", "1", "2", "3", "4"},
                       {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"0", "4"}});
}

// Kronecker representation on dimension (1,1) with scalar maps.
inline Representation kron_rep(const QuiverPtr& q, const Rat& phi, const Rat& psi) {
    Matrix a(1, 1), b(1, 1);
    a.at(0, 0) = phi;
    b.at(0, 0) = psi;
    return make_representation(q, iv({1, 1}), {a, b});
}

}  // namespace qsi::test
