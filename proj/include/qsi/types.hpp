#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace qsi {

// All arithmetic on dimension vectors, weights and bilinear forms is done in
// arbitrary precision; matrix entries are exact rationals.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;

// A dimension vector is an IntVec with nonnegative entries, a weight is an
// arbitrary IntVec; both are indexed by the quiver's dense vertex order.
using DimVec = IntVec;
using Weight = IntVec;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_nonnegative(const IntVec& v) {
    for (const auto& x : v)
        if (x < 0) return false;
    return true;
}

inline bool is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

std::string to_string(const IntVec& v);

// FNV-1a over a byte string; used for reproducible witnesses in reports.
std::uint64_t fnv1a64(const std::string& s);

}  // namespace qsi
