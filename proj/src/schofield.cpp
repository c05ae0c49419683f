#include "qsi/schofield.hpp"

namespace qsi {

namespace {

std::size_t to_size(const Int& x) {
    if (x < 0 || !x.fits_ulong_p()) throw IndexMismatch("dimension entry out of range");
    return static_cast<std::size_t>(x.get_ui());
}

void require_same_quiver(const Representation& a, const Representation& b) {
    if (*a.quiver != *b.quiver) throw QuiverMismatch("representations over different quivers");
}

}  // namespace

Representation make_representation(QuiverPtr q, DimVec dim, std::vector<Matrix> maps) {
    check_indexed(*q, dim);
    if (!is_nonnegative(dim)) throw IndexMismatch("dimension vector has a negative entry");
    if (maps.size() != q->arrows().size()) throw IndexMismatch("one matrix per arrow required");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        const Arrow& arr = q->arrows()[a];
        if (maps[a].rows() != to_size(dim[arr.head]) || maps[a].cols() != to_size(dim[arr.tail]))
            throw IndexMismatch("arrow matrix shape does not match the dimension vector");
    }
    return {std::move(q), std::move(dim), std::move(maps)};
}

Representation zero_representation(QuiverPtr q, DimVec dim) {
    std::vector<Matrix> maps;
    for (const auto& arr : q->arrows())
        maps.emplace_back(to_size(dim[arr.head]), to_size(dim[arr.tail]));
    return make_representation(std::move(q), std::move(dim), std::move(maps));
}

Representation direct_sum(const Representation& a, const Representation& b) {
    require_same_quiver(a, b);
    const Quiver& q = *a.quiver;
    DimVec dim = add(a.dim, b.dim);
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
        const Matrix& ma = a.maps[k];
        const Matrix& mb = b.maps[k];
        Matrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
        for (std::size_t i = 0; i < ma.rows(); ++i)
            for (std::size_t j = 0; j < ma.cols(); ++j) m.at(i, j) = ma.at(i, j);
        for (std::size_t i = 0; i < mb.rows(); ++i)
            for (std::size_t j = 0; j < mb.cols(); ++j)
                m.at(ma.rows() + i, ma.cols() + j) = mb.at(i, j);
        maps.push_back(std::move(m));
    }
    return make_representation(a.quiver, std::move(dim), std::move(maps));
}

GroupElement diagonal_group_element(QuiverPtr q, const DimVec& dim,
                                    const std::vector<std::vector<Rat>>& diag) {
    check_indexed(*q, dim);
    if (diag.size() != q->num_vertices()) throw IndexMismatch("one diagonal per vertex required");
    std::vector<Matrix> blocks;
    for (std::size_t x = 0; x < diag.size(); ++x) {
        const std::size_t n = to_size(dim[x]);
        if (diag[x].size() != n) throw IndexMismatch("diagonal length mismatch");
        Matrix b(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (diag[x][i] == 0) throw SingularBlock("zero diagonal entry");
            b.at(i, i) = diag[x][i];
        }
        blocks.push_back(std::move(b));
    }
    return {std::move(q), std::move(blocks)};
}

Matrix build_dvw(const Representation& v, const Representation& w) {
    require_same_quiver(v, w);
    const Quiver& q = *v.quiver;
    const std::size_t n = q.num_vertices();

    std::vector<std::size_t> av(n), bw(n);
    for (std::size_t x = 0; x < n; ++x) {
        av[x] = to_size(v.dim[x]);
        bw[x] = to_size(w.dim[x]);
    }
    std::vector<std::size_t> col_base(n, 0);
    std::size_t cols = 0;
    for (std::size_t x = 0; x < n; ++x) {
        col_base[x] = cols;
        cols += av[x] * bw[x];
    }
    std::vector<std::size_t> row_base(q.arrows().size(), 0);
    std::size_t rows = 0;
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
        row_base[k] = rows;
        rows += av[q.arrows()[k].tail] * bw[q.arrows()[k].head];
    }

    // Column (x, r, c) is the elementary phi(x) = E_{r,c}: its image at
    // arrow a is W(a) E_{rc} when x = ta, and -E_{rc} V(a) when x = ha.
    Matrix m(rows, cols);
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
        const Arrow& arr = q.arrows()[k];
        const Matrix& wa = w.maps[k];
        const Matrix& va = v.maps[k];
        const std::size_t bh = bw[arr.head], at = av[arr.tail];
        auto row_of = [&](std::size_t i, std::size_t j) { return row_base[k] + i * at + j; };
        // x = ta: entry ((i,j), (r,c=j)) = W(a)[i][r]
        for (std::size_t r = 0; r < bw[arr.tail]; ++r)
            for (std::size_t c = 0; c < at; ++c) {
                const std::size_t col = col_base[arr.tail] + r * at + c;
                for (std::size_t i = 0; i < bh; ++i) m.at(row_of(i, c), col) += wa.at(i, r);
            }
        // x = ha: entry ((i=r,j), (r,c)) = -V(a)[c][j]
        for (std::size_t r = 0; r < bh; ++r)
            for (std::size_t c = 0; c < av[arr.head]; ++c) {
                const std::size_t col = col_base[arr.head] + r * av[arr.head] + c;
                for (std::size_t j = 0; j < at; ++j) m.at(row_of(r, j), col) -= va.at(c, j);
            }
    }
    return m;
}

Rat schofield_value(const Representation& v, const Representation& w) {
    if (euler_form(*v.quiver, v.dim, w.dim) != 0)
        throw NotOrthogonal("<dim V, dim W> != 0: canonical-sequence matrix is not square");
    return det_exact(build_dvw(v, w));
}

Int hom_dim(const Representation& v, const Representation& w) {
    return Int(kernel_dim(build_dvw(v, w)));
}

Int ext_dim(const Representation& v, const Representation& w) {
    return hom_dim(v, w) - euler_form(*v.quiver, v.dim, w.dim);
}

Representation act(const GroupElement& g, const Representation& v) {
    if (*g.quiver != *v.quiver) throw QuiverMismatch("group element over a different quiver");
    const Quiver& q = *v.quiver;
    std::vector<Matrix> inv_blocks;
    for (const auto& b : g.blocks) inv_blocks.push_back(inverse(b));
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
        const Arrow& arr = q.arrows()[k];
        maps.push_back(g.blocks[arr.head] * v.maps[k] * inv_blocks[arr.tail]);
    }
    return make_representation(v.quiver, v.dim, std::move(maps));
}

Rat character_value(const GroupElement& g, const Weight& s) {
    if (s.size() != g.blocks.size()) throw IndexMismatch("weight/vertex index sets differ");
    Rat chi(1);
    for (std::size_t x = 0; x < s.size(); ++x) {
        Rat d = det_exact(g.blocks[x]);
        if (d == 0) throw SingularBlock("group element block is singular");
        if (s[x] == 0) continue;
        Int e = abs(s[x]);
        Rat pw(1);
        for (Int i = 0; i < e; ++i) pw *= d;
        chi *= (s[x] > 0) ? pw : 1 / pw;
    }
    return chi;
}

Weight schofield_weight(const Quiver& q, const IntVec& alpha) {
    Weight s = weight_of_left_form(q, alpha);
    for (auto& x : s) x = -x;
    return s;
}

std::optional<std::uint64_t> schofield_value_mod_p(const Representation& v,
                                                   const Representation& w, std::uint64_t p) {
    if (euler_form(*v.quiver, v.dim, w.dim) != 0)
        throw NotOrthogonal("<dim V, dim W> != 0: canonical-sequence matrix is not square");
    return det_mod_p(build_dvw(v, w), p);
}

}  // namespace qsi
