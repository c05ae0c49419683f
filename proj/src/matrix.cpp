#include "qsi/matrix.hpp"

#include <algorithm>

namespace qsi {

std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw IndexMismatch("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

bool Matrix::is_integral() const {
    for (const auto& x : data_)
        if (x.get_den() != 1) return false;
    return true;
}

Rat det_exact(const Matrix& m) {
    if (!m.is_square()) throw NotSquare("det of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);

    // Clear denominators row by row; track the accumulated scale factor.
    std::vector<IntVec> a(n, IntVec(n));
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, m.at(i, j).get_den());
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& x = m.at(i, j);
            a[i][j] = x.get_num() * (l / x.get_den());
        }
        scale *= l;
    }

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return Rat(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat det = make_rat(a[n - 1][n - 1], scale);
    if (sign < 0) det = -det;
    return det;
}

std::size_t rank_exact(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        const Rat inv_p = 1 / a[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const Rat f = a[i][col] * inv_p;
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::size_t kernel_dim(const Matrix& m) { return m.cols() - rank_exact(m); }

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw NotSquare("inverse of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw SingularBlock("singular matrix has no inverse");
        std::swap(a[col], a[piv]);
        const Rat inv_p = 1 / a[col][col];
        for (std::size_t j = col; j < 2 * n; ++j) a[col][j] *= inv_p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = col; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = a[i][n + j];
    return r;
}

std::optional<std::vector<Rat>> solve_unique(const Matrix& a, const std::vector<Rat>& b) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (b.size() != rows) throw IndexMismatch("solve_unique rhs size");
    std::vector<std::vector<Rat>> w(rows, std::vector<Rat>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) w[i][j] = a.at(i, j);
        w[i][cols] = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && w[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(w[rank], w[piv]);
        const Rat inv_p = 1 / w[rank][col];
        for (std::size_t j = col; j <= cols; ++j) w[rank][j] *= inv_p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || w[i][col] == 0) continue;
            const Rat f = w[i][col];
            for (std::size_t j = col; j <= cols; ++j) w[i][j] -= f * w[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    // Inconsistent system: a zero row with nonzero rhs.
    for (std::size_t i = rank; i < rows; ++i)
        if (w[i][cols] != 0) return std::nullopt;
    if (rank < cols) throw IndexMismatch("solve_unique: columns not independent");
    std::vector<Rat> x(cols);
    for (std::size_t k = 0; k < rank; ++k) x[pivot_col[k]] = w[k][cols];
    return x;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

// Residue of an exact rational mod p, or nullopt when the denominator is 0 mod p.
std::optional<u64> residue(const Rat& x, u64 p) {
    Int num = x.get_num() % Int(p);
    if (num < 0) num += Int(p);
    Int den = x.get_den() % Int(p);
    if (den == 0) return std::nullopt;
    u64 n = num.get_ui(), d = den.get_ui();
    return mulmod(n, invmod(d, p), p);
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::optional<u64> det_mod_p(const Matrix& m, u64 p) {
    if (!m.is_square()) throw NotSquare("det of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<u64>> a(n, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto r = residue(m.at(i, j), p);
            if (!r) return std::nullopt;
            a[i][j] = *r;
        }
    u64 det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[k], a[piv]);
            det = p - det;
            if (det == p) det = 0;
        }
        det = mulmod(det, a[k][k], p);
        const u64 inv_p = invmod(a[k][k], p);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const u64 f = mulmod(a[i][k], inv_p, p);
            for (std::size_t j = k; j < n; ++j) {
                u64 t = mulmod(f, a[k][j], p);
                a[i][j] = a[i][j] >= t ? a[i][j] - t : a[i][j] + p - t;
            }
        }
    }
    return det;
}

std::optional<std::size_t> rank_mod_p(const Matrix& m, u64 p) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<u64>> a(rows, std::vector<u64>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            auto r = residue(m.at(i, j), p);
            if (!r) return std::nullopt;
            a[i][j] = *r;
        }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[rank], a[piv]);
        const u64 inv_p = invmod(a[rank][col], p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const u64 f = mulmod(a[i][col], inv_p, p);
            for (std::size_t j = col; j < cols; ++j) {
                u64 t = mulmod(f, a[rank][j], p);
                a[i][j] = a[i][j] >= t ? a[i][j] - t : a[i][j] + p - t;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace qsi
