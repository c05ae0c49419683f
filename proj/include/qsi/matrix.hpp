#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qsi/errors.hpp"
#include "qsi/types.hpp"

namespace qsi {

/// Dense matrix over the rationals, row-major. All entries are kept in
/// canonical reduced form (mpq invariant).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const = default;

    Matrix operator*(const Matrix& o) const;  // IndexMismatch on shape clash

    bool is_integral() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// Exact determinant by fraction-free Bareiss elimination on the
/// denominator-cleared integer matrix. The 0x0 matrix has determinant 1.
Rat det_exact(const Matrix& m);  // NotSquare

/// Exact rank by rational Gaussian elimination. Deliberately a different
/// elimination routine from det_exact so the two can cross-check each other.
std::size_t rank_exact(const Matrix& m);

/// dim ker = cols - rank.
std::size_t kernel_dim(const Matrix& m);

Matrix inverse(const Matrix& m);  // SingularBlock if singular, NotSquare

/// Unique rational solution of A x = b, or nullopt when inconsistent.
/// Requires the columns of A to be linearly independent.
std::optional<std::vector<Rat>> solve_unique(const Matrix& a, const std::vector<Rat>& b);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Mod-p screening kernel. Entries are reduced mod p (denominators must be
/// invertible mod p, which holds for any prime beyond the data's magnitude);
/// returns nullopt when a denominator collides with p and the caller must
/// fall back to the exact path.
std::optional<std::uint64_t> det_mod_p(const Matrix& m, std::uint64_t p);   // NotSquare
std::optional<std::size_t> rank_mod_p(const Matrix& m, std::uint64_t p);

}  // namespace qsi
