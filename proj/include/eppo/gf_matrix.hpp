#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eppo/gf.hpp"

namespace eppo {

/// Dense matrix over a fixed finite field. Dimensions in this library never
/// exceed 4, so no effort is spent on anything clever.
class Matrix {
public:
    Matrix(const Field& f, uint32_t rows, uint32_t cols);  // zero matrix
    static Matrix identity(const Field& f, uint32_t n);

    const Field& field() const { return *field_; }
    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }

    uint32_t at(uint32_t r, uint32_t c) const { return entries_[r * cols_ + c]; }
    void set(uint32_t r, uint32_t c, uint32_t v) { entries_[r * cols_ + c] = v; }
    const std::vector<uint32_t>& entries() const { return entries_; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const;

    Matrix pow(uint64_t e) const;
    Matrix inverse() const;  // throws PreconditionError when singular
    uint32_t det() const;

    bool is_identity() const;
    bool is_diagonal() const;
    /// Exactly one nonzero entry in every row and every column.
    bool is_monomial() const;
    bool is_invertible() const { return det() != 0; }

    /// Matrix-vector product M * v.
    std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const;

    std::string to_string() const;

private:
    const Field* field_;
    uint32_t rows_, cols_;
    std::vector<uint32_t> entries_;
};

struct MatrixHash {
    size_t operator()(const Matrix& m) const {
        uint64_t h = 1469598103934665603ull;
        h ^= m.rows();
        h *= 1099511628211ull;
        for (uint32_t v : m.entries()) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

/// det(M - I) = 0, i.e. 1 is an eigenvalue of M.
bool has_eigenvalue_one(const Matrix& m);

/// For a monomial M with M^p = I (p prime): reports whether 1 is an
/// eigenvalue. For any such M that is not diagonal the answer is always
/// true (the entry product along each cycle is forced to 1).
/// Throws PreconditionError when M^p != I.
bool monomial_eigenvalue_check(const Matrix& m, uint64_t p);

/// Full multiplicative closure of invertible generators.
/// Throws CapExceededError if the closure grows past `cap`.
std::vector<Matrix> matrix_group_closure(const std::vector<Matrix>& gens, uint64_t cap);

}  // namespace eppo
