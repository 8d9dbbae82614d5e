#include "eppo/gf_matrix.hpp"

#include <sstream>
#include <unordered_set>

#include "eppo/errors.hpp"

namespace eppo {

Matrix::Matrix(const Field& f, uint32_t rows, uint32_t cols)
    : field_(&f), rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, 0) {
    if (rows == 0 || cols == 0) throw PreconditionError("Matrix: dimensions must be positive");
}

Matrix Matrix::identity(const Field& f, uint32_t n) {
    Matrix m(f, n, n);
    for (uint32_t i = 0; i < n; ++i) m.set(i, i, f.one());
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_ || field_ != rhs.field_)
        throw PreconditionError("Matrix: incompatible product");
    Matrix out(*field_, rows_, rhs.cols_);
    for (uint32_t i = 0; i < rows_; ++i)
        for (uint32_t k = 0; k < cols_; ++k) {
            const uint32_t a = at(i, k);
            if (a == 0) continue;
            for (uint32_t j = 0; j < rhs.cols_; ++j)
                out.set(i, j, field_->add(out.at(i, j), field_->mul(a, rhs.at(k, j))));
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        throw PreconditionError("Matrix: incompatible sum");
    Matrix out(*field_, rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = field_->add(entries_[i], rhs.entries_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        throw PreconditionError("Matrix: incompatible difference");
    Matrix out(*field_, rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = field_->sub(entries_[i], rhs.entries_[i]);
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           entries_ == rhs.entries_;
}

Matrix Matrix::pow(uint64_t e) const {
    if (rows_ != cols_) throw PreconditionError("Matrix: pow requires a square matrix");
    Matrix acc = identity(*field_, rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

uint32_t Matrix::det() const {
    if (rows_ != cols_) throw PreconditionError("Matrix: det requires a square matrix");
    Matrix work = *this;
    const Field& f = *field_;
    uint32_t result = f.one();
    for (uint32_t col = 0; col < cols_; ++col) {
        uint32_t pivot = col;
        while (pivot < rows_ && work.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) return 0;
        if (pivot != col) {
            for (uint32_t j = 0; j < cols_; ++j) {
                const uint32_t t = work.at(col, j);
                work.set(col, j, work.at(pivot, j));
                work.set(pivot, j, t);
            }
            result = f.neg(result);
        }
        const uint32_t d = work.at(col, col);
        result = f.mul(result, d);
        const uint32_t dinv = f.inv(d);
        for (uint32_t r = col + 1; r < rows_; ++r) {
            const uint32_t factor = f.mul(work.at(r, col), dinv);
            if (factor == 0) continue;
            for (uint32_t j = col; j < cols_; ++j)
                work.set(r, j, f.sub(work.at(r, j), f.mul(factor, work.at(col, j))));
        }
    }
    return result;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw PreconditionError("Matrix: inverse requires a square matrix");
    const Field& f = *field_;
    Matrix work = *this;
    Matrix out = identity(f, rows_);
    for (uint32_t col = 0; col < cols_; ++col) {
        uint32_t pivot = col;
        while (pivot < rows_ && work.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) throw PreconditionError("Matrix: singular matrix has no inverse");
        if (pivot != col) {
            for (uint32_t j = 0; j < cols_; ++j) {
                std::swap(work.entries_[col * cols_ + j], work.entries_[pivot * cols_ + j]);
                std::swap(out.entries_[col * cols_ + j], out.entries_[pivot * cols_ + j]);
            }
        }
        const uint32_t dinv = f.inv(work.at(col, col));
        for (uint32_t j = 0; j < cols_; ++j) {
            work.set(col, j, f.mul(work.at(col, j), dinv));
            out.set(col, j, f.mul(out.at(col, j), dinv));
        }
        for (uint32_t r = 0; r < rows_; ++r) {
            if (r == col) continue;
            const uint32_t factor = work.at(r, col);
            if (factor == 0) continue;
            for (uint32_t j = 0; j < cols_; ++j) {
                work.set(r, j, f.sub(work.at(r, j), f.mul(factor, work.at(col, j))));
                out.set(r, j, f.sub(out.at(r, j), f.mul(factor, out.at(col, j))));
            }
        }
    }
    return out;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (uint32_t i = 0; i < rows_; ++i)
        for (uint32_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? field_->one() : 0u)) return false;
    return true;
}

bool Matrix::is_diagonal() const {
    if (rows_ != cols_) return false;
    for (uint32_t i = 0; i < rows_; ++i)
        for (uint32_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

bool Matrix::is_monomial() const {
    if (rows_ != cols_) return false;
    for (uint32_t i = 0; i < rows_; ++i) {
        uint32_t nonzero = 0;
        for (uint32_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) ++nonzero;
        if (nonzero != 1) return false;
    }
    for (uint32_t j = 0; j < cols_; ++j) {
        uint32_t nonzero = 0;
        for (uint32_t i = 0; i < rows_; ++i)
            if (at(i, j) != 0) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

std::vector<uint32_t> Matrix::apply(const std::vector<uint32_t>& v) const {
    if (v.size() != cols_) throw PreconditionError("Matrix: vector length mismatch");
    std::vector<uint32_t> out(rows_, 0);
    for (uint32_t i = 0; i < rows_; ++i)
        for (uint32_t j = 0; j < cols_; ++j)
            out[i] = field_->add(out[i], field_->mul(at(i, j), v[j]));
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (uint32_t i = 0; i < rows_; ++i) {
        if (i) out << "; ";
        for (uint32_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << field_->element_to_string(at(i, j));
        }
    }
    out << ']';
    return out.str();
}

bool has_eigenvalue_one(const Matrix& m) {
    if (m.rows() != m.cols())
        throw PreconditionError("has_eigenvalue_one: matrix must be square");
    return (m - Matrix::identity(m.field(), m.rows())).det() == 0;
}

bool monomial_eigenvalue_check(const Matrix& m, uint64_t p) {
    if (!m.pow(p).is_identity())
        throw PreconditionError("monomial_eigenvalue_check: M^p != I");
    return has_eigenvalue_one(m);
}

std::vector<Matrix> matrix_group_closure(const std::vector<Matrix>& gens, uint64_t cap) {
    if (gens.empty()) throw PreconditionError("matrix_group_closure: no generators");
    const Field& f = gens[0].field();
    const uint32_t n = gens[0].rows();
    for (const auto& g : gens) {
        if (&g.field() != &f || g.rows() != n || g.cols() != n)
            throw PreconditionError("matrix_group_closure: mixed shapes or fields");
        if (!g.is_invertible())
            throw PreconditionError("matrix_group_closure: generators must be invertible");
    }
    std::unordered_set<Matrix, MatrixHash> seen;
    std::vector<Matrix> out;
    out.push_back(Matrix::identity(f, n));
    seen.insert(out.back());
    for (size_t qi = 0; qi < out.size(); ++qi) {
        for (const auto& g : gens) {
            Matrix next = out[qi] * g;
            if (seen.insert(next).second) {
                out.push_back(std::move(next));
                if (out.size() > cap)
                    throw CapExceededError("matrix_group_closure: closure exceeds cap " +
                                           std::to_string(cap));
            }
        }
    }
    return out;
}

}  // namespace eppo
