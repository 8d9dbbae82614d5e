#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eppo/gf_matrix.hpp"

#include "eppo/errors.hpp"
#include "eppo/rng.hpp"

using namespace eppo;

namespace {

Matrix from_rows(const Field& f, std::vector<std::vector<int64_t>> rows) {
    Matrix m(f, static_cast<uint32_t>(rows.size()), static_cast<uint32_t>(rows[0].size()));
    for (uint32_t i = 0; i < rows.size(); ++i)
        for (uint32_t j = 0; j < rows[i].size(); ++j) m.set(i, j, f.from_int(rows[i][j]));
    return m;
}

Matrix random_matrix(const Field& f, uint32_t n, SeededRng& rng) {
    Matrix m(f, n, n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) m.set(i, j, static_cast<uint32_t>(rng.below(f.size())));
    return m;
}

// Oracle: a nonzero fixed vector of M found by solving (M - I)v = 0 with
// row reduction, independent of the determinant route.
bool has_fixed_vector_oracle(const Matrix& m) {
    const Field& f = m.field();
    const uint32_t n = m.rows();
    Matrix a = m - Matrix::identity(f, n);
    // Row-reduce; count pivots.
    uint32_t rank = 0;
    for (uint32_t col = 0; col < n && rank < n; ++col) {
        uint32_t pivot = rank;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) continue;
        for (uint32_t j = 0; j < n; ++j) {
            const uint32_t t = a.at(rank, j);
            a.set(rank, j, a.at(pivot, j));
            a.set(pivot, j, t);
        }
        const uint32_t dinv = f.inv(a.at(rank, col));
        for (uint32_t j = 0; j < n; ++j) a.set(rank, j, f.mul(a.at(rank, j), dinv));
        for (uint32_t r = 0; r < n; ++r) {
            if (r == rank) continue;
            const uint32_t factor = a.at(r, col);
            for (uint32_t j = 0; j < n; ++j)
                a.set(r, j, f.sub(a.at(r, j), f.mul(factor, a.at(rank, j))));
        }
        ++rank;
    }
    return rank < n;
}

}  // namespace

TEST_CASE("determinant basics") {
    const Field& f3 = Field::get(3, 1);
    CHECK(Matrix::identity(f3, 3).det() == 1);
    auto diag = from_rows(f3, {{2, 0}, {0, 2}});
    CHECK(diag.det() == f3.mul(2, 2));
    auto singular = from_rows(f3, {{1, 2}, {2, 4}});
    CHECK(singular.det() == 0);
    CHECK_THROWS_AS(singular.inverse(), PreconditionError);
}

TEST_CASE("inverse property on random invertible matrices") {
    for (const auto& pk : {std::pair{3u, 1u}, {7u, 1u}, {2u, 3u}, {5u, 2u}}) {
        const Field& f = Field::get(pk.first, pk.second);
        SeededRng rng(1000 + pk.first);
        int found = 0;
        while (found < 40) {
            auto m = random_matrix(f, 3, rng);
            if (!m.is_invertible()) continue;
            ++found;
            CHECK(m * m.inverse() == Matrix::identity(f, 3));
            CHECK(m.inverse() * m == Matrix::identity(f, 3));
            CHECK(f.mul(m.det(), m.inverse().det()) == f.one());
        }
    }
}

TEST_CASE("det is multiplicative") {
    const Field& f = Field::get(5, 1);
    SeededRng rng(5);
    for (int t = 0; t < 60; ++t) {
        auto a = random_matrix(f, 3, rng);
        auto b = random_matrix(f, 3, rng);
        CHECK((a * b).det() == f.mul(a.det(), b.det()));
    }
}

TEST_CASE("eigenvalue-one test") {
    const Field& f3 = Field::get(3, 1);
    CHECK(has_eigenvalue_one(Matrix::identity(f3, 2)));
    // Companion matrix of x^2 + 1 over GF(3): no eigenvalue 1
    // (det(M - I) = 2 != 0 in GF(3)).
    auto rot = from_rows(f3, {{0, -1}, {1, 0}});
    CHECK_FALSE(has_eigenvalue_one(rot));
    CHECK((rot - Matrix::identity(f3, 2)).det() == 2);
    // Permutation matrix with a fixed point keeps a basis vector.
    auto swap12 = from_rows(f3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(has_eigenvalue_one(swap12));
}

TEST_CASE("eigenvalue-one matches the kernel oracle on random matrices") {
    for (const auto& pk : {std::pair{2u, 1u}, {3u, 1u}, {5u, 1u}, {2u, 2u}, {3u, 2u}}) {
        const Field& f = Field::get(pk.first, pk.second);
        SeededRng rng(99 + pk.first * 10 + pk.second);
        for (int t = 0; t < 150; ++t) {
            auto m = random_matrix(f, 2 + static_cast<uint32_t>(rng.below(3)), rng);
            CHECK(has_eigenvalue_one(m) == has_fixed_vector_oracle(m));
        }
    }
}

TEST_CASE("monomial recognition") {
    const Field& f5 = Field::get(5, 1);
    CHECK(from_rows(f5, {{2, 0}, {0, 3}}).is_monomial());
    CHECK(from_rows(f5, {{0, 2}, {3, 0}}).is_monomial());
    CHECK_FALSE(from_rows(f5, {{1, 1}, {0, 1}}).is_monomial());
    CHECK_FALSE(from_rows(f5, {{0, 0}, {0, 1}}).is_monomial());
}

TEST_CASE("antidiagonal monomial with entry product 1 has eigenvalue 1") {
    for (uint32_t p : {3u, 5u, 7u, 17u}) {
        const Field& f = Field::get(p, 1);
        for (uint32_t a = 1; a < f.size(); ++a) {
            auto m = from_rows(f, {{0, 0}, {0, 0}});
            m.set(0, 1, a);
            m.set(1, 0, f.inv(a));
            CHECK(monomial_eigenvalue_check(m, 2));
        }
    }
}

TEST_CASE("3-cycle monomial with entry product 1, p = 3") {
    const Field& f7 = Field::get(7, 1);
    SeededRng rng(3);
    for (int t = 0; t < 100; ++t) {
        const uint32_t a = 1 + static_cast<uint32_t>(rng.below(6));
        const uint32_t b = 1 + static_cast<uint32_t>(rng.below(6));
        const uint32_t c = f7.inv(f7.mul(a, b));
        Matrix m(f7, 3, 3);
        m.set(0, 1, a);
        m.set(1, 2, b);
        m.set(2, 0, c);
        CHECK_FALSE(m.is_diagonal());
        CHECK(monomial_eigenvalue_check(m, 3));
    }
}

TEST_CASE("monomial check enforces its precondition") {
    const Field& f3 = Field::get(3, 1);
    auto m = from_rows(f3, {{0, 2}, {1, 0}});  // order 4, not order 2
    CHECK_THROWS_AS(monomial_eigenvalue_check(m, 2), PreconditionError);
}

TEST_CASE("matrix group closures") {
    const Field& f3 = Field::get(3, 1);
    // <companion of x^2+1> is cyclic of order 4.
    auto rot = from_rows(f3, {{0, -1}, {1, 0}});
    CHECK(matrix_group_closure({rot}, 100).size() == 4);
    // Q8 inside GL(2,3).
    auto i = from_rows(f3, {{0, 2}, {1, 0}});
    auto j = from_rows(f3, {{1, 1}, {1, 2}});
    CHECK(matrix_group_closure({i, j}, 100).size() == 8);
    // Identity alone.
    CHECK(matrix_group_closure({Matrix::identity(f3, 2)}, 10).size() == 1);
    // Cap refusal.
    CHECK_THROWS_AS(matrix_group_closure({i, j}, 5), CapExceededError);
    // Singular generators are rejected.
    auto sing = from_rows(f3, {{1, 2}, {2, 4}});
    CHECK_THROWS_AS(matrix_group_closure({sing}, 10), PreconditionError);
}

TEST_CASE("matrix powers") {
    const Field& f3 = Field::get(3, 1);
    auto rot = from_rows(f3, {{0, -1}, {1, 0}});
    CHECK(rot.pow(0).is_identity());
    CHECK(rot.pow(4).is_identity());
    CHECK_FALSE(rot.pow(2).is_identity());
    CHECK(rot.pow(2) == from_rows(f3, {{-1, 0}, {0, -1}}));
}
