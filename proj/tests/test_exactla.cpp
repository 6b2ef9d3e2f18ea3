#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dunkl/exactla.hpp"

using namespace dunkl;

namespace {

Scalar c_sym() { return Scalar::symbol(0); }

Matrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(r, c) = rows[r][c];
    return m;
}

std::vector<Scalar> mat_apply(const Matrix& a, const std::vector<Scalar>& x) {
    std::vector<Scalar> y(a.rows());
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < a.cols(); ++c)
            y[r] += a.at(r, c) * x[c];
    return y;
}

Scalar rnd_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> v(-4, 4);
    long num = v(rng);
    if (rng() % 3 == 0)
        return Scalar(Rational(num)) + c_sym() * Scalar(Rational(v(rng)));
    return Scalar(Rational(num));
}

}  // namespace

TEST_CASE("solve: identity, symbolic pivot, inconsistent") {
    Matrix id = from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}});
    std::vector<Scalar> b{Scalar(5), c_sym()};
    auto r = solve(id, b);
    REQUIRE(r.status == SolveStatus::Ok);
    CHECK(r.x == b);

    // [[c,0],[0,1]] x = (c,1): solution (1,1), pivot certificate c != 0
    Matrix a = from_rows({{c_sym(), Scalar(0)}, {Scalar(0), Scalar(1)}});
    auto r2 = solve(a, {c_sym(), Scalar(1)});
    REQUIRE(r2.status == SolveStatus::Ok);
    CHECK(r2.x == std::vector<Scalar>{Scalar(1), Scalar(1)});
    REQUIRE(r2.pivots.size() == 2);
    CHECK(r2.pivots[0] == c_sym());

    Matrix ones = from_rows({{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1)}});
    CHECK(solve(ones, {Scalar(1), Scalar(0)}).status == SolveStatus::NoSolution);
    CHECK(solve(ones, {Scalar(1), Scalar(1)}).status == SolveStatus::NonUnique);
}

TEST_CASE("kernel_basis basics") {
    Matrix z(2, 2);
    CHECK(kernel_basis(z).size() == 2);

    Matrix id = from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}});
    CHECK(kernel_basis(id).empty());

    Matrix row = from_rows({{Scalar(1), Scalar(1)}});
    auto k = kernel_basis(row);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<Scalar>{-Scalar(1), Scalar(1)});
}

TEST_CASE("solve/kernel exactness on random symbolic matrices") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = 3 + trial % 2, m = 3;
        Matrix a(n, m);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < m; ++c)
                a.at(r, c) = rnd_scalar(rng);
        std::vector<Scalar> x0(m);
        for (auto& v : x0)
            v = rnd_scalar(rng);
        std::vector<Scalar> b = mat_apply(a, x0);
        auto r = solve(a, b);
        if (r.status == SolveStatus::Ok)
            CHECK(mat_apply(a, r.x) == b);

        auto ker = kernel_basis(a);
        CHECK(ker.size() + rank(a) == m);
        std::vector<Scalar> zero(n);
        for (const auto& v : ker)
            CHECK(mat_apply(a, v) == zero);
    }
}
