#include <catch2/catch_amalgamated.hpp>

#include "hopfkit/linalg.hpp"

using namespace hopfkit;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vector> rs;
    std::size_t cols = 0;
    for (auto r : rows) {
        Vector v;
        for (long x : r) v.emplace_back(x);
        cols = v.size();
        rs.push_back(v);
    }
    return Matrix::from_rows(rs, cols);
}

Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    Rational a(2, 4);
    CHECK(a.str() == "1/2");
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(4, -2).str() == "-2");
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK(Rational::parse("-5").str() == "-5");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("solve_linear examples") {
    auto x = solve_linear(mat({{1, 0}, {0, 1}}), vec({3, 5}));
    REQUIRE(x);
    CHECK(*x == vec({3, 5}));
    CHECK_FALSE(solve_linear(mat({{1, 1}, {1, 1}}), vec({1, 0})));
    auto h = solve_linear(mat({{2}}), vec({1}));
    REQUIRE(h);
    CHECK((*h)[0] == Rational(1, 2));
    CHECK_THROWS_AS(solve_linear(mat({{1, 0}}), vec({1, 2})), DimensionError);
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(mat({{1, 0}, {0, 1}})).empty());
    auto k = kernel_basis(mat({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK(kernel_basis(Matrix(2, 3)).size() == 3);
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(4)) == 4);
    CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(Matrix(3, 5)) == 0);
}

TEST_CASE("span_contains examples") {
    auto r = span_contains({vec({1, 0})}, vec({2, 0}));
    CHECK(r.contained);
    CHECK(r.coefficients == vec({2}));
    CHECK_FALSE(span_contains({vec({1, 0})}, vec({0, 1})).contained);
    auto s = span_contains({vec({1, 1}), vec({1, -1})}, vec({0, 1}));
    REQUIRE(s.contained);
    CHECK(s.coefficients == vec({Rational(1, 2), Rational(-1, 2)}));
    CHECK_THROWS_AS(span_contains({vec({1, 0})}, vec({1, 0, 0})), DimensionError);
}

TEST_CASE("rank plus nullity equals columns; solutions substitute back exactly") {
    std::uint64_t state = 7;
    auto next = [&] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 7) - 3;
    };
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + trial % 5, c = 1 + (trial * 3) % 6;
        Matrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (trial % 3 == 0 || next() > 0) a.set(i, j, next());
        auto ker = kernel_basis(a);
        CHECK(rank(a) + ker.size() == c);
        for (const auto& v : ker) CHECK(is_zero(a.apply(v)));
        Vector x0(c);
        for (auto& v : x0) v = next();
        Vector b = a.apply(x0);
        auto x = solve_linear(a, b);
        REQUIRE(x);
        CHECK(a.apply(*x) == b);
    }
}

TEST_CASE("kernel output is canonical") {
    Matrix a = mat({{1, 2, 3}, {2, 4, 6}});
    Matrix b = mat({{2, 4, 6}, {1, 2, 3}});
    CHECK(kernel_basis(a) == kernel_basis(b));
}

TEST_CASE("matrix bounds and sparse/dense agreement") {
    Matrix m(3, 3);
    CHECK_THROWS_AS(m.get(3, 0), DimensionError);
    CHECK_THROWS_AS(m.set(0, 5, 1), DimensionError);
    m.set(0, 0, 1);
    CHECK_FALSE(m.is_dense());
    Matrix sparse_copy = m;
    m.set(1, 1, 2);
    m.set(2, 2, 3);
    CHECK(m.is_dense());
    sparse_copy.set(1, 1, 2);
    sparse_copy.set(2, 2, 3);
    CHECK(m == sparse_copy);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(m.get(i, j) == sparse_copy.get(i, j));
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(3));
}

TEST_CASE("tensor stores only nonzero entries") {
    Tensor3 t(2, 2, 2);
    t.set(0, 1, 1, 5);
    t.add(0, 1, 1, -5);
    CHECK(t.nnz() == 0);
    t.set(1, 1, 0, Rational(1, 2));
    CHECK(t.get(1, 1, 0) == Rational(1, 2));
    CHECK_THROWS_AS(t.get(2, 0, 0), DimensionError);
}

TEST_CASE("subspace coordinates") {
    Subspace s({vec({1, 1, 0}), vec({0, 1, 1})}, 3);
    CHECK(s.dim() == 2);
    auto c = s.coords(vec({1, 2, 1}));
    REQUIRE(c);
    CHECK(s.from_coords(*c) == vec({1, 2, 1}));
    CHECK_FALSE(s.coords(vec({1, 0, 0})));
    CHECK(Subspace({vec({2, 2, 0}), vec({1, 2, 1})}, 3) == s);
}
