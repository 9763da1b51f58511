#include "msf7/error.hpp"
#include "msf7/exterior.hpp"
#include "msf7/json_io.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace msf7;

namespace {

KForm a(std::initializer_list<int> idx) { return KForm::monomial(MultiIndex(idx)); }

const KForm omega1 = KForm::parse(3, "+127 +134 +256");
const KForm omega8 = KForm::parse(3, "+123 +145 -167 +246 +257 +347 -356");

}  // namespace

TEST_CASE("scalar parsing")
{
    CHECK(parse_scalar("-2/4") == Scalar(-1, 2));
    CHECK(to_string(parse_scalar("+6/3")) == "2");
    CHECK_THROWS_AS(parse_scalar("1/0"), Error);
    CHECK_THROWS_AS(parse_scalar("x"), Error);
    CHECK_THROWS_AS(parse_scalar("1/-2"), Error);
}

TEST_CASE("multi-index validation")
{
    CHECK_THROWS_AS(MultiIndex({2, 1}), Error);
    CHECK_THROWS_AS(MultiIndex({0, 1}), Error);
    CHECK_THROWS_AS(MultiIndex({1, 8}), Error);
    CHECK(MultiIndex({1, 2, 7}) < MultiIndex({1, 3, 4}));
    CHECK(multi_indices(3).size() == 35);
    CHECK(multi_indices(0).size() == 1);
}

TEST_CASE("wedge examples")
{
    CHECK(wedge(a({1}), a({1})).is_zero());
    CHECK(wedge(a({1}), a({2})) == a({1, 2}));
    CHECK(wedge(a({2}), a({1})) == -a({1, 2}));
    CHECK(wedge(a({1, 2}), a({7})) == a({1, 2, 7}));
    CHECK(omega1.coef(MultiIndex{1, 2, 7}) == 1);
    KForm big = wedge(a({1, 2, 3, 4}), a({5, 6, 7}));
    CHECK(big.degree() == 7);
    CHECK(wedge(big, a({1})).degree() == 8);
    CHECK(wedge(big, a({1})).is_zero());
}

TEST_CASE("interior examples")
{
    CHECK(interior(basis_vector(1), omega8) == KForm::parse(2, "+23 +45 -67"));
    CHECK(interior(basis_vector(7), a({1, 2, 3})).is_zero());
    Vector v = basis_vector(1);
    v[1] = 1;
    CHECK(interior(v, omega1) == KForm::parse(2, "+27 +34 -17 +56"));
    CHECK_THROWS_WITH_AS(interior(v, KForm::monomial(MultiIndex{}, 3)), "cannot contract a scalar", Error);
}

TEST_CASE("pullback examples")
{
    KForm w5 = KForm::parse(3, "+123 -145 +167 +246 +257 +347 -356");
    CHECK(pullback(LinearMap::identity(), w5) == w5);
    oracle::Gen gen(11);
    for (int t = 0; t < 5; ++t) {
        KForm f = gen.form(3);
        CHECK(pullback(LinearMap::scaled_identity(2), f) == Scalar(8) * f);
    }
}

TEST_CASE("wedge, interior, pullback agree with permutation-sum oracles")
{
    oracle::Gen gen(2024);
    for (int t = 0; t < 40; ++t) {
        int p = static_cast<int>(gen.integer(0, 4)), q = static_cast<int>(gen.integer(0, 3));
        KForm x = gen.form(p, 0.4), y = gen.form(q, 0.4);
        CHECK(wedge(x, y) == oracle::wedge(x, y));
        if (p >= 1) {
            Vector v = gen.vector();
            CHECK(interior(v, x) == oracle::interior(v, x));
        }
        LinearMap g = gen.map(2, true);
        CHECK(pullback(g, x) == oracle::pullback(g, x));
        if (p == 3) {
            std::vector<Vector> args{gen.vector(), gen.vector(), gen.vector()};
            CHECK(evaluate(x, args) == oracle::evaluate(x, args));
        }
    }
}

TEST_CASE("property: graded commutativity and associativity")
{
    oracle::Gen gen(7);
    for (int t = 0; t < 60; ++t) {
        int p = static_cast<int>(gen.integer(0, 3)), q = static_cast<int>(gen.integer(0, 3)),
            r = static_cast<int>(gen.integer(0, 2));
        KForm x = gen.form(p), y = gen.form(q), z = gen.form(r);
        Scalar sign = (p * q) % 2 ? -1 : 1;
        CHECK(wedge(x, y) == sign * wedge(y, x));
        CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
    }
}

TEST_CASE("property: interior is an antiderivation")
{
    oracle::Gen gen(99);
    for (int t = 0; t < 60; ++t) {
        int p = static_cast<int>(gen.integer(1, 4)), q = static_cast<int>(gen.integer(1, 4));
        if (p + q > 7) continue;
        KForm x = gen.form(p), y = gen.form(q);
        Vector v = gen.vector();
        Scalar sign = p % 2 ? -1 : 1;
        CHECK(interior(v, wedge(x, y)) == wedge(interior(v, x), y) + sign * wedge(x, interior(v, y)));
    }
}

TEST_CASE("property: pullback is multiplicative and contravariant")
{
    oracle::Gen gen(5);
    for (int t = 0; t < 30; ++t) {
        KForm x = gen.form(static_cast<int>(gen.integer(1, 3))), y = gen.form(static_cast<int>(gen.integer(1, 3)));
        LinearMap g = gen.map(2), h = gen.map(2);
        CHECK(pullback(g, wedge(x, y)) == wedge(pullback(g, x), pullback(g, y)));
        CHECK(pullback(g * h, x) == pullback(h, pullback(g, x)));
    }
}

TEST_CASE("property: interior commutes with pullback")
{
    oracle::Gen gen(6);
    for (int t = 0; t < 30; ++t) {
        KForm x = gen.form(static_cast<int>(gen.integer(1, 4)));
        LinearMap g = gen.invertible_map(2);
        Vector v = gen.vector();
        CHECK(interior(v, pullback(g, x)) == pullback(g, interior(g.apply(v), x)));
    }
}

TEST_CASE("kernel examples")
{
    CHECK(kernel(Matrix::identity(7)).empty());
    CHECK(kernel(Matrix(3, 5)).size() == 5);
    Matrix m{{1, 2, 3}, {2, 4, 6}};
    auto k = kernel(m);
    REQUIRE(k.size() == 2);
    for (auto& x : k) {
        for (auto& v : m.apply(x)) CHECK(is_zero(v));
        for (auto& v : x) CHECK(v.get_den() == 1);
    }
}

TEST_CASE("property: kernel, rank, solve against Gauss-Jordan")
{
    oracle::Gen gen(31);
    for (int t = 0; t < 80; ++t) {
        std::size_t r = gen.integer(1, 9), c = gen.integer(1, 9);
        Matrix m = gen.matrix(r, c, 3, 0.5);
        // force some dependence
        if (r > 2 && gen.coin())
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(1, j) / 3;
        auto ker = kernel(m);
        int rk = rank(m);
        CHECK(rk == oracle::rank(m));
        CHECK(rk + static_cast<int>(ker.size()) == static_cast<int>(c));
        for (auto& x : ker)
            for (auto& v : m.apply(x)) CHECK(is_zero(v));
        if (!ker.empty()) {
            Matrix K(c, ker.size());
            for (std::size_t j = 0; j < ker.size(); ++j)
                for (std::size_t i = 0; i < c; ++i) K(i, j) = ker[j][i];
            CHECK(oracle::rank(K) == static_cast<int>(ker.size()));
        }
        std::vector<Scalar> x0(c);
        for (auto& v : x0) v = gen.scalar();
        auto b = m.apply(x0);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
    Matrix m{{1, 1}, {1, 1}};
    CHECK_FALSE(solve(m, {1, 2}).has_value());
}

TEST_CASE("determinant and inverse")
{
    oracle::Gen gen(17);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = gen.integer(1, 6);
        Matrix m = gen.matrix(n, n, 4);
        Scalar d = determinant(m);
        CHECK(d == oracle::det_leibniz(m));
        if (!is_zero(d)) CHECK(m * inverse(m) == Matrix::identity(n));
        else CHECK_THROWS_AS(inverse(m), Error);
    }
}

TEST_CASE("signature examples")
{
    CHECK(signature(Matrix::identity(7)) == Signature{7, 0, 0});
    CHECK(signature(Matrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}) == Signature{1, 1, 1});
    CHECK(signature(Matrix{{0, 1}, {1, 0}}) == Signature{1, 1, 0});
    CHECK_THROWS_AS(signature(Matrix{{0, 1}, {2, 0}}), Error);
}

TEST_CASE("property: signature matches characteristic polynomial and is congruence invariant")
{
    oracle::Gen gen(41);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = gen.integer(1, 7);
        Matrix s = gen.matrix(n, n, 3, 0.5);
        for (std::size_t i = 0; i < n; ++i) {
            s(i, i) = gen.coin(0.6) ? Scalar(0) : s(i, i);
            for (std::size_t j = 0; j < i; ++j) s(i, j) = s(j, i);
        }
        Signature sig = signature(s);
        CHECK(sig == oracle::signature(s));
        CHECK(sig.pos + sig.neg + sig.null == static_cast<int>(n));
        Matrix p = gen.matrix(n, n, 2);
        if (is_zero(determinant(p))) continue;
        CHECK(signature(p.transpose() * s * p) == sig);
    }
}

TEST_CASE("json round trip")
{
    Json j = to_json(KForm::parse(3, "+127 -1/2*256"));
    CHECK(j.dump() == R"({"degree":3,"terms":[{"idx":[1,2,7],"coef":"1"},{"idx":[2,5,6],"coef":"-1/2"}]})");
    CHECK(kform_from_json(j) == KForm::parse(3, "+127 -1/2*256"));
    oracle::Gen gen(3);
    LinearMap g = gen.map(3, true);
    CHECK(linear_map_from_json(to_json(g)) == g);
    CHECK_THROWS_AS(parse_kform("{"), Error);
    CHECK_THROWS_AS(parse_kform(R"({"degree":3,"terms":[{"idx":[2,1,3],"coef":"1"}]})"), Error);
    CHECK_THROWS_AS(parse_kform(R"({"degree":2,"terms":[{"idx":[1,2,3],"coef":"1"}]})"), Error);
}
