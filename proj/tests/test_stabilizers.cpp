#include "msf7/error.hpp"
#include "msf7/stabilizers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace msf7;

namespace {

Scalar max_abs(const LinearMap& g)
{
    Scalar m = 0;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            if (abs(g(i, j)) > m) m = abs(g(i, j));
    return m;
}

Quaternion qmul(const Quaternion& a, const Quaternion& b)
{
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Mat2 m2mul(const Mat2& a, const Mat2& b)
{
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Error of the difference quotient (g(t) - I)/t against the tangent, for t = 1/10^n.
std::vector<Scalar> quotient_errors(const std::function<LinearMap(const Scalar&)>& curve, const LinearMap& tangent)
{
    std::vector<Scalar> errs;
    Scalar t = 1;
    for (int n = 0; n < 4; ++n) {
        t /= 10;
        LinearMap q = curve(t) - LinearMap::identity();
        LinearMap d;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) d(i, j) = q(i, j) / t - tangent(i, j);
        errs.push_back(max_abs(d));
    }
    return errs;
}

void check_converges(const std::vector<Scalar>& errs)
{
    for (std::size_t k = 1; k < errs.size(); ++k) CHECK(errs[k] * 5 < errs[k - 1] + Scalar(1, 1000000000));
    CHECK(errs.back() < Scalar(1, 100));
}

}  // namespace

TEST_CASE("catalog transformations")
{
    const auto& cat = catalog();
    CHECK(cat.size() >= 9);
    for (auto& t : cat) {
        INFO(t.name);
        CHECK(verify(t));
        CHECK(!is_zero(determinant(t.map)));
        if (t.claim == ClaimKind::Stabilizes)
            CHECK(oracle::pullback(t.map, canonical(t.orbit_id, t.variant).form) ==
                  canonical(t.orbit_id, t.variant).form);
    }
}

TEST_CASE("k6 second component: only e6 -> e5 works")
{
    // Sending e5 and e6 both to e6 is not invertible.
    LinearMap g = LinearMap::signed_permutation({2, 1, 3, 4, 6, 5, 7}, {1, 1, -1, 1, 1, 1, -1});
    LinearMap bad = g;
    for (int i = 0; i < kDim; ++i) bad(i, 5) = g(i, 4);
    CHECK(is_zero(determinant(bad)));
    // Every other signed image of e6 fails.
    const KForm w6 = canonical(6).form;
    int stabilizing = 0;
    for (int target = 1; target <= 7; ++target)
        for (int s : {1, -1}) {
            LinearMap h = g;
            for (int i = 0; i < kDim; ++i) h(i, 5) = 0;
            h(target - 1, 5) = s;
            if (!is_zero(determinant(h)) && verify_membership(h, w6)) ++stabilizing;
        }
    CHECK(stabilizing == 1);
}

TEST_CASE("embed_so4")
{
    ParamSampler s(3);
    const KForm w8 = canonical(8).form;
    for (int n = 0; n < 10; ++n) {
        Quaternion a = s.unit_quaternion(), b = s.unit_quaternion();
        LinearMap g = embed_so4(a, b);
        CHECK(verify_membership(g, w8));
        CHECK(oracle::pullback(g, w8) == w8);
        CHECK(verify_membership(g, canonical(7).form));
        CHECK(is_automorphism(build_algebra(AlgebraKind::O), so4_action(a, b)));
        Quaternion na{-a[0], -a[1], -a[2], -a[3]}, nb{-b[0], -b[1], -b[2], -b[3]};
        CHECK(embed_so4(na, nb) == g);
        CHECK(verify_membership(embed_so4(a, b, Frame::SplitFromHsplit), canonical(5).form));
        // Orthogonal for the definite form.
        CHECK(g.matrix().transpose() * g.matrix() == Matrix::identity(7));
    }
    CHECK(embed_so4({1, 0, 0, 0}, {1, 0, 0, 0}) == LinearMap::identity());
    CHECK_THROWS_AS(embed_so4({1, 1, 0, 0}, {1, 0, 0, 0}), Error);
    CHECK_THROWS_AS(embed_so4({1, 0, 0, 0}, {0, 0, 0, 0}), Error);
}

TEST_CASE("property: embed_so4 is a homomorphism")
{
    ParamSampler s(8);
    for (auto f : {Frame::Octonion, Frame::SplitProduct, Frame::SplitFromHsplit})
        for (int n = 0; n < 6; ++n) {
            Quaternion a = s.unit_quaternion(), b = s.unit_quaternion(), c = s.unit_quaternion(),
                       d = s.unit_quaternion();
            CHECK(embed_so4(a, b, f) * embed_so4(c, d, f) == embed_so4(qmul(a, c), qmul(b, d), f));
        }
}

TEST_CASE("embed_sl2pair")
{
    ParamSampler s(5);
    for (int n = 0; n < 10; ++n) {
        int sign = n % 2 ? -1 : 1;
        Mat2 a = s.sl2_pm(sign), b = s.sl2_pm(sign);
        CHECK(a[0] * a[3] - a[1] * a[2] == sign);
        LinearMap g = embed_sl2pair(a, b);
        CHECK(verify_membership(g, canonical(2, Variant::Prime).form));
        CHECK(verify_membership(g, canonical(5, Variant::Prime).form));
        Mat2 c = s.sl2_pm(1), d = s.sl2_pm(1);
        CHECK(g * embed_sl2pair(c, d) == embed_sl2pair(m2mul(a, c), m2mul(b, d)));
    }
    CHECK_THROWS_AS(embed_sl2pair({2, 0, 0, 1}, {1, 0, 0, 1}), Error);
    CHECK_THROWS_AS(embed_sl2pair({1, 0, 0, -1}, {1, 0, 0, 1}), Error);
}

TEST_CASE("torus element matches the sl2 pair embedding")
{
    for (int p = -3; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            Mat2 ra = rotation2(Scalar(p) / q), rb = rotation2(Scalar(q) / 2);
            LinearMap t = torus_element(ra, rb);
            CHECK(verify_membership(t, canonical(2, Variant::Prime).form));
            Mat2 rbt{rb[0], rb[2], rb[1], rb[3]};
            CHECK(t == embed_sl2pair(ra, rbt));
        }
    CHECK_THROWS_AS(torus_element({2, 0, 0, 1}, rotation2(0)), Error);
}

TEST_CASE("so3 and gl2 pairs")
{
    ParamSampler s(9);
    for (int n = 0; n < 10; ++n) {
        CHECK(verify_membership(embed_so3_33(s.so3()), canonical(4).form));
        Mat2 a = s.gl2(), b = s.gl2();
        LinearMap g = embed_gl2pair(a, b);
        CHECK(verify_membership(g, canonical(1).form));
        CHECK(oracle::pullback(g, canonical(1).form) == canonical(1).form);
    }
    CHECK_THROWS_AS(embed_so3_33({2, 0, 0, 0, 1, 0, 0, 0, 1}), Error);
    CHECK_THROWS_AS(embed_so3_33({-1, 0, 0, 0, 1, 0, 0, 0, 1}), Error);
    CHECK_THROWS_AS(embed_gl2pair({1, 1, 1, 1}, {1, 0, 0, 1}), Error);
}

TEST_CASE("rational samplers land on the groups")
{
    ParamSampler s(1);
    for (int n = 0; n < 10; ++n) {
        Quaternion q = s.unit_quaternion();
        CHECK(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3] == 1);
        Mat2 r = rotation2(s.small_rational());
        CHECK(r[0] * r[0] + r[2] * r[2] == 1);
        CHECK(r[0] * r[3] - r[1] * r[2] == 1);
    }
    ParamSampler a(77), b(77);
    CHECK(a.unit_quaternion() == b.unit_quaternion());
}

TEST_CASE("tangent maps lie in the stabilizer algebras")
{
    Quaternion va{0, 1, 2, -1}, vb{0, Scalar(1, 2), 0, 3};
    CHECK(in_stabilizer_algebra(so4_tangent(va, vb), canonical(8).form));
    CHECK(oracle::derivation_action(so4_tangent(va, vb).matrix(), canonical(8).form).is_zero());
    CHECK(in_stabilizer_algebra(so4_tangent(va, vb, Frame::SplitFromHsplit), canonical(5).form));
    Mat2 x{1, 2, -3, -1}, y{0, 1, 1, 0};
    CHECK(in_stabilizer_algebra(sl2pair_tangent(x, y), canonical(2, Variant::Prime).form));
    Mat3 K{0, -1, 2, 1, 0, -3, -2, 3, 0};
    CHECK(in_stabilizer_algebra(so3_33_tangent(K), canonical(4).form));
    CHECK(in_stabilizer_algebra(gl2pair_tangent({1, 2, 3, 4}, {0, 1, 5, 2}), canonical(1).form));
    CHECK_THROWS_AS(so4_tangent({1, 0, 0, 0}, vb), Error);
    CHECK_THROWS_AS(sl2pair_tangent({1, 0, 0, 0}, y), Error);
}

TEST_CASE("difference quotients converge to the tangent maps")
{
    Quaternion va{0, 1, 2, -1}, vb{0, Scalar(1, 2), 0, 3};
    check_converges(quotient_errors(
        [&](const Scalar& t) {
            return embed_so4(cayley_quaternion(t * va[1], t * va[2], t * va[3]),
                             cayley_quaternion(t * vb[1], t * vb[2], t * vb[3]));
        },
        so4_tangent(va, vb)));
    Mat3 K{0, -1, 2, 1, 0, -3, -2, 3, 0};
    check_converges(quotient_errors([&](const Scalar& t) { return embed_so3_33(cayley_so3(3 * t, 2 * t, t)); },
                                    so3_33_tangent(K)));
    Mat2 x{1, 2, -3, 4}, y{0, 1, 5, 2};
    check_converges(quotient_errors(
        [&](const Scalar& t) {
            return embed_gl2pair({1 + t * x[0], t * x[1], t * x[2], 1 + t * x[3]},
                                 {1 + t * y[0], t * y[1], t * y[2], 1 + t * y[3]});
        },
        gl2pair_tangent(x, y)));
}

TEST_CASE("reports")
{
    for (auto& c : identity_checks()) {
        INFO(c.anchor);
        CHECK(c.pass);
    }
    for (auto& c : compact_checks()) {
        INFO(c.anchor << " " << c.detail);
        CHECK(c.pass);
    }
    auto e = embedding_checks(5, 11);
    for (auto& c : e) {
        INFO(c.anchor << " " << c.detail);
        CHECK(c.pass);
    }
    Json j = to_json(e);
    REQUIRE(j.is_array());
    CHECK(j[0]["status"] == "pass");
    CHECK(j[0].contains("anchor"));
    CHECK(to_text(e).find("checks passed") != std::string::npos);
}
