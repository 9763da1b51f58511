#include "msf7/stabilizers.hpp"

#include "msf7/error.hpp"

#include <functional>
#include <limits>
#include <sstream>

namespace msf7 {

bool verify_membership(const LinearMap& g, const KForm& w) { return pullback(g, w) == w; }

namespace {

// ------------------------------------------------------------ quaternions

Quaternion qmul(const Quaternion& a, const Quaternion& b)
{
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quaternion qconj(const Quaternion& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Scalar qnorm(const Quaternion& a) { return a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]; }

Quaternion qsub(const Quaternion& a, const Quaternion& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }

Quaternion qscale(const Scalar& s, const Quaternion& a) { return {s * a[0], s * a[1], s * a[2], s * a[3]}; }

Quaternion qbasis(int i)
{
    Quaternion q{0, 0, 0, 0};
    q[i] = 1;
    return q;
}

// ------------------------------------------------------- 2x2 and 3x3 blocks

Mat2 m2mul(const Mat2& a, const Mat2& b)
{
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Scalar m2det(const Mat2& a) { return a[0] * a[3] - a[1] * a[2]; }

Mat2 m2inv(const Mat2& a)
{
    Scalar d = m2det(a);
    if (is_zero(d)) throw Error("singular 2x2 matrix");
    return {a[3] / d, -a[1] / d, -a[2] / d, a[0] / d};
}

Mat2 m2sub(const Mat2& a, const Mat2& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }

Mat2 m2transpose(const Mat2& a) { return {a[0], a[2], a[1], a[3]}; }

Scalar m2trace(const Mat2& a) { return a[0] + a[3]; }

bool is_rotation(const Mat2& r) { return m2mul(m2transpose(r), r) == Mat2{1, 0, 0, 1} && m2det(r) == 1; }

// Hsplit basis matrices i = [[0,1],[-1,0]], j = [[0,1],[1,0]], k = [[1,0],[0,-1]].
Mat2 hs_to_mat(const Quaternion& x) { return {x[0] + x[3], x[1] + x[2], x[2] - x[1], x[0] - x[3]}; }

Quaternion hs_from_mat(const Mat2& m) { return {(m[0] + m[3]) / 2, (m[1] - m[2]) / 2, (m[1] + m[2]) / 2, (m[0] - m[3]) / 2}; }

Matrix mat3(const Mat3& a)
{
    Matrix m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = a[i * 3 + j];
    return m;
}

// Builds the 8x8 matrix of (p,q) -> (P(p), Q(q)) on pair coordinates.
Matrix pair_action(const std::function<Quaternion(const Quaternion&)>& P,
                   const std::function<Quaternion(const Quaternion&)>& Q)
{
    Matrix m(8, 8);
    for (int j = 0; j < 4; ++j) {
        Quaternion p = P(qbasis(j)), q = Q(qbasis(j));
        for (int i = 0; i < 4; ++i) {
            m(i, j) = p[i];
            m(4 + i, 4 + j) = q[i];
        }
    }
    return m;
}

LinearMap restrict_indices(const Matrix& g)
{
    LinearMap out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) out(i, j) = g(i + 1, j + 1);
    return out;
}

const Matrix& split_identification()
{
    static const Matrix iso = [] {
        auto m = find_signed_permutation_isomorphism(build_algebra(AlgebraKind::OsplitFromHsplit),
                                                     build_algebra(AlgebraKind::Osplit));
        if (!m) throw Error("no signed-permutation isomorphism between the split presentations");
        return *m;
    }();
    return iso;
}

Matrix transport_to_frame(Frame f, const Matrix& g8)
{
    if (f != Frame::SplitFromHsplit) return g8;
    const Matrix& phi = split_identification();
    return inverse(phi) * g8 * phi;
}

AlgebraElement pair(int idx, int sign = 1)
{
    std::vector<Scalar> c(8);
    c[idx] = sign;
    return AlgebraElement(c);
}

}  // namespace

const FrameData& frame(Frame f)
{
    static const FrameData oct{build_algebra(AlgebraKind::O),
                               {pair(1), pair(2), pair(3), pair(4), pair(5), pair(6), pair(7)}};
    static const FrameData split{build_algebra(AlgebraKind::Osplit),
                                 {pair(1), pair(2), pair(3), pair(4), pair(5), pair(6), pair(7)}};
    static const FrameData from_hs{build_algebra(AlgebraKind::OsplitFromHsplit),
                                   {pair(1), pair(4), pair(5), pair(2), pair(3), pair(6), pair(7)}};
    switch (f) {
    case Frame::Octonion: return oct;
    case Frame::SplitProduct: return split;
    case Frame::SplitFromHsplit: return from_hs;
    }
    throw Error("unknown frame");
}

LinearMap restrict_to_frame(Frame f, const Matrix& g)
{
    const FrameData& fd = frame(f);
    Matrix B(8, 8);
    for (int i = 0; i < 8; ++i) B(i, 0) = fd.algebra.unit().coords[i];
    for (int j = 0; j < kDim; ++j)
        for (int i = 0; i < 8; ++i) B(i, j + 1) = fd.basis[j].coords[i];
    Matrix h = inverse(B) * g * B;
    for (int j = 1; j < 8; ++j)
        if (!is_zero(h(0, j)) || !is_zero(h(j, 0))) throw Error("map does not preserve the imaginary part");
    return restrict_indices(h);
}

Matrix so4_action(const Quaternion& a, const Quaternion& b)
{
    if (qnorm(a) != 1 || qnorm(b) != 1) throw Error("embed_so4 needs unit quaternions");
    Quaternion ai = qconj(a);
    return pair_action([&](const Quaternion& p) { return qmul(qmul(a, p), ai); },
                       [&](const Quaternion& q) { return qmul(qmul(b, q), ai); });
}

LinearMap embed_so4(const Quaternion& a, const Quaternion& b, Frame f)
{
    return restrict_to_frame(f, transport_to_frame(f, so4_action(a, b)));
}

Matrix sl2pair_action(const Mat2& a, const Mat2& b)
{
    Scalar da = m2det(a), db = m2det(b);
    if ((da != 1 && da != -1) || (db != 1 && db != -1)) throw Error("embed_sl2pair needs det(a), det(b) = +-1");
    if (da * db != 1) throw Error("embed_sl2pair needs det(ab) = 1");
    Mat2 ai = m2inv(a), bi = m2inv(b);
    return pair_action([&](const Quaternion& p) { return hs_from_mat(m2mul(m2mul(a, hs_to_mat(p)), ai)); },
                       [&](const Quaternion& q) { return hs_from_mat(m2mul(m2mul(a, hs_to_mat(q)), bi)); });
}

LinearMap embed_sl2pair(const Mat2& a, const Mat2& b) { return restrict_indices(sl2pair_action(a, b)); }

LinearMap embed_so3_33(const Mat3& A)
{
    Matrix m = mat3(A);
    if (!(m.transpose() * m == Matrix::identity(3)) || determinant(m) != 1)
        throw Error("embed_so3_33 needs an orthogonal matrix with det 1");
    LinearMap g;
    g(0, 0) = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            g(1 + i, 1 + j) = m(i, j);
            g(4 + i, 4 + j) = m(i, j);
        }
    return g;
}

LinearMap embed_gl2pair(const Mat2& a, const Mat2& b)
{
    Scalar da = m2det(a), db = m2det(b);
    if (is_zero(da) || is_zero(db)) throw Error("embed_gl2pair needs invertible matrices");
    LinearMap g;
    g(0, 0) = 1 / da;
    g(1, 1) = 1 / db;
    g(2, 2) = a[0], g(2, 3) = a[1], g(3, 2) = a[2], g(3, 3) = a[3];
    g(4, 4) = b[0], g(4, 5) = b[1], g(5, 4) = b[2], g(5, 5) = b[3];
    g(6, 6) = da * db;
    return g;
}

LinearMap torus_element(const Mat2& ra, const Mat2& rb)
{
    if (!is_rotation(ra) || !is_rotation(rb)) throw Error("torus parameters must be rotations");
    Mat2 m2a = m2transpose(m2mul(ra, ra));
    Mat2 sum = m2transpose(m2mul(ra, rb));
    Mat2 diff = m2mul(rb, m2transpose(ra));
    LinearMap g;
    g(0, 0) = 1;
    auto put = [&](int o, const Mat2& m) {
        g(o, o) = m[0], g(o, o + 1) = m[1], g(o + 1, o) = m[2], g(o + 1, o + 1) = m[3];
    };
    put(1, m2a);
    put(3, sum);
    put(5, diff);
    return g;
}

Quaternion cayley_quaternion(const Scalar& x, const Scalar& y, const Scalar& z)
{
    Scalar n = x * x + y * y + z * z;
    Scalar d = 1 + n;
    return {(1 - n) / d, 2 * x / d, 2 * y / d, 2 * z / d};
}

Mat2 rotation2(const Scalar& t)
{
    Scalar d = 1 + t * t;
    Scalar c = (1 - t * t) / d, s = 2 * t / d;
    return {c, -s, s, c};
}

Mat3 cayley_so3(const Scalar& x, const Scalar& y, const Scalar& z)
{
    Matrix K{{0, -z, y}, {z, 0, -x}, {-y, x, 0}};
    Matrix I = Matrix::identity(3);
    Matrix R = inverse(I - K) * (I + K);
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i * 3 + j] = R(i, j);
    return out;
}

namespace {

long uniform_int(std::mt19937_64& rng, long lo, long hi)
{
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return lo + static_cast<long>(x % span);
}

}  // namespace

Scalar ParamSampler::small_rational()
{
    return Scalar(uniform_int(rng, -6, 6)) / Scalar(uniform_int(rng, 1, 5));
}

Quaternion ParamSampler::unit_quaternion()
{
    Quaternion q = cayley_quaternion(small_rational(), small_rational(), small_rational());
    if (uniform_int(rng, 0, 1)) q = qscale(-1, q);
    return q;
}

Mat2 ParamSampler::sl2_pm(int det_sign)
{
    Mat2 m{1, 0, 0, 1};
    for (int k = 0; k < 3; ++k) {
        Scalar n = uniform_int(rng, -3, 3);
        m = m2mul(m, k % 2 ? Mat2{1, 0, n, 1} : Mat2{1, n, 0, 1});
    }
    if (det_sign < 0) m = m2mul(m, Mat2{1, 0, 0, -1});
    return m;
}

Mat2 ParamSampler::gl2()
{
    for (;;) {
        Mat2 m{small_rational(), small_rational(), small_rational(), small_rational()};
        if (!is_zero(m2det(m))) return m;
    }
}

Mat3 ParamSampler::so3() { return cayley_so3(small_rational(), small_rational(), small_rational()); }

// -------------------------------------------------------------- tangents

LinearMap so4_tangent(const Quaternion& va, const Quaternion& vb, Frame f)
{
    if (!is_zero(va[0]) || !is_zero(vb[0])) throw Error("tangent directions must be imaginary quaternions");
    Matrix d = pair_action([&](const Quaternion& p) { return qscale(2, qsub(qmul(va, p), qmul(p, va))); },
                           [&](const Quaternion& q) { return qscale(2, qsub(qmul(vb, q), qmul(q, va))); });
    return restrict_to_frame(f, transport_to_frame(f, d));
}

LinearMap so3_33_tangent(const Mat3& K)
{
    Matrix k = mat3(K);
    if (!(k.transpose() == Scalar(-1) * k)) throw Error("so(3) direction must be antisymmetric");
    LinearMap g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            g(1 + i, 1 + j) = 2 * k(i, j);
            g(4 + i, 4 + j) = 2 * k(i, j);
        }
    return g;
}

LinearMap gl2pair_tangent(const Mat2& x, const Mat2& y)
{
    LinearMap g;
    g(0, 0) = -m2trace(x);
    g(1, 1) = -m2trace(y);
    g(2, 2) = x[0], g(2, 3) = x[1], g(3, 2) = x[2], g(3, 3) = x[3];
    g(4, 4) = y[0], g(4, 5) = y[1], g(5, 4) = y[2], g(5, 5) = y[3];
    g(6, 6) = m2trace(x) + m2trace(y);
    return g;
}

LinearMap sl2pair_tangent(const Mat2& x, const Mat2& y)
{
    if (!is_zero(m2trace(x)) || !is_zero(m2trace(y))) throw Error("sl(2) directions must be traceless");
    auto two = [](const Mat2& m) { return Mat2{2 * m[0], 2 * m[1], 2 * m[2], 2 * m[3]}; };
    Matrix d = pair_action(
        [&](const Quaternion& p) {
            Mat2 P = hs_to_mat(p);
            return hs_from_mat(two(m2sub(m2mul(x, P), m2mul(P, x))));
        },
        [&](const Quaternion& q) {
            Mat2 Q = hs_to_mat(q);
            return hs_from_mat(two(m2sub(m2mul(x, Q), m2mul(Q, y))));
        });
    return restrict_indices(d);
}

// --------------------------------------------------------------- catalog

namespace {

LinearMap sp(std::array<int, kDim> target, std::array<int, kDim> sign)
{
    return LinearMap::signed_permutation(target, sign);
}

KForm target_form(const NamedTransformation& t) { return canonical(t.orbit_id, t.variant).form; }

}  // namespace

const std::vector<NamedTransformation>& catalog()
{
    static const std::vector<NamedTransformation> cat = [] {
        std::vector<NamedTransformation> c;
        c.push_back({"k1-swap-component", sp({2, 1, 5, 6, 3, 4, 7}, {1, 1, 1, 1, 1, 1, -1}), 1, Variant::Standard,
                     ClaimKind::Stabilizes, ""});
        c.push_back({"k2-torus-component", sp({1, 2, 3, 5, 4, 7, 6}, {-1, 1, -1, -1, -1, 1, 1}), 2,
                     Variant::Prime, ClaimKind::Stabilizes, "f-basis coordinates"});
        c.push_back({"k2-second-component", sp({1, 2, 3, 7, 6, 5, 4}, {1, 1, -1, 1, 1, 1, 1}), 2, Variant::Prime,
                     ClaimKind::Stabilizes, "f-basis coordinates"});
        c.push_back({"k3-components", sp({1, 2, 3, 4, 5, 6, 7}, {-1, 1, -1, 1, -1, 1, -1}), 3,
                     Variant::Standard, ClaimKind::Stabilizes, ""});
        c.push_back({"k4-components", sp({1, 2, 3, 4, 5, 6, 7}, {-1, 1, 1, 1, -1, -1, -1}), 4,
                     Variant::Standard, ClaimKind::Stabilizes, ""});
        c.push_back({"k6-second-component", sp({2, 1, 3, 4, 6, 5, 7}, {1, 1, -1, 1, 1, 1, -1}), 6,
                     Variant::Standard, ClaimKind::Stabilizes,
                     "e6->e5 is the only signed image of e6 that stabilizes"});
        c.push_back({"f-basis-omega2", *canonical(2, Variant::Prime).change, 2, Variant::Standard,
                     ClaimKind::CarriesTo, "rescaled f-basis; pulls omega2 back to omega2'"});
        c.push_back({"bv-map-omega6", *canonical(6, Variant::Prime).change, 6, Variant::Standard, ClaimKind::CarriesTo,
                     "g^-1 for e3->-e7, e5->-e5, e6->-e6, e7->e3"});
        c.push_back({"bv-map-omega7", *canonical(7, Variant::Prime).change, 7, Variant::Standard, ClaimKind::CarriesTo,
                     "g^-1 for e1->-e4, e2->-e7, e3->e5, e4->-e6, e5->e3, e6->-e1, e7->e2"});
        return c;
    }();
    return cat;
}

bool verify(const NamedTransformation& t)
{
    const KForm w = target_form(t);
    if (t.claim == ClaimKind::Stabilizes) return verify_membership(t.map, w);
    KForm img = pullback(t.map, w);
    Classification c = classify(img);
    if (c.kind != Classification::Kind::Orbit || c.orbit_id != t.orbit_id) return false;
    return img == canonical(t.orbit_id, Variant::Prime).form && pullback(inverse(t.map), img) == w;
}

// ---------------------------------------------------------------- reports

namespace {

CheckResult check(std::string anchor, bool ok, std::string detail = "")
{
    return {std::move(anchor), ok, std::move(detail)};
}

bool classifies_as(const KForm& w, int orbit)
{
    auto c = classify(w);
    return c.kind == Classification::Kind::Orbit && c.orbit_id == orbit;
}

std::vector<AlgebraElement> hsplit_products_basis()
{
    auto t = build_algebra(AlgebraKind::OsplitFromHsplit);
    auto e = pair(4);
    std::vector<AlgebraElement> b{pair(1), pair(2), pair(3), e};
    for (int i = 1; i <= 3; ++i) b.push_back(multiply(t, e, pair(i)));
    return b;
}

}  // namespace

std::vector<CheckResult> identity_checks()
{
    std::vector<CheckResult> r;
    KForm w8 = canonical(8).form, w7 = canonical(7).form, w5 = canonical(5).form, w6 = canonical(6).form;
    KForm a123 = KForm::monomial(MultiIndex{1, 2, 3});
    r.push_back(check("omega8-minus-omega7", w8 == w7 + a123));

    KForm w5p = canonical(2, Variant::Prime).form + a123;
    r.push_back(check("omega2-prime-plus-beta123-is-orbit-5", classifies_as(w5p, 5)));
    KForm from_alg = triple_form(build_algebra(AlgebraKind::OsplitFromHsplit), hsplit_products_basis());
    r.push_back(check("omega5-prime-from-split-quaternion-pairs", from_alg == -w5p,
                      "basis i, j, k, e, e i, e j, e k gives -(omega2' + beta123)"));

    KForm tilde5 = w6 - wedge(KForm::monomial(MultiIndex{3}), KForm::parse(2, "+47 -56"));
    r.push_back(check("omega6-deformation-orbit-5", classifies_as(tilde5, 5)));
    r.push_back(check("omega6-deformation-from-algebra",
                      tilde5 == triple_form(frame(Frame::SplitProduct).algebra, frame(Frame::SplitProduct).basis)));

    auto w6p = canonical(6, Variant::Prime), w7p = canonical(7, Variant::Prime);
    r.push_back(check("bv-relation-omega6",
                      classifies_as(w6p.form, 6) && pullback(inverse(*w6p.change), w6p.form) == w6));
    r.push_back(check("bv-relation-omega7",
                      classifies_as(w7p.form, 7) && pullback(inverse(*w7p.change), w7p.form) == w7));

    r.push_back(check("omega8-from-octonions",
                      triple_form(frame(Frame::Octonion).algebra, frame(Frame::Octonion).basis) == w8,
                      "basis i, j, k, e, ie, je, ke"));
    KForm alt = triple_form(frame(Frame::Octonion).algebra, frame(Frame::SplitFromHsplit).basis);
    r.push_back(check("octonion-alternate-order", alt != w8 && classifies_as(alt, 8),
                      "basis i, e, ie, j, k, je, ke gives a different orbit-8 form"));
    r.push_back(check("omega5-from-split-octonions",
                      triple_form(frame(Frame::SplitFromHsplit).algebra, frame(Frame::SplitFromHsplit).basis) == w5));

    auto H = build_algebra(AlgebraKind::H);
    bool iso1 = find_signed_permutation_isomorphism(double_left_pair(H, 1, "alt"), build_algebra(AlgebraKind::Osplit))
                    .has_value();
    bool iso2 = find_signed_permutation_isomorphism(build_algebra(AlgebraKind::OsplitFromHsplit),
                                                    build_algebra(AlgebraKind::Osplit))
                    .has_value();
    r.push_back(check("split-presentations-isomorphic", iso1 && iso2));
    return r;
}

std::vector<CheckResult> catalog_checks()
{
    std::vector<CheckResult> r;
    for (auto& t : catalog()) r.push_back(check(t.name, verify(t), t.note));
    return r;
}

std::vector<CheckResult> compact_checks()
{
    const int expected[8] = {2, 2, 9, 3, 6, 4, 6, 14};
    std::vector<CheckResult> r;
    for (int i = 1; i <= 8; ++i) {
        int d = compact_dim(preferred_form(i));
        r.push_back(check("compact-dim-K" + std::to_string(i), d == expected[i - 1],
                          "dim " + std::to_string(d) + ", expected " + std::to_string(expected[i - 1])));
    }
    r.push_back(check("stab-dim-omega8", stab_dim(canonical(8).form) == 14));
    r.push_back(check("stab-dim-omega5", stab_dim(canonical(5).form) == 14));
    return r;
}

std::vector<CheckResult> embedding_checks(int draws, std::uint64_t seed)
{
    ParamSampler s(seed);
    const KForm w1 = canonical(1).form;
    const KForm w2p = canonical(2, Variant::Prime).form;
    const KForm w4 = canonical(4).form;
    const KForm w5 = canonical(5).form;
    const KForm w5p = canonical(5, Variant::Prime).form;
    const KForm w6 = canonical(6).form;
    const KForm w7 = canonical(7).form;
    const KForm w8 = canonical(8).form;
    const KForm tilde5 = triple_form(frame(Frame::SplitProduct).algebra, frame(Frame::SplitProduct).basis);
    const auto& O = frame(Frame::Octonion).algebra;
    const auto& Os = frame(Frame::SplitProduct).algebra;

    int so4 = 0, so4s = 0, u1 = 0, sl2 = 0, so3 = 0, gl2 = 0, torus = 0, hom = 0;
    for (int n = 0; n < draws; ++n) {
        Quaternion a = s.unit_quaternion(), b = s.unit_quaternion(), a2 = s.unit_quaternion(),
                   b2 = s.unit_quaternion();
        LinearMap g = embed_so4(a, b);
        so4 += verify_membership(g, w8) && verify_membership(g, w7) && is_automorphism(O, so4_action(a, b));
        so4s += verify_membership(embed_so4(a, b, Frame::SplitFromHsplit), w5) &&
                verify_membership(embed_so4(a, b, Frame::SplitProduct), tilde5) &&
                is_automorphism(Os, so4_action(a, b));
        Quaternion ak = cayley_quaternion(0, 0, s.small_rational());
        u1 += verify_membership(embed_so4(ak, b), w6);
        hom += embed_so4(a, b) * embed_so4(a2, b2) == embed_so4(qmul(a, a2), qmul(b, b2));

        int sign = n % 2 ? -1 : 1;
        Mat2 x = s.sl2_pm(sign), y = s.sl2_pm(sign);
        LinearMap h = embed_sl2pair(x, y);
        sl2 += verify_membership(h, w2p) && verify_membership(h, w5p);
        Mat2 x2 = s.sl2_pm(1), y2 = s.sl2_pm(1);
        hom += embed_sl2pair(x, y) * embed_sl2pair(x2, y2) == embed_sl2pair(m2mul(x, x2), m2mul(y, y2));

        so3 += verify_membership(embed_so3_33(s.so3()), w4);
        gl2 += verify_membership(embed_gl2pair(s.gl2(), s.gl2()), w1);

        Mat2 ra = rotation2(s.small_rational()), rb = rotation2(s.small_rational());
        LinearMap t = torus_element(ra, rb);
        torus += verify_membership(t, w2p) && t == embed_sl2pair(ra, m2transpose(rb));
    }
    auto frac = [&](int k) { return std::to_string(k) + "/" + std::to_string(draws); };
    std::vector<CheckResult> r;
    r.push_back(check("so4-in-g2", so4 == draws, frac(so4) + " fix omega8, omega7 and are automorphisms"));
    r.push_back(check("so4-in-split-g2", so4s == draws, frac(so4s) + " fix omega5 and the split product form"));
    r.push_back(check("so4-u1-component-omega6", u1 == draws, frac(u1)));
    r.push_back(check("sl2-pair-in-split-g2", sl2 == draws, frac(sl2) + " fix omega2' and omega5'"));
    r.push_back(check("so3-diagonal-in-o4", so3 == draws, frac(so3)));
    r.push_back(check("gl2-pair-in-o1", gl2 == draws, frac(gl2)));
    r.push_back(check("torus-matrix-realization", torus == draws,
                      frac(torus) + "; (e4,e5), (e6,e7) blocks rotate clockwise"));
    r.push_back(check("embedding-homomorphisms", hom == 2 * draws, std::to_string(hom) + "/" + std::to_string(2 * draws)));

    // Infinitesimal versions land in the stabilizer algebras.
    int tan = 0, tan_total = 0;
    for (int n = 0; n < std::max(1, draws / 10); ++n) {
        Quaternion va{0, s.small_rational(), s.small_rational(), s.small_rational()};
        Quaternion vb{0, s.small_rational(), s.small_rational(), s.small_rational()};
        Mat2 x{s.small_rational(), s.small_rational(), s.small_rational(), 0};
        x[3] = -x[0];
        Mat2 y{s.small_rational(), s.small_rational(), s.small_rational(), 0};
        y[3] = -y[0];
        Scalar kx = s.small_rational(), ky = s.small_rational(), kz = s.small_rational();
        Mat3 K{0, -kz, ky, kz, 0, -kx, -ky, kx, 0};
        bool ok = in_stabilizer_algebra(so4_tangent(va, vb), w8) &&
                  in_stabilizer_algebra(so4_tangent(va, vb, Frame::SplitFromHsplit), w5) &&
                  in_stabilizer_algebra(sl2pair_tangent(x, y), w2p) && in_stabilizer_algebra(so3_33_tangent(K), w4) &&
                  in_stabilizer_algebra(gl2pair_tangent(s.gl2(), s.gl2()), w1);
        tan += ok;
        ++tan_total;
    }
    r.push_back(check("embedding-tangents-in-stabilizer-algebras", tan == tan_total,
                      std::to_string(tan) + "/" + std::to_string(tan_total)));
    return r;
}

std::vector<CheckResult> verify_all(int fuzz_iters)
{
    std::vector<CheckResult> r = catalog_checks();
    for (auto& v : identity_checks()) r.push_back(v);
    for (auto& v : compact_checks()) r.push_back(v);
    for (auto& v : embedding_checks(fuzz_iters, 20240601)) r.push_back(v);
    try {
        orbit_table();
        r.push_back(check("invariant-table-separates-orbits", true));
    } catch (const Error& e) {
        r.push_back(check("invariant-table-separates-orbits", false, e.what()));
    }
    return r;
}

Json to_json(const std::vector<CheckResult>& report)
{
    Json out = Json::array();
    for (auto& c : report) {
        Json j{{"anchor", c.anchor}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        out.push_back(j);
    }
    return out;
}

std::string to_text(const std::vector<CheckResult>& report)
{
    std::ostringstream os;
    int passed = 0;
    for (auto& c : report) {
        os << (c.pass ? "pass  " : "FAIL  ") << c.anchor;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << '\n';
        passed += c.pass;
    }
    os << passed << "/" << report.size() << " checks passed\n";
    return os.str();
}

}  // namespace msf7
