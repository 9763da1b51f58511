#pragma once

#include "msf7/algebras.hpp"
#include "msf7/exterior.hpp"
#include "msf7/forms7.hpp"
#include "msf7/json_io.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

namespace msf7 {

using Quaternion = std::array<Scalar, 4>;  // 1, i, j, k
using Mat2 = std::array<Scalar, 4>;        // row major [[a,b],[c,d]]
using Mat3 = std::array<Scalar, 9>;

bool verify_membership(const LinearMap& g, const KForm& w);

// Identifications of an 8-dimensional algebra's imaginary part with R^7.
enum class Frame {
    Octonion,         // O, basis i, j, k, e, ie, je, ke
    SplitProduct,     // Osplit, same listing
    SplitFromHsplit,  // Osplit_from_Hsplit, basis i, e, ie, j, k, je, ke
};

struct FrameData {
    AlgebraTable algebra;
    std::vector<AlgebraElement> basis;  // images of e_1..e_7
};
const FrameData& frame(Frame f);

// Restriction of an algebra endomorphism (dim x dim, fixing 1) to the frame's coordinates.
LinearMap restrict_to_frame(Frame f, const Matrix& g);

// (p,q) -> (a p a^-1, b q a^-1) on H + H; a, b of norm 1.
LinearMap embed_so4(const Quaternion& a, const Quaternion& b, Frame f = Frame::Octonion);
Matrix so4_action(const Quaternion& a, const Quaternion& b);  // 8 x 8 on pair coordinates

// (p,q) -> (a p a^-1, a q b^-1) on Hsplit + Hsplit, coordinates i, j, k, e, ie, je, ke.
LinearMap embed_sl2pair(const Mat2& a, const Mat2& b);
Matrix sl2pair_action(const Mat2& a, const Mat2& b);  // 8 x 8

// e_1 fixed, A on (e2,e3,e4) and on (e5,e6,e7).
LinearMap embed_so3_33(const Mat3& A);
// det(a)^-1 e1, det(b)^-1 e2, a on (e3,e4), b on (e5,e6), det(ab) e7.
LinearMap embed_gl2pair(const Mat2& a, const Mat2& b);

// Torus block matrix diag(1, R(-2al), R(al+be), R(al-be)) with
// the (e4,e5) and (e6,e7) blocks read clockwise; ra, rb are rotations.
LinearMap torus_element(const Mat2& ra, const Mat2& rb);

// Rational points on the groups.
Quaternion cayley_quaternion(const Scalar& x, const Scalar& y, const Scalar& z);  // (1+v)/(1-v)
Mat2 rotation2(const Scalar& t);                                                    // cos, sin from t
Mat3 cayley_so3(const Scalar& x, const Scalar& y, const Scalar& z);                 // (I-K)^-1 (I+K)

struct ParamSampler {
    std::mt19937_64 rng;
    explicit ParamSampler(std::uint64_t seed) : rng(seed) {}
    Scalar small_rational();
    Quaternion unit_quaternion();
    Mat2 sl2_pm(int det_sign);  // integer matrix with det = det_sign
    Mat2 gl2();
    Mat3 so3();
};

// Velocities at the identity of the Cayley-parametrized families.
LinearMap so4_tangent(const Quaternion& va, const Quaternion& vb, Frame f = Frame::Octonion);
LinearMap so3_33_tangent(const Mat3& K);
LinearMap gl2pair_tangent(const Mat2& x, const Mat2& y);
LinearMap sl2pair_tangent(const Mat2& x, const Mat2& y);

enum class ClaimKind { Stabilizes, CarriesTo };

struct NamedTransformation {
    std::string name;
    LinearMap map;
    int orbit_id = 0;
    Variant variant = Variant::Standard;
    ClaimKind claim = ClaimKind::Stabilizes;
    std::string note;
};

const std::vector<NamedTransformation>& catalog();
bool verify(const NamedTransformation& t);

struct CheckResult {
    std::string anchor;
    bool pass = false;
    std::string detail;
};

std::vector<CheckResult> identity_checks();
std::vector<CheckResult> catalog_checks();
std::vector<CheckResult> compact_checks();
std::vector<CheckResult> embedding_checks(int draws, std::uint64_t seed);
// Everything above.
std::vector<CheckResult> verify_all(int fuzz_iters);

Json to_json(const std::vector<CheckResult>& report);
std::string to_text(const std::vector<CheckResult>& report);

}  // namespace msf7
