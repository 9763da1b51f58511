#pragma once

#include "msf7/exterior.hpp"
#include "msf7/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msf7 {

enum class AlgebraKind { R, C, H, Hsplit, O, Osplit, OsplitFromHsplit };

AlgebraKind parse_algebra_kind(const std::string& name);
std::string to_string(AlgebraKind k);

struct AlgebraElement {
    std::vector<Scalar> coords;

    AlgebraElement() = default;
    explicit AlgebraElement(std::vector<Scalar> c) : coords(std::move(c)) {}
    std::size_t dim() const { return coords.size(); }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
    friend AlgebraElement operator*(const Scalar& s, AlgebraElement a);
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

// Structure constants with e_i e_j = sum_k c(i,j,k) e_k. The constructor
// derives the polarized norm from x conj(x) and validates the table.
class AlgebraTable {
public:
    AlgebraTable(std::string name, int dim, std::vector<Scalar> mult, Matrix conj, int unit_index = 0);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    const Scalar& c(int i, int j, int k) const { return mult_[(i * dim_ + j) * dim_ + k]; }
    const Matrix& conj() const { return conj_; }
    const SymmetricMatrix& norm_form() const { return norm_; }
    int unit_index() const { return unit_; }

    AlgebraElement basis(int i) const;
    AlgebraElement unit() const { return basis(unit_); }
    AlgebraElement element(std::vector<Scalar> coords) const;

private:
    std::string name_;
    int dim_;
    std::vector<Scalar> mult_;
    Matrix conj_;
    SymmetricMatrix norm_;
    int unit_;
};

AlgebraTable build_algebra(AlgebraKind kind);

// (a,b)(c,d) = (ac + gamma conj(d) b, d a + b conj(c)), conj(a,b) = (conj a, -b).
AlgebraTable double_cayley_dickson(const AlgebraTable& base, const Scalar& gamma, const std::string& name);
// (a,b)(c,d) = (ac + gamma d conj(b), c b + conj(a) d): the p + e q presentation.
AlgebraTable double_left_pair(const AlgebraTable& base, const Scalar& gamma, const std::string& name);

AlgebraElement multiply(const AlgebraTable& t, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement conjugate(const AlgebraTable& t, const AlgebraElement& x);
Scalar norm(const AlgebraTable& t, const AlgebraElement& x);
Scalar inner(const AlgebraTable& t, const AlgebraElement& x, const AlgebraElement& y);

// (a,b,c) -> <ab, c> in the dual of the given imaginary basis.
KForm triple_form(const AlgebraTable& t, const std::vector<AlgebraElement>& basis);

bool is_automorphism(const AlgebraTable& t, const Matrix& g);

// Signed permutation g with g(xy) = g(x)g(y) from `from` to `to`, by backtracking.
std::optional<Matrix> find_signed_permutation_isomorphism(const AlgebraTable& from, const AlgebraTable& to);

// Pair coordinates of an 8-dimensional doubled algebra: 0..3 first slot, 4..7 second.
AlgebraElement pair_element(const std::vector<Scalar>& p, const std::vector<Scalar>& q);

Json to_json(const AlgebraTable& t);

}  // namespace msf7
