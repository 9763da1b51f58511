#pragma once

#include "msf7/scalar.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace msf7 {

inline constexpr int kDim = 7;

// Strictly increasing tuple of indices in 1..7.
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(std::initializer_list<int> idx);
    explicit MultiIndex(const std::vector<int>& idx);

    int size() const { return size_; }
    int operator[](int i) const { return idx_[i]; }
    bool contains(int i) const;
    std::vector<int> to_vector() const;
    std::string str() const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b);
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

private:
    std::array<std::uint8_t, kDim> idx_{};
    std::uint8_t size_ = 0;
};

// All strictly increasing k-subsets of 1..7 in lexicographic order.
const std::vector<MultiIndex>& multi_indices(int k);

class KForm {
public:
    using Terms = std::map<MultiIndex, Scalar>;

    explicit KForm(int degree = 0);
    KForm(int degree, Terms terms);

    static KForm monomial(const MultiIndex& idx, const Scalar& coef = 1);
    // Compact digit notation for n = 7, e.g. "+127 -134 +2/3*256".
    static KForm parse(int degree, std::string_view digits);

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    Scalar coef(const MultiIndex& idx) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const MultiIndex& idx, const Scalar& c);

    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);
    KForm& operator*=(const Scalar& s);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator-(KForm a) { return a *= Scalar(-1); }
    friend KForm operator*(const Scalar& s, KForm a) { return a *= s; }
    friend bool operator==(const KForm& a, const KForm& b)
    {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int degree_;
    Terms terms_;
};

using Vector = std::array<Scalar, kDim>;

Vector basis_vector(int i);  // 1-based

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    bool is_zero() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

// Column convention: column j holds the image of e_{j+1}.
class LinearMap {
public:
    LinearMap();
    explicit LinearMap(const Matrix& m);

    static LinearMap identity();
    static LinearMap scaled_identity(const Scalar& s);
    static LinearMap from_columns(const std::array<Vector, kDim>& cols);
    // Signed permutation: e_j -> sign[j] * e_{target[j]}; 1-based targets.
    static LinearMap signed_permutation(const std::array<int, kDim>& target, const std::array<int, kDim>& sign);

    Scalar& operator()(int i, int j) { return m_(i, j); }
    const Scalar& operator()(int i, int j) const { return m_(i, j); }
    const Matrix& matrix() const { return m_; }
    Vector column(int j) const;

    Vector apply(const Vector& v) const;
    LinearMap transpose() const { return LinearMap(m_.transpose()); }

    friend LinearMap operator*(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ * b.m_); }
    friend LinearMap operator+(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ + b.m_); }
    friend LinearMap operator-(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ - b.m_); }
    friend LinearMap operator*(const Scalar& s, const LinearMap& a) { return LinearMap(s * a.m_); }
    friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.m_ == b.m_; }

private:
    Matrix m_;
};

class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(Matrix m);  // throws if not symmetric

    std::size_t size() const { return m_.rows(); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix& matrix() const { return m_; }
    friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) { return a.m_ == b.m_; }

private:
    Matrix m_;
};

struct Signature {
    int pos = 0, neg = 0, null = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

KForm wedge(const KForm& a, const KForm& b);
KForm interior(const Vector& v, const KForm& a);
KForm pullback(const LinearMap& g, const KForm& a);
// a(v_1, ..., v_k) by direct expansion.
Scalar evaluate(const KForm& a, const std::vector<Vector>& vs);

// Null-space basis as primitive integer vectors (Bareiss elimination).
std::vector<std::vector<Scalar>> kernel(const Matrix& m);
int rank(const Matrix& m);
// Some x with m x = b, or nullopt.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);
Scalar determinant(const Matrix& m);
Matrix inverse(const Matrix& m);  // throws on singular input
LinearMap inverse(const LinearMap& g);
Scalar determinant(const LinearMap& g);

Signature signature(const SymmetricMatrix& s);
Signature signature(const Matrix& s);  // throws on non-symmetric input

}  // namespace msf7
