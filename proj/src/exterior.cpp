#include "msf7/exterior.hpp"

#include "msf7/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace msf7 {

// ---------------------------------------------------------------- MultiIndex

MultiIndex::MultiIndex(std::initializer_list<int> idx) : MultiIndex(std::vector<int>(idx)) {}

MultiIndex::MultiIndex(const std::vector<int>& idx)
{
    if (idx.size() > static_cast<std::size_t>(kDim)) throw Error("multi-index longer than 7");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 1 || idx[i] > kDim) throw Error("multi-index entry out of range 1..7");
        if (i > 0 && idx[i] <= idx[i - 1]) throw Error("multi-index must be strictly increasing");
        idx_[i] = static_cast<std::uint8_t>(idx[i]);
    }
    size_ = static_cast<std::uint8_t>(idx.size());
}

bool MultiIndex::contains(int i) const
{
    for (int p = 0; p < size_; ++p)
        if (idx_[p] == i) return true;
    return false;
}

std::vector<int> MultiIndex::to_vector() const { return {idx_.begin(), idx_.begin() + size_}; }

std::string MultiIndex::str() const
{
    std::string s;
    for (int p = 0; p < size_; ++p) s += static_cast<char>('0' + idx_[p]);
    return s;
}

bool operator==(const MultiIndex& a, const MultiIndex& b)
{
    return a.size_ == b.size_ && std::equal(a.idx_.begin(), a.idx_.begin() + a.size_, b.idx_.begin());
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b)
{
    return std::lexicographical_compare_three_way(a.idx_.begin(), a.idx_.begin() + a.size_, b.idx_.begin(),
                                                  b.idx_.begin() + b.size_);
}

const std::vector<MultiIndex>& multi_indices(int k)
{
    static const std::array<std::vector<MultiIndex>, kDim + 1> table = [] {
        std::array<std::vector<MultiIndex>, kDim + 1> t;
        for (unsigned mask = 0; mask < (1u << kDim); ++mask) {
            std::vector<int> v;
            for (int i = 0; i < kDim; ++i)
                if (mask & (1u << i)) v.push_back(i + 1);
            t[v.size()].emplace_back(v);
        }
        for (auto& row : t) std::sort(row.begin(), row.end());
        return t;
    }();
    if (k < 0 || k > kDim) throw Error("degree out of range");
    return table[k];
}

// --------------------------------------------------------------------- KForm

KForm::KForm(int degree) : degree_(degree)
{
    if (degree < 0) throw Error("negative degree");
}

KForm::KForm(int degree, Terms terms) : KForm(degree)
{
    for (auto& [idx, c] : terms) add(idx, c);
}

KForm KForm::monomial(const MultiIndex& idx, const Scalar& coef)
{
    KForm f(idx.size());
    f.add(idx, coef);
    return f;
}

KForm KForm::parse(int degree, std::string_view digits)
{
    KForm f(degree);
    std::istringstream in{std::string(digits)};
    std::string tok;
    while (in >> tok) {
        Scalar sign = 1;
        std::size_t p = 0;
        if (tok[p] == '+' || tok[p] == '-') {
            if (tok[p] == '-') sign = -1;
            ++p;
        }
        Scalar c = 1;
        auto star = tok.find('*', p);
        if (star != std::string::npos) {
            c = parse_scalar(std::string_view(tok).substr(p, star - p));
            p = star + 1;
        }
        std::vector<int> idx;
        for (; p < tok.size(); ++p) {
            if (tok[p] < '1' || tok[p] > '7') throw Error("bad term '" + tok + "'");
            idx.push_back(tok[p] - '0');
        }
        if (static_cast<int>(idx.size()) != degree) throw Error("term '" + tok + "' has wrong degree");
        f.add(MultiIndex(idx), sign * c);
    }
    return f;
}

Scalar KForm::coef(const MultiIndex& idx) const
{
    auto it = terms_.find(idx);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void KForm::add(const MultiIndex& idx, const Scalar& c)
{
    if (idx.size() != degree_) throw Error("term degree does not match form degree");
    if (msf7::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(idx, c);
    if (!fresh) {
        it->second += c;
        if (msf7::is_zero(it->second)) terms_.erase(it);
    }
}

KForm& KForm::operator+=(const KForm& o)
{
    if (o.degree_ != degree_) throw Error("adding forms of different degree");
    for (auto& [idx, c] : o.terms_) add(idx, c);
    return *this;
}

KForm& KForm::operator-=(const KForm& o)
{
    if (o.degree_ != degree_) throw Error("subtracting forms of different degree");
    for (auto& [idx, c] : o.terms_) add(idx, -c);
    return *this;
}

KForm& KForm::operator*=(const Scalar& s)
{
    if (msf7::is_zero(s)) {
        terms_.clear();
        return *this;
    }
    for (auto& [idx, c] : terms_) c *= s;
    return *this;
}

std::string KForm::str() const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [idx, c] : terms_) {
        if (!s.empty()) s += ' ';
        s += sgn(c) < 0 ? '-' : '+';
        Scalar a = abs(c);
        if (a != 1) s += to_string(a) + "*";
        s += idx.str();
    }
    return s;
}

Vector basis_vector(int i)
{
    if (i < 1 || i > kDim) throw Error("basis vector index out of range");
    Vector v;
    for (auto& x : v) x = 0;
    v[i - 1] = 1;
    return v;
}

// -------------------------------------------------------------------- Matrix

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_) throw Error("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return msf7::is_zero(s); });
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const
{
    if (x.size() != cols_) throw Error("matrix-vector dimension mismatch");
    std::vector<Scalar> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!msf7::is_zero(x[j])) y[i] += (*this)(i, j) * x[j];
    return y;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (msf7::is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!msf7::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

Matrix operator*(const Scalar& s, const Matrix& a)
{
    Matrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
}

// ----------------------------------------------------------------- LinearMap

LinearMap::LinearMap() : m_(kDim, kDim) {}

LinearMap::LinearMap(const Matrix& m) : m_(m)
{
    if (m.rows() != kDim || m.cols() != kDim) throw Error("linear map must be 7x7");
}

LinearMap LinearMap::identity() { return LinearMap(Matrix::identity(kDim)); }

LinearMap LinearMap::scaled_identity(const Scalar& s) { return LinearMap(s * Matrix::identity(kDim)); }

LinearMap LinearMap::from_columns(const std::array<Vector, kDim>& cols)
{
    LinearMap g;
    for (int j = 0; j < kDim; ++j)
        for (int i = 0; i < kDim; ++i) g(i, j) = cols[j][i];
    return g;
}

LinearMap LinearMap::signed_permutation(const std::array<int, kDim>& target, const std::array<int, kDim>& sign)
{
    LinearMap g;
    for (int j = 0; j < kDim; ++j) {
        if (target[j] < 1 || target[j] > kDim) throw Error("permutation target out of range");
        g(target[j] - 1, j) = sign[j];
    }
    return g;
}

Vector LinearMap::column(int j) const
{
    Vector v;
    for (int i = 0; i < kDim; ++i) v[i] = m_(i, j);
    return v;
}

Vector LinearMap::apply(const Vector& v) const
{
    Vector w;
    for (int i = 0; i < kDim; ++i) {
        w[i] = 0;
        for (int j = 0; j < kDim; ++j)
            if (!msf7::is_zero(v[j])) w[i] += m_(i, j) * v[j];
    }
    return w;
}

SymmetricMatrix::SymmetricMatrix(Matrix m) : m_(std::move(m))
{
    if (m_.rows() != m_.cols()) throw Error("symmetric matrix must be square");
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = i + 1; j < m_.cols(); ++j)
            if (m_(i, j) != m_(j, i)) throw Error("matrix is not symmetric");
}

// ------------------------------------------------------------ form algebra

KForm wedge(const KForm& a, const KForm& b)
{
    KForm out(a.degree() + b.degree());
    if (a.degree() + b.degree() > kDim) return out;
    for (auto& [I, x] : a.terms()) {
        for (auto& [J, y] : b.terms()) {
            bool overlap = false;
            int inversions = 0;
            for (int p = 0; p < I.size() && !overlap; ++p)
                for (int q = 0; q < J.size(); ++q) {
                    if (I[p] == J[q]) {
                        overlap = true;
                        break;
                    }
                    if (I[p] > J[q]) ++inversions;
                }
            if (overlap) continue;
            std::vector<int> merged = I.to_vector();
            auto j = J.to_vector();
            merged.insert(merged.end(), j.begin(), j.end());
            std::sort(merged.begin(), merged.end());
            Scalar c = x * y;
            if (inversions % 2) c = -c;
            out.add(MultiIndex(merged), c);
        }
    }
    return out;
}

KForm interior(const Vector& v, const KForm& a)
{
    if (a.degree() == 0) throw Error("cannot contract a scalar");
    KForm out(a.degree() - 1);
    for (auto& [I, c] : a.terms()) {
        auto idx = I.to_vector();
        for (int p = 0; p < I.size(); ++p) {
            const Scalar& vi = v[I[p] - 1];
            if (is_zero(vi)) continue;
            std::vector<int> rest;
            for (int q = 0; q < I.size(); ++q)
                if (q != p) rest.push_back(idx[q]);
            Scalar t = c * vi;
            if (p % 2) t = -t;
            out.add(MultiIndex(rest), t);
        }
    }
    return out;
}

namespace {

// Determinant of a small square matrix given by a row/column selection of g.
Scalar minor_det(const Matrix& g, const MultiIndex& rows, const MultiIndex& cols)
{
    int k = rows.size();
    if (k == 0) return 1;
    if (k == 1) return g(rows[0] - 1, cols[0] - 1);
    auto e = [&](int i, int j) -> const Scalar& { return g(rows[i] - 1, cols[j] - 1); };
    if (k == 2) return e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
    if (k == 3)
        return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
               e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    Matrix m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = e(i, j);
    return determinant(m);
}

}  // namespace

KForm pullback(const LinearMap& g, const KForm& a)
{
    int k = a.degree();
    KForm out(k);
    if (k > kDim) return out;
    for (const MultiIndex& I : multi_indices(k)) {
        Scalar c = 0;
        for (auto& [J, aj] : a.terms()) {
            Scalar d = minor_det(g.matrix(), J, I);
            if (!is_zero(d)) c += aj * d;
        }
        out.add(I, c);
    }
    return out;
}

Scalar evaluate(const KForm& a, const std::vector<Vector>& vs)
{
    if (static_cast<int>(vs.size()) != a.degree()) throw Error("wrong number of arguments for form evaluation");
    int k = a.degree();
    Matrix m(kDim, std::max(k, 1));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < kDim; ++i) m(i, j) = vs[j][i];
    std::vector<int> all(k);
    std::iota(all.begin(), all.end(), 1);
    MultiIndex cols(all);
    Scalar s = 0;
    for (auto& [I, c] : a.terms()) s += c * minor_det(m, I, cols);
    return s;
}

// ------------------------------------------------------------- elimination

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Row-wise denominator clearing; the row space is unchanged.
IntRows integerize(const Matrix& m, std::vector<Integer>* scales = nullptr)
{
    IntRows r(m.rows(), std::vector<Integer>(m.cols()));
    if (scales) scales->assign(m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        if (scales) (*scales)[i] = l;
    }
    return r;
}

struct Echelon {
    IntRows a;
    std::vector<std::size_t> pivots;  // pivot column of row r
    int swaps = 0;
};

// Fraction-free row echelon form; every division below is exact.
Echelon bareiss(IntRows a, std::size_t ncols)
{
    Echelon e;
    std::size_t nrows = a.size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && sgn(a[p][c]) == 0) ++p;
        if (p == nrows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            ++e.swaps;
        }
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivots.push_back(c);
        ++r;
    }
    e.a = std::move(a);
    return e;
}

std::vector<Scalar> back_substitute(const Echelon& e, std::size_t ncols, std::vector<Scalar> x)
{
    for (std::size_t r = e.pivots.size(); r-- > 0;) {
        std::size_t pc = e.pivots[r];
        Scalar s = 0;
        for (std::size_t j = pc + 1; j < ncols; ++j)
            if (!is_zero(x[j]) && sgn(e.a[r][j]) != 0) s += Scalar(e.a[r][j]) * x[j];
        x[pc] = -s / Scalar(e.a[r][pc]);
    }
    return x;
}

}  // namespace

std::vector<std::vector<Scalar>> kernel(const Matrix& m)
{
    std::size_t n = m.cols();
    Echelon e = bareiss(integerize(m), n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> x(n);
        x[f] = 1;
        // The rows below the pivot rows vanish, so rows >= pivots.size() are ignored.
        x = back_substitute(e, n, std::move(x));
        Integer l = 1, g = 0;
        for (auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        for (auto& v : x) {
            v *= l;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
        }
        for (auto& v : x) v /= g;
        basis.push_back(std::move(x));
    }
    return basis;
}

int rank(const Matrix& m) { return static_cast<int>(bareiss(integerize(m), m.cols()).pivots.size()); }

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b)
{
    if (b.size() != m.rows()) throw Error("right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::size_t n = m.cols();
    Echelon e = bareiss(integerize(aug), n + 1);
    if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
    std::vector<Scalar> x(n + 1);
    x[n] = -1;
    x = back_substitute(e, n + 1, std::move(x));
    x.pop_back();
    return x;
}

Scalar determinant(const Matrix& m)
{
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<Integer> scales;
    Echelon e = bareiss(integerize(m, &scales), n);
    if (e.pivots.size() < n) return 0;
    Scalar d(e.a[n - 1][n - 1]);
    if (e.swaps % 2) d = -d;
    for (auto& s : scales) d /= Scalar(s);
    return d;
}

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix a = m, inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) throw Error("matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Scalar piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || is_zero(a(i, c))) continue;
            Scalar f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

LinearMap inverse(const LinearMap& g) { return LinearMap(inverse(g.matrix())); }

Scalar determinant(const LinearMap& g) { return determinant(g.matrix()); }

// ---------------------------------------------------------------- signature

Signature signature(const SymmetricMatrix& s)
{
    Matrix a = s.matrix();
    std::size_t n = a.rows();
    Signature sig;
    auto swap_sym = [&](std::size_t p, std::size_t q) {
        if (p == q) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(q, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
    };
    std::size_t k = 0;
    while (k < n) {
        std::size_t p = k;
        while (p < n && is_zero(a(p, p))) ++p;
        if (p < n) {
            swap_sym(k, p);
            const Scalar piv = a(k, k);
            for (std::size_t i = k + 1; i < n; ++i) {
                if (is_zero(a(i, k))) continue;
                Scalar f = a(i, k) / piv;
                for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
                for (std::size_t j = k; j < n; ++j) a(j, i) = a(i, j);
            }
            (sgn(piv) > 0 ? sig.pos : sig.neg) += 1;
            ++k;
            continue;
        }
        // Zero diagonal on the active block: look for a hyperbolic pair.
        std::size_t pi = n, qi = n;
        for (std::size_t i = k; i < n && pi == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!is_zero(a(i, j))) {
                    pi = i;
                    qi = j;
                    break;
                }
        if (pi == n) {
            sig.null += static_cast<int>(n - k);
            break;
        }
        swap_sym(k, pi);
        swap_sym(k + 1, qi);
        const Scalar b = a(k, k + 1);
        for (std::size_t i = k + 2; i < n; ++i) {
            Scalar c0 = a(i, k + 1) / b, c1 = a(i, k) / b;
            if (is_zero(c0) && is_zero(c1)) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= c0 * a(k, j) + c1 * a(k + 1, j);
            for (std::size_t j = k; j < n; ++j) a(j, i) = a(i, j);
        }
        sig.pos += 1;
        sig.neg += 1;
        k += 2;
    }
    return sig;
}

Signature signature(const Matrix& s) { return signature(SymmetricMatrix(s)); }

}  // namespace msf7
