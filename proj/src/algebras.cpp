#include "msf7/algebras.hpp"

#include "msf7/error.hpp"

#include <functional>

namespace msf7 {

AlgebraKind parse_algebra_kind(const std::string& name)
{
    if (name == "R") return AlgebraKind::R;
    if (name == "C") return AlgebraKind::C;
    if (name == "H") return AlgebraKind::H;
    if (name == "Hsplit") return AlgebraKind::Hsplit;
    if (name == "O") return AlgebraKind::O;
    if (name == "Osplit") return AlgebraKind::Osplit;
    if (name == "Osplit_from_Hsplit") return AlgebraKind::OsplitFromHsplit;
    throw Error("unknown algebra kind '" + name + "'");
}

std::string to_string(AlgebraKind k)
{
    switch (k) {
    case AlgebraKind::R: return "R";
    case AlgebraKind::C: return "C";
    case AlgebraKind::H: return "H";
    case AlgebraKind::Hsplit: return "Hsplit";
    case AlgebraKind::O: return "O";
    case AlgebraKind::Osplit: return "Osplit";
    case AlgebraKind::OsplitFromHsplit: return "Osplit_from_Hsplit";
    }
    throw Error("unknown algebra kind");
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b)
{
    if (a.dim() != b.dim()) throw Error("algebra element dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i) a.coords[i] += b.coords[i];
    return a;
}

AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b)
{
    if (a.dim() != b.dim()) throw Error("algebra element dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i) a.coords[i] -= b.coords[i];
    return a;
}

AlgebraElement operator*(const Scalar& s, AlgebraElement a)
{
    for (auto& x : a.coords) x *= s;
    return a;
}

namespace {

using Coords = std::vector<Scalar>;
using Product = std::function<Coords(const Coords&, const Coords&)>;

Coords raw_multiply(int n, const std::vector<Scalar>& mult, const Coords& x, const Coords& y)
{
    Coords z(n);
    for (int i = 0; i < n; ++i) {
        if (is_zero(x[i])) continue;
        for (int j = 0; j < n; ++j) {
            if (is_zero(y[j])) continue;
            Scalar xy = x[i] * y[j];
            for (int k = 0; k < n; ++k) {
                const Scalar& c = mult[(i * n + j) * n + k];
                if (!is_zero(c)) z[k] += xy * c;
            }
        }
    }
    return z;
}

std::vector<Scalar> table_from_product(int n, const Product& prod)
{
    std::vector<Scalar> mult(static_cast<std::size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Coords x(n), y(n);
            x[i] = 1;
            y[j] = 1;
            Coords z = prod(x, y);
            for (int k = 0; k < n; ++k) mult[(i * n + j) * n + k] = z[k];
        }
    return mult;
}

}  // namespace

AlgebraTable::AlgebraTable(std::string name, int dim, std::vector<Scalar> mult, Matrix conj, int unit_index)
    : name_(std::move(name)), dim_(dim), mult_(std::move(mult)), conj_(std::move(conj)), unit_(unit_index)
{
    if (dim_ < 1) throw Error("algebra dimension must be positive");
    if (mult_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_) throw Error("structure tensor has wrong size");
    if (conj_.rows() != static_cast<std::size_t>(dim_) || conj_.cols() != static_cast<std::size_t>(dim_))
        throw Error("conjugation matrix has wrong size");
    if (unit_ < 0 || unit_ >= dim_) throw Error("unit index out of range");

    for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) {
            Scalar delta = j == k ? 1 : 0;
            if (c(unit_, j, k) != delta || c(j, unit_, k) != delta) throw Error(name_ + ": unit is not two-sided");
        }
    if (!(conj_ * conj_ == Matrix::identity(dim_))) throw Error(name_ + ": conjugation is not an involution");

    auto prod = [&](const Coords& x, const Coords& y) { return raw_multiply(dim_, mult_, x, y); };
    auto bar = [&](const Coords& x) { return conj_.apply(x); };
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Coords ei(dim_), ej(dim_);
            ei[i] = 1;
            ej[j] = 1;
            if (bar(prod(ei, ej)) != prod(bar(ej), bar(ei)))
                throw Error(name_ + ": conjugation is not an anti-automorphism");
        }

    Matrix nf(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Coords ei(dim_), ej(dim_);
            ei[i] = 1;
            ej[j] = 1;
            nf(i, j) = (prod(ei, bar(ej))[unit_] + prod(ej, bar(ei))[unit_]) / 2;
        }
    norm_ = SymmetricMatrix(nf);

    // x conj(x) = <x,x> 1 on basis vectors and pairwise sums.
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j) {
            Coords x(dim_);
            x[i] += 1;
            if (j != i) x[j] += 1;
            Coords z = prod(x, bar(x));
            Scalar q = nf(i, i) + (j != i ? nf(j, j) + 2 * nf(i, j) : Scalar(0));
            for (int k = 0; k < dim_; ++k)
                if (z[k] != (k == unit_ ? q : Scalar(0))) throw Error(name_ + ": x conj(x) is not a scalar multiple of 1");
        }
}

AlgebraElement AlgebraTable::basis(int i) const
{
    if (i < 0 || i >= dim_) throw Error("basis index out of range");
    Coords x(dim_);
    x[i] = 1;
    return AlgebraElement(x);
}

AlgebraElement AlgebraTable::element(std::vector<Scalar> coords) const
{
    if (coords.size() != static_cast<std::size_t>(dim_)) throw Error("element has wrong dimension for " + name_);
    return AlgebraElement(std::move(coords));
}

AlgebraTable double_cayley_dickson(const AlgebraTable& base, const Scalar& gamma, const std::string& name)
{
    int n = base.dim();
    auto mul = [&](const Coords& x, const Coords& y) { return multiply(base, AlgebraElement(x), AlgebraElement(y)).coords; };
    auto bar = [&](const Coords& x) { return base.conj().apply(x); };
    Product prod = [&](const Coords& x, const Coords& y) {
        Coords a(x.begin(), x.begin() + n), b(x.begin() + n, x.end());
        Coords c(y.begin(), y.begin() + n), d(y.begin() + n, y.end());
        Coords p = mul(a, c), dbb = mul(bar(d), b), q = mul(d, a), bcb = mul(b, bar(c));
        Coords z(2 * n);
        for (int i = 0; i < n; ++i) {
            z[i] = p[i] + gamma * dbb[i];
            z[n + i] = q[i] + bcb[i];
        }
        return z;
    };
    Matrix conj(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) conj(i, j) = base.conj()(i, j);
    for (int i = 0; i < n; ++i) conj(n + i, n + i) = -1;
    return AlgebraTable(name, 2 * n, table_from_product(2 * n, prod), conj, base.unit_index());
}

AlgebraTable double_left_pair(const AlgebraTable& base, const Scalar& gamma, const std::string& name)
{
    int n = base.dim();
    auto mul = [&](const Coords& x, const Coords& y) { return multiply(base, AlgebraElement(x), AlgebraElement(y)).coords; };
    auto bar = [&](const Coords& x) { return base.conj().apply(x); };
    Product prod = [&](const Coords& x, const Coords& y) {
        Coords a(x.begin(), x.begin() + n), b(x.begin() + n, x.end());
        Coords c(y.begin(), y.begin() + n), d(y.begin() + n, y.end());
        Coords p = mul(a, c), dbb = mul(d, bar(b)), q = mul(c, b), abd = mul(bar(a), d);
        Coords z(2 * n);
        for (int i = 0; i < n; ++i) {
            z[i] = p[i] + gamma * dbb[i];
            z[n + i] = q[i] + abd[i];
        }
        return z;
    };
    Matrix conj(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) conj(i, j) = base.conj()(i, j);
    for (int i = 0; i < n; ++i) conj(n + i, n + i) = -1;
    return AlgebraTable(name, 2 * n, table_from_product(2 * n, prod), conj, base.unit_index());
}

namespace {

// Basis 1, i, j, k as the 2x2 matrices
//   i = [[0,1],[-1,0]], j = [[0,1],[1,0]], k = [[1,0],[0,-1]];
// coordinates of [[p,q],[r,s]] are ((p+s)/2, (q-r)/2, (q+r)/2, (p-s)/2).
Coords hsplit_coords(const Scalar& p, const Scalar& q, const Scalar& r, const Scalar& s)
{
    return {(p + s) / 2, (q - r) / 2, (q + r) / 2, (p - s) / 2};
}

AlgebraTable build_hsplit()
{
    auto to_mat = [](const Coords& x) {
        return std::array<Scalar, 4>{x[0] + x[3], x[1] + x[2], x[2] - x[1], x[0] - x[3]};
    };
    Product prod = [&](const Coords& x, const Coords& y) {
        auto a = to_mat(x), b = to_mat(y);
        return hsplit_coords(a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                             a[2] * b[1] + a[3] * b[3]);
    };
    Matrix conj(4, 4);
    for (int j = 0; j < 4; ++j) {
        Coords e(4);
        e[j] = 1;
        auto m = to_mat(e);
        Coords adj = hsplit_coords(m[3], -m[1], -m[2], m[0]);
        for (int i = 0; i < 4; ++i) conj(i, j) = adj[i];
    }
    return AlgebraTable("Hsplit", 4, table_from_product(4, prod), conj);
}

}  // namespace

AlgebraTable build_algebra(AlgebraKind kind)
{
    static const AlgebraTable R("R", 1, {Scalar(1)}, Matrix{{1}});
    switch (kind) {
    case AlgebraKind::R: return R;
    case AlgebraKind::C: return double_cayley_dickson(R, -1, "C");
    case AlgebraKind::H: return double_cayley_dickson(build_algebra(AlgebraKind::C), -1, "H");
    case AlgebraKind::Hsplit: return build_hsplit();
    case AlgebraKind::O: return double_cayley_dickson(build_algebra(AlgebraKind::H), -1, "O");
    case AlgebraKind::Osplit: return double_cayley_dickson(build_algebra(AlgebraKind::H), 1, "Osplit");
    case AlgebraKind::OsplitFromHsplit: return double_cayley_dickson(build_hsplit(), -1, "Osplit_from_Hsplit");
    }
    throw Error("unknown algebra kind");
}

AlgebraElement multiply(const AlgebraTable& t, const AlgebraElement& x, const AlgebraElement& y)
{
    if (x.dim() != static_cast<std::size_t>(t.dim()) || y.dim() != static_cast<std::size_t>(t.dim()))
        throw Error("dimension mismatch in multiply for " + t.name());
    int n = t.dim();
    Coords z(n);
    for (int i = 0; i < n; ++i) {
        if (is_zero(x.coords[i])) continue;
        for (int j = 0; j < n; ++j) {
            if (is_zero(y.coords[j])) continue;
            Scalar xy = x.coords[i] * y.coords[j];
            for (int k = 0; k < n; ++k)
                if (!is_zero(t.c(i, j, k))) z[k] += xy * t.c(i, j, k);
        }
    }
    return AlgebraElement(z);
}

AlgebraElement conjugate(const AlgebraTable& t, const AlgebraElement& x)
{
    if (x.dim() != static_cast<std::size_t>(t.dim())) throw Error("dimension mismatch in conjugate");
    return AlgebraElement(t.conj().apply(x.coords));
}

Scalar norm(const AlgebraTable& t, const AlgebraElement& x)
{
    return multiply(t, x, conjugate(t, x)).coords[t.unit_index()];
}

Scalar inner(const AlgebraTable& t, const AlgebraElement& x, const AlgebraElement& y)
{
    if (x.dim() != static_cast<std::size_t>(t.dim()) || y.dim() != static_cast<std::size_t>(t.dim()))
        throw Error("dimension mismatch in inner product");
    Scalar s = 0;
    for (int i = 0; i < t.dim(); ++i) {
        if (is_zero(x.coords[i])) continue;
        for (int j = 0; j < t.dim(); ++j)
            if (!is_zero(y.coords[j])) s += x.coords[i] * t.norm_form()(i, j) * y.coords[j];
    }
    return s;
}

KForm triple_form(const AlgebraTable& t, const std::vector<AlgebraElement>& basis)
{
    if (t.dim() != 8) throw Error("triple form needs an 8-dimensional algebra");
    if (basis.size() != static_cast<std::size_t>(kDim)) throw Error("triple form needs 7 basis elements");
    for (auto& x : basis)
        if (!is_zero(inner(t, x, t.unit()))) throw Error("non-imaginary basis element");

    Scalar w[kDim][kDim][kDim];
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) {
            AlgebraElement ab = multiply(t, basis[a], basis[b]);
            for (int c = 0; c < kDim; ++c) w[a][b][c] = inner(t, ab, basis[c]);
        }
    for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
            for (int c = 0; c < kDim; ++c)
                if (w[a][b][c] != -w[b][a][c] || w[a][b][c] != -w[a][c][b])
                    throw Error("triple form is not alternating on this basis");

    KForm f(3);
    for (int a = 0; a < kDim; ++a)
        for (int b = a + 1; b < kDim; ++b)
            for (int c = b + 1; c < kDim; ++c) f.add(MultiIndex{a + 1, b + 1, c + 1}, w[a][b][c]);
    return f;
}

bool is_automorphism(const AlgebraTable& t, const Matrix& g)
{
    int n = t.dim();
    if (g.rows() != static_cast<std::size_t>(n) || g.cols() != static_cast<std::size_t>(n)) return false;
    std::vector<AlgebraElement> img;
    for (int i = 0; i < n; ++i) {
        Coords col(n);
        for (int r = 0; r < n; ++r) col[r] = g(r, i);
        img.emplace_back(col);
    }
    if (!(img[t.unit_index()] == t.unit())) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            AlgebraElement lhs(g.apply(multiply(t, t.basis(i), t.basis(j)).coords));
            if (!(lhs == multiply(t, img[i], img[j]))) return false;
        }
    return true;
}

std::optional<Matrix> find_signed_permutation_isomorphism(const AlgebraTable& from, const AlgebraTable& to)
{
    int n = from.dim();
    if (to.dim() != n) return std::nullopt;
    std::vector<int> target(n, -1), sign(n, 0);
    std::vector<bool> used(n, false);
    target[from.unit_index()] = to.unit_index();
    sign[from.unit_index()] = 1;
    used[to.unit_index()] = true;

    // Check g(e_i e_j) = g(e_i) g(e_j) whenever every index involved is assigned.
    auto consistent = [&](int i, int j) {
        Coords lhs(n);
        for (int k = 0; k < n; ++k) {
            const Scalar& c = from.c(i, j, k);
            if (is_zero(c)) continue;
            if (target[k] < 0) return true;
            lhs[target[k]] += c * sign[k];
        }
        Coords rhs(n);
        Scalar s = sign[i] * sign[j];
        for (int k = 0; k < n; ++k) rhs[k] = s * to.c(target[i], target[j], k);
        return lhs == rhs;
    };

    std::function<bool(int)> assign = [&](int i) -> bool {
        if (i == n) return true;
        if (target[i] >= 0) return assign(i + 1);
        for (int t = 0; t < n; ++t) {
            if (used[t] || from.norm_form()(i, i) != to.norm_form()(t, t)) continue;
            for (int s : {1, -1}) {
                target[i] = t;
                sign[i] = s;
                used[t] = true;
                bool ok = true;
                for (int j = 0; j < n && ok; ++j) {
                    if (target[j] < 0) continue;
                    ok = consistent(i, j) && consistent(j, i);
                }
                // Products already fully assigned may now be checkable through k = i.
                for (int a = 0; a < n && ok; ++a)
                    for (int b = 0; b < n && ok; ++b)
                        if (target[a] >= 0 && target[b] >= 0 && !is_zero(from.c(a, b, i))) ok = consistent(a, b);
                if (ok && assign(i + 1)) return true;
                used[t] = false;
                target[i] = -1;
                sign[i] = 0;
            }
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    Matrix g(n, n);
    for (int i = 0; i < n; ++i) g(target[i], i) = sign[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Coords x = g.apply(multiply(from, from.basis(i), from.basis(j)).coords);
            Coords gi(n), gj(n);
            gi[target[i]] = sign[i];
            gj[target[j]] = sign[j];
            if (x != multiply(to, AlgebraElement(gi), AlgebraElement(gj)).coords)
                throw Error("isomorphism search produced an inconsistent map");
        }
    return g;
}

AlgebraElement pair_element(const std::vector<Scalar>& p, const std::vector<Scalar>& q)
{
    if (p.size() != q.size()) throw Error("pair halves differ in dimension");
    std::vector<Scalar> c = p;
    c.insert(c.end(), q.begin(), q.end());
    return AlgebraElement(c);
}

Json to_json(const AlgebraTable& t)
{
    Json mult = Json::array();
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            for (int k = 0; k < t.dim(); ++k)
                if (!is_zero(t.c(i, j, k))) mult.push_back({i, j, k, to_string(t.c(i, j, k))});
    return {{"name", t.name()},
            {"dim", t.dim()},
            {"unit", t.unit_index()},
            {"mult", mult},
            {"conj", to_json(t.conj())},
            {"norm", to_json(t.norm_form().matrix())}};
}

}  // namespace msf7
