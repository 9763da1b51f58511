#include "msf7/forms7.hpp"

#include "msf7/error.hpp"

#include <limits>
#include <map>
#include <random>
#include <set>

namespace msf7 {

Variant parse_variant(const std::string& s)
{
    if (s == "standard") return Variant::Standard;
    if (s == "prime") return Variant::Prime;
    throw Error("unknown variant '" + s + "'");
}

std::string to_string(Variant v) { return v == Variant::Standard ? "standard" : "prime"; }

std::string to_string(SourceBasis b)
{
    switch (b) {
    case SourceBasis::E: return "e";
    case SourceBasis::F: return "f";
    case SourceBasis::Beta: return "beta";
    }
    return "?";
}

namespace {

LinearMap columns(const std::array<std::vector<std::pair<int, Scalar>>, kDim>& cols)
{
    LinearMap g;
    for (int j = 0; j < kDim; ++j)
        for (auto& [i, c] : cols[j]) g(i - 1, j) = c;
    return g;
}

// f-basis change, rescaled so that only rationals appear:
// columns f1/2, f2/2, f3/2 and sqrt2 f4 .. sqrt2 f7.
LinearMap f_basis_map()
{
    Scalar h(1, 2);
    return columns({{{{5, h}, {6, h}},
                     {{5, -h}, {6, h}},
                     {{5, -h}, {6, -h}, {7, h}},
                     {{1, -1}, {4, -1}},
                     {{2, -1}, {3, 1}},
                     {{2, -1}, {3, -1}},
                     {{1, -1}, {4, 1}}}});
}

LinearMap bv_map6() { return LinearMap::signed_permutation({1, 2, 7, 4, 5, 6, 3}, {1, 1, -1, 1, -1, -1, 1}); }

LinearMap bv_map7() { return LinearMap::signed_permutation({4, 7, 5, 6, 3, 1, 2}, {-1, -1, 1, -1, 1, -1, 1}); }

// Relabels the Hsplit-doubling listing of orbit 5 to (i, j, k, e, e i, e j, e k), negated.
LinearMap omega5_prime_map() { return LinearMap::signed_permutation({1, 4, 5, 2, 3, 6, 7}, {-1, -1, -1, -1, 1, 1, 1}); }

struct Entry {
    const char* standard;
    const char* prime;
    SourceBasis prime_basis;
};

const Entry kTable[8] = {
    {"+127 +134 +256", nullptr, SourceBasis::E},
    {"+125 +127 +147 -237 +347 +346", "+145 -167 +257 -246 -347 -356", SourceBasis::Beta},
    {"+123 -167 +145", nullptr, SourceBasis::E},
    {"+125 +136 +147 +234", nullptr, SourceBasis::E},
    {"+123 -145 +167 +246 +257 +347 -356", "+123 +145 -167 +257 -246 -347 -356", SourceBasis::Beta},
    {"+123 -145 +167 -246 -257", "-127 +136 +145 -235 +246", SourceBasis::E},
    {"+145 -167 +246 +257 +347 -356", "-124 -135 +167 +237 -256 +346", SourceBasis::E},
    {"+123 +145 -167 +246 +257 +347 -356", nullptr, SourceBasis::E},
};

void check_orbit(int orbit_id)
{
    if (orbit_id < 1 || orbit_id > 8) throw Error("orbit id must be in 1..8, got " + std::to_string(orbit_id));
}

Scalar coef3(const KForm& w, int a, int b, int c)
{
    if (a == b || b == c || a == c) return 0;
    int s = 1;
    if (a > b) std::swap(a, b), s = -s;
    if (b > c) std::swap(b, c), s = -s;
    if (a > b) std::swap(a, b), s = -s;
    return s * w.coef(MultiIndex{a, b, c});
}

void require_degree3(const KForm& w)
{
    if (w.degree() != 3) throw Error("expected a 3-form, got degree " + std::to_string(w.degree()));
}

}  // namespace

bool has_prime_variant(int orbit_id)
{
    check_orbit(orbit_id);
    return kTable[orbit_id - 1].prime != nullptr;
}

CanonicalForm canonical(int orbit_id, Variant variant)
{
    check_orbit(orbit_id);
    const Entry& e = kTable[orbit_id - 1];
    CanonicalForm cf;
    cf.orbit_id = orbit_id;
    cf.variant = variant;
    if (variant == Variant::Standard) {
        cf.form = KForm::parse(3, e.standard);
        cf.source_basis = SourceBasis::E;
        return cf;
    }
    if (!e.prime) throw Error("orbit " + std::to_string(orbit_id) + " has no prime variant");
    cf.form = KForm::parse(3, e.prime);
    cf.source_basis = e.prime_basis;
    switch (orbit_id) {
    case 2: cf.change = f_basis_map(); break;
    case 5: cf.change = omega5_prime_map(); break;
    case 6: cf.change = inverse(bv_map6()); break;
    case 7: cf.change = inverse(bv_map7()); break;
    }
    return cf;
}

const KForm& preferred_form(int orbit_id)
{
    static const std::vector<KForm> forms = [] {
        std::vector<KForm> v;
        for (int i = 1; i <= 8; ++i) v.push_back(canonical(i, i == 2 ? Variant::Prime : Variant::Standard).form);
        return v;
    }();
    check_orbit(orbit_id);
    return forms[orbit_id - 1];
}

Matrix contraction_matrix(const KForm& w)
{
    require_degree3(w);
    const auto& rows = multi_indices(2);
    Matrix m(rows.size(), kDim);
    for (int v = 1; v <= kDim; ++v) {
        KForm iv = interior(basis_vector(v), w);
        for (std::size_t r = 0; r < rows.size(); ++r) m(r, v - 1) = iv.coef(rows[r]);
    }
    return m;
}

int ms_rank(const KForm& w) { return rank(contraction_matrix(w)); }

bool is_multisymplectic(const KForm& w) { return ms_rank(w) == kDim; }

SymmetricMatrix b_form(const KForm& w)
{
    require_degree3(w);
    std::vector<KForm> iv;
    for (int v = 1; v <= kDim; ++v) iv.push_back(interior(basis_vector(v), w));
    const MultiIndex vol{1, 2, 3, 4, 5, 6, 7};
    Matrix b(kDim, kDim);
    for (int u = 0; u < kDim; ++u)
        for (int v = u; v < kDim; ++v) {
            b(u, v) = wedge(wedge(iv[u], iv[v]), w).coef(vol);
            b(v, u) = b(u, v);
        }
    return SymmetricMatrix(b);
}

Matrix derivation_matrix(const KForm& w)
{
    require_degree3(w);
    const auto& rows = multi_indices(3);
    Matrix m(rows.size(), kDim * kDim);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        int a = rows[r][0], b = rows[r][1], c = rows[r][2];
        for (int i = 1; i <= kDim; ++i) {
            m(r, (i - 1) * kDim + (a - 1)) += coef3(w, i, b, c);
            m(r, (i - 1) * kDim + (b - 1)) += coef3(w, a, i, c);
            m(r, (i - 1) * kDim + (c - 1)) += coef3(w, a, b, i);
        }
    }
    return m;
}

namespace {

LinearMap unflatten(const std::vector<Scalar>& x)
{
    LinearMap g;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) g(i, j) = x[i * kDim + j];
    return g;
}

std::vector<Scalar> flatten(const LinearMap& g)
{
    std::vector<Scalar> x(kDim * kDim);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) x[i * kDim + j] = g(i, j);
    return x;
}

}  // namespace

std::vector<LinearMap> stabilizer_algebra(const KForm& w)
{
    std::vector<LinearMap> out;
    for (auto& x : kernel(derivation_matrix(w))) out.push_back(unflatten(x));
    return out;
}

int stab_dim(const KForm& w) { return kDim * kDim - rank(derivation_matrix(w)); }

bool in_stabilizer_algebra(const LinearMap& A, const KForm& w)
{
    for (auto& v : derivation_matrix(w).apply(flatten(A)))
        if (!is_zero(v)) return false;
    return true;
}

bool closed_under_commutator(const std::vector<LinearMap>& basis)
{
    Matrix span(kDim * kDim, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto x = flatten(basis[j]);
        for (int i = 0; i < kDim * kDim; ++i) span(i, j) = x[i];
    }
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            LinearMap br = basis[a] * basis[b] - basis[b] * basis[a];
            if (!solve(span, flatten(br))) return false;
        }
    return true;
}

int compact_dim(const KForm& w)
{
    // so(7) coordinates: one column per pair a < b, A = E_ab - E_ba.
    Matrix so(kDim * kDim, kDim * (kDim - 1) / 2);
    int col = 0;
    for (int a = 0; a < kDim; ++a)
        for (int b = a + 1; b < kDim; ++b, ++col) {
            so(a * kDim + b, col) = 1;
            so(b * kDim + a, col) = -1;
        }
    Matrix m = derivation_matrix(w) * so;
    return static_cast<int>(so.cols()) - rank(m);
}

namespace {

InvariantVector orbit_key(const KForm& w)
{
    InvariantVector v;
    v.ms_rank = ms_rank(w);
    Signature s = signature(b_form(w));
    v.b_rank = s.pos + s.neg;
    v.b_pos = std::max(s.pos, s.neg);
    v.b_neg = std::min(s.pos, s.neg);
    v.stab_dim = stab_dim(w);
    return v;
}

}  // namespace

InvariantVector invariant_vector(const KForm& w)
{
    require_degree3(w);
    InvariantVector v = orbit_key(w);
    v.compact_dim = compact_dim(w);
    return v;
}

Json to_json(const InvariantVector& v)
{
    return {{"ms_rank", v.ms_rank},
            {"b_rank", v.b_rank},
            {"b_sig", {v.b_pos, v.b_neg}},
            {"stab_dim", v.stab_dim},
            {"compact_dim", v.compact_dim}};
}

std::string Classification::str() const
{
    switch (kind) {
    case Kind::Orbit: return std::to_string(orbit_id);
    case Kind::Unknown: return "Unknown";
    case Kind::NonMultisymplectic: return "NonMultisymplectic";
    }
    return "?";
}

const std::vector<InvariantVector>& orbit_table()
{
    static const std::vector<InvariantVector> table = [] {
        std::vector<InvariantVector> t;
        for (int i = 1; i <= 8; ++i) t.push_back(orbit_key(canonical(i).form));
        return t;
    }();
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = i + 1; j < table.size(); ++j)
            if (table[i].key() == table[j].key())
                throw Error("invariant table does not separate orbits " + std::to_string(i + 1) + " and " +
                            std::to_string(j + 1) + "; refusing to classify");
    return table;
}

Classification classify(const KForm& w)
{
    require_degree3(w);
    const auto& table = orbit_table();
    Classification c;
    InvariantVector key = orbit_key(w);
    if (key.ms_rank < kDim) {
        c.kind = Classification::Kind::NonMultisymplectic;
        return c;
    }
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i].key() == key.key()) {
            c.kind = Classification::Kind::Orbit;
            c.orbit_id = static_cast<int>(i) + 1;
            return c;
        }
    c.kind = Classification::Kind::Unknown;
    return c;
}

LinearMap random_gl7(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    // Rejection keeps the draw uniform on 0..6 independent of the library's distributions.
    constexpr std::uint64_t span = 7;
    constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
    auto draw = [&] {
        std::uint64_t x;
        do x = rng();
        while (x >= limit);
        return static_cast<long>(x % span) - 3;
    };
    for (int attempt = 0; attempt < 100; ++attempt) {
        LinearMap g;
        for (int j = 0; j < kDim; ++j)
            for (int i = 0; i < kDim; ++i) g(i, j) = draw();
        if (!is_zero(determinant(g))) return g;
    }
    throw Error("no invertible matrix after 100 draws");
}

OrbitSample sample_orbit(int orbit_id, std::uint64_t seed)
{
    check_orbit(orbit_id);
    LinearMap g = random_gl7(seed);
    return {pullback(g, canonical(orbit_id).form), g};
}

}  // namespace msf7
