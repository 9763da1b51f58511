#include "msf7/error.hpp"
#include "msf7/forms7.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace msf7;

namespace {

const KForm omega8 = KForm::parse(3, "+123 +145 -167 +246 +257 +347 -356");

Matrix covariant_b(const LinearMap& g, const Matrix& b)
{
    return determinant(g) * (g.matrix().transpose() * b * g.matrix());
}

}  // namespace

TEST_CASE("canonical forms")
{
    CHECK(canonical(8).form == omega8);
    CHECK(canonical(8).form.size() == 7);
    CHECK(canonical(1).form == KForm::parse(3, "+127 +134 +256"));
    auto w2p = canonical(2, Variant::Prime);
    CHECK(w2p.form.size() == 6);
    CHECK(w2p.source_basis == SourceBasis::Beta);
    CHECK(w2p.form.coef(MultiIndex{1, 4, 5}) == 1);
    CHECK(w2p.form.coef(MultiIndex{1, 6, 7}) == -1);
    CHECK_THROWS_AS(canonical(1, Variant::Prime), Error);
    CHECK_THROWS_AS(canonical(0), Error);
    CHECK_THROWS_AS(canonical(9), Error);
    CHECK_THROWS_AS(parse_variant("tilde"), Error);
}

TEST_CASE("prime variants are pullbacks of the standard forms")
{
    for (int i = 1; i <= 8; ++i) {
        if (!has_prime_variant(i)) continue;
        auto p = canonical(i, Variant::Prime);
        REQUIRE(p.change.has_value());
        CHECK(!is_zero(determinant(*p.change)));
        CHECK(pullback(*p.change, canonical(i).form) == p.form);
        CHECK(oracle::pullback(*p.change, canonical(i).form) == p.form);
    }
    // The orbit 5 alternate is the orbit 2 alternate plus beta_123.
    CHECK(canonical(5, Variant::Prime).form ==
          canonical(2, Variant::Prime).form + KForm::monomial(MultiIndex{1, 2, 3}));
}

TEST_CASE("multisymplecticity")
{
    for (int i = 1; i <= 8; ++i) {
        CHECK(is_multisymplectic(canonical(i).form));
        if (has_prime_variant(i)) CHECK(is_multisymplectic(canonical(i, Variant::Prime).form));
        CHECK(ms_rank(canonical(i).form) == oracle::rank(contraction_matrix(canonical(i).form)));
    }
    CHECK_FALSE(is_multisymplectic(KForm::parse(3, "+123")));
    CHECK(ms_rank(KForm::parse(3, "+123")) == 3);
    CHECK_THROWS_AS(is_multisymplectic(KForm::parse(2, "+12")), Error);
}

TEST_CASE("property: multisymplecticity is invariant under invertible pullback")
{
    oracle::Gen gen(12);
    for (int t = 0; t < 20; ++t) {
        KForm w = gen.form(3, 0.15);
        LinearMap g = gen.invertible_map(2);
        CHECK(ms_rank(pullback(g, w)) == ms_rank(w));
    }
}

TEST_CASE("b_form examples")
{
    SymmetricMatrix b8 = b_form(omega8);
    CHECK(signature(b8) == Signature{0, 7, 0});
    auto iv8 = invariant_vector(omega8);
    CHECK(iv8.b_pos == 7);
    CHECK(iv8.b_neg == 0);
    auto iv5 = invariant_vector(canonical(5).form);
    CHECK(iv5.b_pos == 4);
    CHECK(iv5.b_neg == 3);
    CHECK(b_form(KForm::parse(3, "+123")).matrix().is_zero());
    CHECK_THROWS_AS(b_form(KForm::parse(2, "+12")), Error);
}

TEST_CASE("b_form agrees with the permutation-sum oracle on sampled entries")
{
    oracle::Gen gen(4);
    std::vector<KForm> forms{omega8, canonical(5).form, gen.form(3, 0.3)};
    for (auto& w : forms) {
        Matrix b = b_form(w).matrix();
        MultiIndex all{1, 2, 3, 4, 5, 6, 7};
        for (auto [u, v] : {std::pair{1, 1}, std::pair{2, 5}, std::pair{7, 3}}) {
            KForm t = oracle::wedge(oracle::wedge(oracle::interior(basis_vector(u), w),
                                                  oracle::interior(basis_vector(v), w)),
                                    w);
            CHECK(b(u - 1, v - 1) == t.coef(all));
        }
    }
}

TEST_CASE("property: b_form covariance, including singular maps")
{
    oracle::Gen gen(21);
    for (int t = 0; t < 15; ++t) {
        KForm w = t < 8 ? canonical(t + 1).form : gen.form(3, 0.3);
        LinearMap g = gen.map(2);
        if (t % 4 == 0)
            for (int i = 0; i < 7; ++i) g(i, 6) = g(i, 0) - g(i, 1);
        CHECK(b_form(pullback(g, w)).matrix() == covariant_b(g, b_form(w).matrix()));
    }
}

TEST_CASE("stabilizer algebras")
{
    auto s8 = stabilizer_algebra(omega8);
    CHECK(s8.size() == 14);
    CHECK(stabilizer_algebra(canonical(5).form).size() == 14);
    for (auto& A : s8) CHECK(in_stabilizer_algebra(A, omega8));
    CHECK(closed_under_commutator(s8));
    CHECK_FALSE(in_stabilizer_algebra(LinearMap::identity(), omega8));

    const int expected[8] = {18, 15, 28, 21, 14, 18, 15, 14};
    for (int i = 1; i <= 8; ++i) {
        KForm w = canonical(i).form;
        CHECK(stab_dim(w) == expected[i - 1]);
        CHECK(stab_dim(w) == oracle::stabilizer_dim(w));
        auto basis = stabilizer_algebra(w);
        CHECK(static_cast<int>(basis.size()) == stab_dim(w));
        for (auto& A : basis) CHECK(oracle::derivation_action(A.matrix(), w).is_zero());
        CHECK(closed_under_commutator(basis));
    }
}

TEST_CASE("commutator closure detects a non-subalgebra")
{
    LinearMap a, b;
    a(0, 1) = 1;
    b(1, 0) = 1;
    CHECK_FALSE(closed_under_commutator({a, b}));
}

TEST_CASE("property: stabilizer dimension is conjugation invariant")
{
    for (int i = 1; i <= 8; ++i) {
        LinearMap g = random_gl7(1000 + i);
        CHECK(stab_dim(pullback(g, canonical(i).form)) == stab_dim(canonical(i).form));
    }
}

TEST_CASE("compact dimensions at preferred representatives")
{
    const int expected[8] = {2, 2, 9, 3, 6, 4, 6, 14};
    for (int i = 1; i <= 8; ++i) {
        CHECK(compact_dim(preferred_form(i)) == expected[i - 1]);
        CHECK(compact_dim(preferred_form(i)) == oracle::compact_dim(preferred_form(i)));
    }
    // Not basis independent: orbit 2 in its standard coordinates.
    CHECK(compact_dim(canonical(2).form) == 1);
}

TEST_CASE("invariant table separates the orbits")
{
    const auto& table = orbit_table();
    REQUIRE(table.size() == 8);
    std::set<std::tuple<int, int, int, int, int>> keys;
    for (auto& v : table) keys.insert(v.key());
    CHECK(keys.size() == 8);
    CHECK(table[0].key() == std::make_tuple(7, 2, 1, 1, 18));
    CHECK(table[1].key() == std::make_tuple(7, 4, 2, 2, 15));
    CHECK(table[2].key() == std::make_tuple(7, 1, 1, 0, 28));
    CHECK(table[3].key() == std::make_tuple(7, 1, 1, 0, 21));
    CHECK(table[4].key() == std::make_tuple(7, 7, 4, 3, 14));
    CHECK(table[5].key() == std::make_tuple(7, 2, 2, 0, 18));
    CHECK(table[6].key() == std::make_tuple(7, 4, 4, 0, 15));
    CHECK(table[7].key() == std::make_tuple(7, 7, 7, 0, 14));
    for (auto& v : table) {
        CHECK(v.b_rank == v.b_pos + v.b_neg);
        CHECK(v.stab_dim >= 14);
    }
}

TEST_CASE("classification")
{
    for (int i = 1; i <= 8; ++i) {
        auto c = classify(canonical(i).form);
        CHECK(c.kind == Classification::Kind::Orbit);
        CHECK(c.orbit_id == i);
        if (has_prime_variant(i)) CHECK(classify(canonical(i, Variant::Prime).form).orbit_id == i);
    }
    auto c = classify(KForm::parse(3, "+123 +456"));
    CHECK(c.kind == Classification::Kind::NonMultisymplectic);
    CHECK(c.str() == "NonMultisymplectic");
    oracle::Gen gen(66);
    for (int t = 0; t < 16; ++t) {
        int i = t % 8 + 1;
        CHECK(classify(pullback(gen.invertible_map(2), canonical(i).form)).orbit_id == i);
    }
}

TEST_CASE("property: invariants are constant along orbits")
{
    for (int i = 1; i <= 8; ++i) {
        auto ref = invariant_vector(canonical(i).form);
        for (std::uint64_t s = 0; s < 3; ++s) {
            auto iv = invariant_vector(sample_orbit(i, s * 31 + i).form);
            CHECK(iv.key() == ref.key());
        }
    }
}

TEST_CASE("sampling")
{
    auto a = sample_orbit(6, 42), b = sample_orbit(6, 42), c = sample_orbit(6, 43);
    CHECK(a.form == b.form);
    CHECK(a.map == b.map);
    CHECK_FALSE(a.map == c.map);
    CHECK(!is_zero(determinant(a.map)));
    CHECK(pullback(a.map, canonical(6).form) == a.form);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            CHECK(abs(a.map(i, j)) <= 3);
            CHECK(a.map(i, j).get_den() == 1);
        }
    CHECK_THROWS_AS(sample_orbit(0, 1), Error);
    for (int i = 1; i <= 8; ++i) CHECK(classify(sample_orbit(i, 7).form).orbit_id == i);
}

TEST_CASE("invariant json")
{
    Json j = to_json(invariant_vector(omega8));
    CHECK(j.dump() == R"({"ms_rank":7,"b_rank":7,"b_sig":[7,0],"stab_dim":14,"compact_dim":14})");
}
