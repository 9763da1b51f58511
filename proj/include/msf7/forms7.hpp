#pragma once

#include "msf7/exterior.hpp"
#include "msf7/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace msf7 {

enum class Variant { Standard, Prime };
enum class SourceBasis { E, F, Beta };

Variant parse_variant(const std::string& s);
std::string to_string(Variant v);
std::string to_string(SourceBasis b);

struct CanonicalForm {
    int orbit_id = 0;
    Variant variant = Variant::Standard;
    KForm form{3};
    SourceBasis source_basis = SourceBasis::E;
    // For prime variants: pullback(change, standard form) == form.
    std::optional<LinearMap> change;
};

// Throws on an orbit outside 1..8 or a variant that does not exist for it.
CanonicalForm canonical(int orbit_id, Variant variant = Variant::Standard);
bool has_prime_variant(int orbit_id);

// Coordinates where the compact part of the stabilizer sits inside O(7).
const KForm& preferred_form(int orbit_id);

// 21 x 7 matrix of v -> i_v w, columns indexed by basis vectors.
Matrix contraction_matrix(const KForm& w);
int ms_rank(const KForm& w);
bool is_multisymplectic(const KForm& w);

// B(u,v) alpha_1...7 = i_u w ^ i_v w ^ w.
SymmetricMatrix b_form(const KForm& w);

// 35 x 49 matrix of A -> L_A w; column a*7+b is the elementary matrix E_ab.
Matrix derivation_matrix(const KForm& w);
std::vector<LinearMap> stabilizer_algebra(const KForm& w);
int stab_dim(const KForm& w);
bool in_stabilizer_algebra(const LinearMap& A, const KForm& w);
// Commutators of the basis re-expanded in it; false if any falls outside.
bool closed_under_commutator(const std::vector<LinearMap>& basis);
int compact_dim(const KForm& w);

struct InvariantVector {
    int ms_rank = 0;
    int b_rank = 0;
    int b_pos = 0, b_neg = 0;  // normalized: b_pos >= b_neg
    int stab_dim = 0;
    int compact_dim = 0;

    // Basis-independent part used by the classifier.
    auto key() const { return std::make_tuple(ms_rank, b_rank, b_pos, b_neg, stab_dim); }
    friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

InvariantVector invariant_vector(const KForm& w);
Json to_json(const InvariantVector& v);

struct Classification {
    enum class Kind { Orbit, Unknown, NonMultisymplectic };
    Kind kind = Kind::Unknown;
    int orbit_id = 0;
    std::string str() const;
};

// Invariant keys of the eight canonical forms; throws if two coincide.
const std::vector<InvariantVector>& orbit_table();
Classification classify(const KForm& w);

struct OrbitSample {
    KForm form{3};
    LinearMap map;
};

// Entries uniform in -3..3 drawn from std::mt19937_64(seed) by rejection; singular
// draws are repeated, at most 100 times.
LinearMap random_gl7(std::uint64_t seed);
OrbitSample sample_orbit(int orbit_id, std::uint64_t seed);

}  // namespace msf7
