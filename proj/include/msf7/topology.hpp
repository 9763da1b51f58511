#pragma once

#include "msf7/json_io.hpp"
#include "msf7/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msf7 {

// Free parts of H^2 and H^4 of a closed 7-manifold plus characteristic data.
struct CohomologyModel {
    std::string name;
    int r2 = 0;
    int r4 = 0;
    std::vector<std::vector<std::vector<Integer>>> cup;  // cup[i][j] in Z^r4
    std::vector<Integer> p1;                            // Z^r4
    std::vector<int> w2;                                // (Z/2)^r2
    bool orientable = true;
    bool spin = true;
    bool W3_zero = true;
    bool simply_connected = true;
};

// Throws Error on schema violations, asymmetric cup tensor or inconsistent flags.
CohomologyModel model_from_json(const Json& j);
CohomologyModel parse_model(const std::string& text);
CohomologyModel load_model(const std::string& path);
Json to_json(const CohomologyModel& m);

std::vector<Integer> cup_eval(const CohomologyModel& m, const std::vector<Integer>& e,
                              const std::vector<Integer>& f);

enum class VerdictStatus { Admits, No, Unknown };
std::string to_string(VerdictStatus s);

struct Verdict {
    VerdictStatus status = VerdictStatus::Unknown;
    // Types 1, 2: {e, f}; type 4: {e}; other types: empty.
    std::vector<std::vector<Integer>> witness;
    int bound_used = 0;
    std::string reason;
};

constexpr int kDefaultBound = 16;
// Searches larger than this many lattice points per call are cut to a smaller radius.
constexpr long long kSearchBudget = 20'000'000;

// Theorem hypotheses that fail raise Error("theorem hypothesis not met: ...").
Verdict check_type(const CohomologyModel& m, int type_id, int bound = kDefaultBound);

// Substitutes the witness back into the type's equations.
bool verify_witness(const CohomologyModel& m, int type_id, const std::vector<std::vector<Integer>>& witness);

Json to_json(const Verdict& v);

}  // namespace msf7
