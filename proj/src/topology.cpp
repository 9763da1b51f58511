#include "msf7/topology.hpp"

#include "msf7/error.hpp"
#include "msf7/exterior.hpp"

#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace msf7 {

namespace {

using Wide = __int128;

Integer integer_from_json(const Json& j, const std::string& field)
{
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        Integer v;
        if (s.empty() || v.set_str(s, 10) != 0) throw Error("model field '" + field + "': bad integer '" + s + "'");
        return v;
    }
    throw Error("model field '" + field + "': expected an integer");
}

const Json& field(const Json& j, const char* name)
{
    if (!j.contains(name)) throw Error(std::string("model is missing field '") + name + "'");
    return j.at(name);
}

bool bool_field(const Json& j, const char* name)
{
    const Json& v = field(j, name);
    if (!v.is_boolean()) throw Error(std::string("model field '") + name + "': expected a boolean");
    return v.get<bool>();
}

int count_field(const Json& j, const char* name)
{
    const Json& v = field(j, name);
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 64)
        throw Error(std::string("model field '") + name + "': expected an integer in 0..64");
    return static_cast<int>(v.get<long long>());
}

const Json& array_of(const Json& v, std::size_t n, const std::string& what)
{
    if (!v.is_array() || v.size() != n)
        throw Error("model field '" + what + "': expected an array of length " + std::to_string(n));
    return v;
}

Wide to_wide(const Integer& v)
{
    if (!v.fits_slong_p() || abs(v) > Integer(1) << 40) throw Error("model coefficient too large: " + v.get_str());
    return static_cast<Wide>(v.get_si());
}

bool all_zero(const std::vector<int>& w)
{
    for (int x : w)
        if (x) return false;
    return true;
}

}  // namespace

CohomologyModel model_from_json(const Json& j)
{
    if (!j.is_object()) throw Error("model must be a JSON object");
    CohomologyModel m;
    const Json& name = field(j, "name");
    if (!name.is_string()) throw Error("model field 'name': expected a string");
    m.name = name.get<std::string>();
    m.r2 = count_field(j, "r2");
    m.r4 = count_field(j, "r4");

    const Json& cup = array_of(field(j, "cup"), m.r2, "cup");
    m.cup.assign(m.r2, std::vector<std::vector<Integer>>(m.r2));
    for (int a = 0; a < m.r2; ++a) {
        array_of(cup[a], m.r2, "cup");
        for (int b = 0; b < m.r2; ++b) {
            array_of(cup[a][b], m.r4, "cup");
            for (int k = 0; k < m.r4; ++k) m.cup[a][b].push_back(integer_from_json(cup[a][b][k], "cup"));
        }
    }
    for (int a = 0; a < m.r2; ++a)
        for (int b = 0; b < a; ++b)
            if (m.cup[a][b] != m.cup[b][a])
                throw Error("cup tensor is not symmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")");

    for (auto& v : array_of(field(j, "p1"), m.r4, "p1")) m.p1.push_back(integer_from_json(v, "p1"));
    for (auto& v : array_of(field(j, "w2"), m.r2, "w2")) {
        Integer x = integer_from_json(v, "w2");
        if (x != 0 && x != 1) throw Error("model field 'w2': entries must be 0 or 1");
        m.w2.push_back(static_cast<int>(x.get_si()));
    }
    m.orientable = bool_field(j, "orientable");
    m.spin = bool_field(j, "spin");
    m.W3_zero = bool_field(j, "W3_zero");
    m.simply_connected = bool_field(j, "simply_connected");

    if (m.spin && !all_zero(m.w2)) throw Error("inconsistent model: spin but w2 is nonzero");
    if (m.spin && !m.W3_zero) throw Error("inconsistent model: spin but W3 is nonzero");
    if (m.spin && !m.orientable) throw Error("inconsistent model: spin but not orientable");
    if (m.simply_connected && !m.orientable) throw Error("inconsistent model: simply connected but not orientable");
    for (auto& row : m.cup)
        for (auto& v : row)
            for (auto& x : v) to_wide(x);
    for (auto& x : m.p1) to_wide(x);
    return m;
}

CohomologyModel parse_model(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
    return model_from_json(j);
}

CohomologyModel load_model(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

Json to_json(const CohomologyModel& m)
{
    Json cup = Json::array();
    for (auto& row : m.cup) {
        Json r = Json::array();
        for (auto& v : row) {
            Json c = Json::array();
            for (auto& x : v) c.push_back(x.get_si());
            r.push_back(c);
        }
        cup.push_back(r);
    }
    Json p1 = Json::array();
    for (auto& x : m.p1) p1.push_back(x.get_si());
    return Json{{"name", m.name},         {"r2", m.r2},
                {"r4", m.r4},             {"cup", cup},
                {"p1", p1},               {"w2", m.w2},
                {"orientable", m.orientable}, {"spin", m.spin},
                {"W3_zero", m.W3_zero},   {"simply_connected", m.simply_connected}};
}

std::vector<Integer> cup_eval(const CohomologyModel& m, const std::vector<Integer>& e, const std::vector<Integer>& f)
{
    if (static_cast<int>(e.size()) != m.r2 || static_cast<int>(f.size()) != m.r2)
        throw Error("cup_eval: coordinate vectors must have length r2 = " + std::to_string(m.r2));
    std::vector<Integer> out(m.r4, 0);
    for (int a = 0; a < m.r2; ++a)
        for (int b = 0; b < m.r2; ++b) {
            if (e[a] == 0 || f[b] == 0) continue;
            for (int k = 0; k < m.r4; ++k) out[k] += m.cup[a][b][k] * e[a] * f[b];
        }
    return out;
}

std::string to_string(VerdictStatus s)
{
    switch (s) {
    case VerdictStatus::Admits: return "ADMITS";
    case VerdictStatus::No: return "NO";
    case VerdictStatus::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

namespace {

Verdict make(VerdictStatus s, std::string reason, int bound_used = 0)
{
    Verdict v;
    v.status = s;
    v.reason = std::move(reason);
    v.bound_used = bound_used;
    return v;
}

void require(bool ok, const std::string& what)
{
    if (!ok) throw Error("theorem hypothesis not met: " + what);
}

// Quadratic equations Q_k(x) = target_k (k < r4) on x in Z^n, optionally with x restricted mod 2.
struct Problem {
    int n = 0;
    std::vector<Matrix> gram;  // symmetric n x n, Q_k(x) = x^T G x
    std::vector<Scalar> target;
    std::vector<std::vector<Wide>> twice;  // 2 G_k flattened, integral
    std::vector<Wide> twice_target;
    std::function<bool(const std::vector<long>&)> congruence;  // may be empty
};

Problem build_problem(const CohomologyModel& m, int type_id)
{
    Problem p;
    int r = m.r2;
    p.n = type_id == 4 ? r : 2 * r;
    for (int k = 0; k < m.r4; ++k) {
        Matrix G(p.n, p.n);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
                Scalar c(m.cup[a][b][k]);
                G(a, b) = c;
                if (type_id != 4) G(r + a, r + b) = c;
                if (type_id == 2) {
                    G(a, r + b) += c / 2;
                    G(r + b, a) += c / 2;
                }
            }
        Scalar t = type_id == 1 ? Scalar(m.p1[k]) : Scalar(m.p1[k]) / 2;
        std::vector<Wide> tw(static_cast<std::size_t>(p.n) * p.n);
        for (int a = 0; a < p.n; ++a)
            for (int b = 0; b < p.n; ++b) {
                Scalar v = 2 * G(a, b);
                tw[a * p.n + b] = to_wide(v.get_num());
            }
        p.gram.push_back(G);
        p.target.push_back(t);
        p.twice.push_back(std::move(tw));
        Scalar t2 = 2 * t;
        p.twice_target.push_back(to_wide(t2.get_num()));
    }
    if (type_id == 1) {
        std::vector<int> w = m.w2;
        p.congruence = [w, r](const std::vector<long>& x) {
            for (int a = 0; a < r; ++a)
                if (((x[a] + x[r + a]) & 1) != w[a]) return false;
            return true;
        };
    }
    return p;
}

bool satisfies(const Problem& p, const std::vector<long>& x)
{
    if (p.congruence && !p.congruence(x)) return false;
    for (std::size_t k = 0; k < p.twice.size(); ++k) {
        const auto& g = p.twice[k];
        Wide s = 0;
        for (int a = 0; a < p.n; ++a) {
            if (!x[a]) continue;
            Wide row = 0;
            for (int b = 0; b < p.n; ++b) row += g[a * p.n + b] * x[b];
            s += row * x[a];
        }
        if (s != p.twice_target[k]) return false;
    }
    return true;
}

Integer isqrt_floor(const Scalar& v)
{
    if (sgn(v) <= 0) return 0;
    Integer q = v.get_num() / v.get_den();
    Integer r;
    mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
    return r;
}

// Radius of a box containing every real solution, if some equation has a definite form.
// Returns -1 when a definite equation has no real solution at all.
std::optional<Integer> definite_radius(const Problem& p)
{
    std::optional<Integer> best;
    for (std::size_t k = 0; k < p.gram.size(); ++k) {
        if (p.n == 0) continue;
        Signature s = signature(p.gram[k]);
        int sign = s.pos == p.n ? 1 : s.neg == p.n ? -1 : 0;
        if (!sign) continue;
        Scalar t = sign * p.target[k];
        if (sgn(t) < 0) return Integer(-1);
        Matrix inv = inverse(p.gram[k]);
        Integer rad = 0;
        for (int i = 0; i < p.n; ++i) {
            Scalar bound_sq = t * sign * inv(i, i);
            Integer ri = isqrt_floor(bound_sq);
            if (ri > rad) rad = ri;
        }
        if (!best || rad < *best) best = rad;
    }
    return best;
}

long long points_up_to(int n, long radius)
{
    double side = 2.0 * radius + 1;
    double total = 1;
    for (int i = 0; i < n; ++i) total *= side;
    return total > 9e18 ? std::numeric_limits<long long>::max() : static_cast<long long>(total);
}

// Points with max norm exactly R, in lexicographic order; returns the first solution.
std::optional<std::vector<long>> search_shell(const Problem& p, long R)
{
    std::vector<long> x(p.n, -R);
    if (p.n == 0) return satisfies(p, x) ? std::optional(x) : std::nullopt;
    for (;;) {
        bool on_shell = false;
        for (long v : x)
            if (v == R || v == -R) on_shell = true;
        if (on_shell && satisfies(p, x)) return x;
        int i = p.n - 1;
        while (i >= 0 && x[i] == R) x[i--] = -R;
        if (i < 0) return std::nullopt;
        ++x[i];
    }
}

Verdict search(const CohomologyModel& m, int type_id, int bound)
{
    Problem p = build_problem(m, type_id);
    auto box = definite_radius(p);
    if (box && *box < 0) return make(VerdictStatus::No, "definite equation with target of the wrong sign");

    long limit = bound;
    bool complete = false;
    if (box && *box <= bound) {
        limit = box->get_si();
        complete = true;
    }
    bool truncated = false;
    while (limit > 0 && points_up_to(p.n, limit) > kSearchBudget) {
        --limit;
        truncated = true;
        complete = false;
    }

    for (long R = 0; R <= limit; ++R) {
        if (auto x = search_shell(p, R)) {
            Verdict v = make(VerdictStatus::Admits, "witness found", static_cast<int>(R));
            int r = m.r2;
            std::vector<Integer> e(x->begin(), x->begin() + r);
            v.witness.push_back(e);
            if (type_id != 4) v.witness.push_back(std::vector<Integer>(x->begin() + r, x->end()));
            return v;
        }
    }
    if (complete)
        return make(VerdictStatus::No, "definite form bounds every solution by radius " + std::to_string(limit),
                    static_cast<int>(limit));
    std::string why = "no witness with max norm <= " + std::to_string(limit);
    if (truncated) why += " (search budget cut the requested bound " + std::to_string(bound) + ")";
    return make(VerdictStatus::Unknown, why, static_cast<int>(limit));
}

bool p1_even(const CohomologyModel& m)
{
    for (auto& x : m.p1)
        if (x % 2 != 0) return false;
    return true;
}

}  // namespace

Verdict check_type(const CohomologyModel& m, int type_id, int bound)
{
    if (type_id < 1 || type_id > 8) throw Error("type must be in 1..8, got " + std::to_string(type_id));
    if (bound < 0) throw Error("bound must be nonnegative");

    if (type_id >= 5) {
        if (!m.orientable) return make(VerdictStatus::No, "not orientable");
        if (!m.spin) return make(VerdictStatus::No, "not spin");
        return make(VerdictStatus::Admits, "orientable and spin");
    }
    if (type_id == 3) {
        require(m.orientable, "type 3 needs an orientable manifold");
        return m.W3_zero ? make(VerdictStatus::Admits, "W3 vanishes") : make(VerdictStatus::No, "W3 is nonzero");
    }
    if (type_id == 4) {
        require(m.orientable, "type 4 needs an orientable manifold");
        if (!m.spin) return make(VerdictStatus::No, "not spin");
        if (!p1_even(m)) return make(VerdictStatus::No, "p1 is not divisible by 2");
        return search(m, 4, bound);
    }
    require(m.simply_connected, "type " + std::to_string(type_id) + " needs a simply connected manifold");
    if (type_id == 2) {
        if (!m.spin) return make(VerdictStatus::No, "not spin");
        if (!p1_even(m)) return make(VerdictStatus::No, "p1 is not divisible by 2");
        return search(m, 2, bound);
    }
    // Type 1.
    if (!m.spin && all_zero(m.w2))
        throw Error("type 1 needs w2 in the image of free H^2; a nonspin model with zero w2 has torsion w2");
    std::vector<Integer> w(m.w2.begin(), m.w2.end());
    auto ww = cup_eval(m, w, w);
    for (int k = 0; k < m.r4; ++k)
        if ((ww[k] - m.p1[k]) % 2 != 0)
            return make(VerdictStatus::No, "parity: e^2 + f^2 = w2^2 mod 2 differs from p1 mod 2");
    return search(m, 1, bound);
}

bool verify_witness(const CohomologyModel& m, int type_id, const std::vector<std::vector<Integer>>& witness)
{
    auto sum = [](std::vector<Integer> a, const std::vector<Integer>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    };
    for (auto& v : witness)
        if (static_cast<int>(v.size()) != m.r2) return false;
    if (type_id == 4) {
        if (witness.size() != 1) return false;
        auto ee = cup_eval(m, witness[0], witness[0]);
        for (int k = 0; k < m.r4; ++k)
            if (2 * ee[k] != m.p1[k]) return false;
        return true;
    }
    if (type_id == 1 || type_id == 2) {
        if (witness.size() != 2) return false;
        const auto &e = witness[0], &f = witness[1];
        auto lhs = sum(cup_eval(m, e, e), cup_eval(m, f, f));
        if (type_id == 2) lhs = sum(lhs, cup_eval(m, e, f));
        for (int k = 0; k < m.r4; ++k)
            if ((type_id == 2 ? 2 * lhs[k] : lhs[k]) != m.p1[k]) return false;
        if (type_id == 1)
            for (int a = 0; a < m.r2; ++a) {
                Integer s = e[a] + f[a];
                if (mpz_odd_p(s.get_mpz_t()) != (m.w2[a] != 0)) return false;
            }
        return true;
    }
    return witness.empty();
}

Json to_json(const Verdict& v)
{
    Json w = Json::array();
    for (auto& vec : v.witness) {
        Json a = Json::array();
        for (auto& x : vec) a.push_back(x.get_si());
        w.push_back(a);
    }
    return Json{{"status", to_string(v.status)}, {"witness", w}, {"bound_used", v.bound_used}, {"reason", v.reason}};
}

}  // namespace msf7
