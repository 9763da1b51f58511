#include "msf7/cli.hpp"

#include "msf7/error.hpp"
#include "msf7/forms7.hpp"
#include "msf7/json_io.hpp"
#include "msf7/stabilizers.hpp"
#include "msf7/topology.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace msf7::cli {

namespace {

std::string read_input(const std::string& path)
{
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    ss << in.rdbuf();
    return ss.str();
}

int fuzz_iters()
{
    const char* v = std::getenv("MSF7_FUZZ_ITERS");
    if (!v || !*v) return 100;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end || n < 1 || n > 1000000) throw Error(std::string("MSF7_FUZZ_ITERS must be a positive integer, got ") + v);
    return static_cast<int>(n);
}

void print_map(std::ostream& out, const LinearMap& g)
{
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) out << (j ? " " : "  ") << to_string(g(i, j));
        out << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact classification tools for 3-forms on R^7", "msf7"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable JSON output");

    int orbit = 0;
    std::string variant = "standard";
    auto* canon = app.add_subcommand("canon", "Print a canonical orbit representative as KForm JSON");
    canon->add_option("orbit", orbit, "Orbit id 1..8")->required();
    canon->add_option("--variant", variant, "standard or prime");

    std::string file;
    auto* cls = app.add_subcommand("classify", "Classify a 3-form given as KForm JSON ('-' reads stdin)");
    cls->add_option("file", file)->required();
    auto* inv = app.add_subcommand("invariants", "Print the invariant vector of a 3-form");
    inv->add_option("file", file)->required();

    std::uint64_t seed = 0;
    auto* smp = app.add_subcommand("sample", "Pull a canonical form back by a seeded random GL(7) matrix");
    smp->add_option("--orbit", orbit, "Orbit id 1..8")->required();
    smp->add_option("--seed", seed, "64-bit unsigned seed")->required();

    app.add_subcommand("verify-paper", "Run the transformation catalog, identities and embedding checks");

    int type_id = 0, bound = kDefaultBound;
    auto* topo = app.add_subcommand("topo-check", "Decide the existence criterion of a form type on a model");
    topo->add_option("model", file, "Cohomology model JSON")->required();
    topo->add_option("--type", type_id, "Form type 1..8")->required();
    topo->add_option("--bound", bound, "Search radius (max norm)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (canon->parsed()) {
            out << to_json(canonical(orbit, parse_variant(variant)).form).dump() << '\n';
            return kOk;
        }
        if (cls->parsed()) {
            Classification c = classify(parse_kform(read_input(file)));
            bool ok = c.kind == Classification::Kind::Orbit;
            if (json) {
                Json j{{"result", c.str()}};
                j["orbit_id"] = ok ? Json(c.orbit_id) : Json(nullptr);
                out << j.dump() << '\n';
            } else {
                out << c.str() << '\n';
            }
            return ok ? kOk : kNegative;
        }
        if (inv->parsed()) {
            out << to_json(invariant_vector(parse_kform(read_input(file)))).dump() << '\n';
            return kOk;
        }
        if (smp->parsed()) {
            OrbitSample s = sample_orbit(orbit, seed);
            if (json) {
                out << Json{{"orbit", orbit}, {"seed", seed}, {"form", to_json(s.form)}, {"map", to_json(s.map)}}.dump()
                    << '\n';
            } else {
                out << "form: " << s.form.str() << '\n' << "map (columns are images of e1..e7):\n";
                print_map(out, s.map);
            }
            return kOk;
        }
        if (app.got_subcommand("verify-paper")) {
            auto report = verify_all(fuzz_iters());
            bool ok = std::all_of(report.begin(), report.end(), [](const CheckResult& c) { return c.pass; });
            out << (json ? to_json(report).dump(2) + "\n" : to_text(report));
            return ok ? kOk : kNegative;
        }
        if (topo->parsed()) {
            Verdict v = check_type(parse_model(read_input(file)), type_id, bound);
            if (json) {
                out << to_json(v).dump() << '\n';
            } else {
                out << to_string(v.status) << " (" << v.reason << "; bound used " << v.bound_used << ")\n";
                const char* names[] = {"e", "f"};
                for (std::size_t i = 0; i < v.witness.size(); ++i) {
                    out << "  " << names[i] << " =";
                    for (auto& x : v.witness[i]) out << ' ' << x.get_str();
                    out << '\n';
                }
            }
            if (v.status == VerdictStatus::Admits) return kOk;
            return v.status == VerdictStatus::No ? kNegative : kUndecided;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kUsageError;
}

}  // namespace msf7::cli
