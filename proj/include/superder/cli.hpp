#ifndef SUPERDER_CLI_HPP
#define SUPERDER_CLI_HPP

#include "superder/fuzz.hpp"
#include "superder/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace superder::cli {

// exit code contract (stable): 0 pass, 1 assertion failure,
// 2 input/parse error, 3 theorem inapplicable
inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_inapplicable = 3;

struct FamilySpec {
    std::string kind;
    std::vector<std::size_t> params;
};

struct Input {
    std::string display;
    std::optional<std::string> path;
    std::optional<FamilySpec> family;
};

inline FamilySpec parse_family_spec(const std::string& spec)
{
    const auto colon = spec.find(':');
    FamilySpec fam;
    fam.kind = spec.substr(0, colon);
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                    throw std::invalid_argument(item);
                fam.params.push_back(std::stoul(item));
            } catch (const std::exception&) {
                throw ParseError("invalid family spec \"" + spec + "\": bad parameter \"" + item + "\"");
            }
        }
    }
    const std::size_t want = fam.kind == "filiform" ? 2 : fam.kind == "abelian" ? 2 : fam.kind == "heisenberg" ? 4 : 0;
    if (want == 0)
        throw ParseError("invalid family spec \"" + spec + "\": expected filiform:n,m | heisenberg:m,n,m1,n1 | abelian:p,q");
    if (fam.params.size() != want)
        throw ParseError("invalid family spec \"" + spec + "\": " + fam.kind + " takes " + std::to_string(want) +
                         " parameters");
    return fam;
}

inline LieSuperalgebra build_family(const FamilySpec& fam)
{
    if (fam.kind == "filiform")
        return model_filiform(fam.params[0], fam.params[1]);
    if (fam.kind == "abelian")
        return abelian(fam.params[0], fam.params[1]);
    auto h = make_heisenberg(fam.params[0], fam.params[1], fam.params[2], fam.params[3]);
    if (!h)
        throw ParseError("heisenberg family with sdim H = (" + std::to_string(fam.params[0]) + ", " +
                         std::to_string(fam.params[1]) + ") and sdim Z = (" + std::to_string(fam.params[2]) + ", " +
                         std::to_string(fam.params[3]) + ") is not realizable");
    return *h;
}

inline LieSuperalgebra load_input(const Input& in)
{
    if (in.family)
        return build_family(*in.family);
    std::ifstream f(*in.path);
    if (!f)
        throw ParseError("cannot read file " + *in.path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_algebra_document(buf.str());
}

struct Outcome {
    int code = exit_pass;
    std::string text;
    Json machine;
};

inline int combine_codes(const std::vector<Outcome>& outcomes)
{
    bool any_input = false, any_fail = false, any_inapplicable = false;
    for (const auto& o : outcomes) {
        any_input |= o.code == exit_input;
        any_fail |= o.code == exit_fail;
        any_inapplicable |= o.code == exit_inapplicable;
    }
    if (any_input)
        return exit_input;
    if (any_fail)
        return exit_fail;
    if (any_inapplicable)
        return exit_inapplicable;
    return exit_pass;
}

inline Outcome validate_one(const Input& in)
{
    Outcome out;
    out.machine["input"] = in.display;
    try {
        const LieSuperalgebra L = load_input(in);
        const ValidationReport v = validate(L);
        out.machine["sdim"] = json_sdim(L.sdim());
        out.machine["valid"] = v.ok();
        out.machine["violations"] = json_validation(v);
        std::ostringstream os;
        os << in.display << ": " << (v.ok() ? "valid Lie superalgebra" : "INVALID") << ", sdim " << L.sdim() << "\n";
        for (const auto& viol : v.violations)
            os << "  " << viol.kind << " violation: " << viol.detail << "\n";
        out.text = os.str();
        out.code = v.ok() ? exit_pass : exit_fail;
    } catch (const ParseError& e) {
        out.code = exit_input;
        out.text = in.display + ": error: " + e.what() + "\n";
        out.machine["error"] = e.what();
    }
    return out;
}

inline Outcome invariants_one(const Input& in)
{
    Outcome out;
    out.machine["input"] = in.display;
    try {
        const LieSuperalgebra L = load_input(in);
        const Json rep = algebra_report(L);
        out.machine["report"] = rep;
        std::ostringstream os;
        os << "== " << in.display << " ==\n";
        render_report(os, rep);
        out.text = os.str();
        out.code = rep["algebra"]["valid"].get<bool>() ? exit_pass : exit_input;
    } catch (const ParseError& e) {
        out.code = exit_input;
        out.text = in.display + ": error: " + e.what() + "\n";
        out.machine["error"] = e.what();
    }
    return out;
}

inline Outcome verify_one(const Input& in, const std::string& theorem)
{
    Outcome out;
    out.machine["input"] = in.display;
    out.machine["theorem"] = theorem;
    std::ostringstream os;
    try {
        const LieSuperalgebra L = load_input(in);
        const ValidationReport v = validate(L);
        if (!v.ok())
            throw ParseError("input is not a valid Lie superalgebra (" + v.violations.front().detail + ")");

        bool pass = false;
        Json details;
        if (theorem == "bound") {
            const BoundReport b = check_upper_bound(L);
            pass = b.holds;
            details = json_bound(b);
        } else if (theorem == "chain") {
            const ChainReport c = chain_check(L);
            pass = c.ok();
            details = json_chain(c);
        } else if (theorem == "heisenberg") {
            const HeisenbergIdstarReport r = verify_heisenberg_idstar(L);
            pass = r.pass();
            details = json_heisenberg_report(r);
        } else if (theorem == "class2") {
            const Class2IdstarReport r = verify_class2_idstar(L);
            pass = r.pass();
            details = json_class2_report(r);
        } else if (theorem == "filiform") {
            if (!in.family || in.family->kind != "filiform")
                throw InapplicableError("the filiform theorem verifier takes --family filiform:n,m");
            const FiliformIdstarReport r = verify_filiform_idstar(in.family->params[0], in.family->params[1]);
            pass = r.pass();
            details = json_filiform_report(r);
        } else {
            throw ParseError("unknown theorem \"" + theorem + "\"");
        }
        out.machine["applicable"] = true;
        out.machine["pass"] = pass;
        out.machine["details"] = details;
        os << in.display << " [" << theorem << "]: " << (pass ? "pass" : "FAIL") << " " << details.dump() << "\n";
        out.code = pass ? exit_pass : exit_fail;
    } catch (const InapplicableError& e) {
        out.code = exit_inapplicable;
        out.machine["applicable"] = false;
        out.machine["reason"] = e.what();
        os << in.display << " [" << theorem << "]: inapplicable: " << e.what() << "\n";
    } catch (const ParseError& e) {
        out.code = exit_input;
        out.machine["error"] = e.what();
        os << in.display << ": error: " << e.what() << "\n";
    }
    out.text = os.str();
    return out;
}

inline Outcome fuzz_run(std::size_t count, std::size_t max_dim, std::uint64_t seed)
{
    Outcome out;
    Rng rng(seed);
    std::size_t tight = 0, not_tight = 0;
    std::vector<std::size_t> failures;
    for (std::size_t i = 0; i < count; ++i) {
        const LieSuperalgebra L = random_class2(rng, max_dim);
        const bool valid = validate(L).ok();
        const ChainReport chain = chain_check(L);
        const BoundReport bound = check_upper_bound(L);
        if (!valid || !chain.ok() || !bound.holds) {
            failures.push_back(i);
            continue;
        }
        (bound.tight ? tight : not_tight)++;
    }
    out.code = failures.empty() ? exit_pass : exit_fail;
    out.machine = Json{{"count", count},   {"max_dim", max_dim},     {"seed", seed},
                       {"tight", tight},   {"not_tight", not_tight}, {"failures", failures},
                       {"pass", failures.empty()}};
    std::ostringstream os;
    os << "fuzz: " << count << " random class-2 central extensions, total dim <= " << max_dim << ", seed " << seed
       << "\n";
    os << "validate + chain + upper bound: " << (failures.empty() ? "all pass" : "FAILURES") << "\n";
    os << "bound tight on " << tight << ", strict on " << not_tight << "\n";
    for (auto i : failures)
        os << "  sample " << i << " FAILED\n";
    out.text = os.str();
    return out;
}

/// Runs the outcomes for several inputs concurrently but prints them in
/// input order, so output is deterministic regardless of scheduling.
template <typename Fn>
inline std::vector<Outcome> run_over_inputs(const std::vector<Input>& inputs, Fn&& fn)
{
    std::vector<std::future<Outcome>> futs;
    futs.reserve(inputs.size());
    for (const auto& in : inputs)
        futs.push_back(std::async(inputs.size() > 1 ? std::launch::async : std::launch::deferred,
                                  [&fn, &in] { return fn(in); }));
    std::vector<Outcome> outs;
    outs.reserve(futs.size());
    for (auto& f : futs)
        outs.push_back(f.get());
    return outs;
}

inline void write_json(const std::string& path, const Json& j, std::ostream& out)
{
    if (path == "-") {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw ParseError("cannot write " + path);
    f << j.dump(2) << "\n";
}

inline Json machine_of(const std::vector<Outcome>& outs)
{
    if (outs.size() == 1)
        return outs.front().machine;
    Json arr = Json::array();
    for (const auto& o : outs)
        arr.push_back(o.machine);
    return arr;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"superder: superderivation superalgebras ID*/ID/Der/ad of Lie superalgebras over exact rationals"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string family_spec, theorem, json_path;

    auto* cmd_validate = app.add_subcommand("validate", "check the Lie superalgebra axioms of algebra documents");
    cmd_validate->add_option("files", files, "algebra document files")->required();

    auto* cmd_invariants =
        app.add_subcommand("invariants", "compute L^2, Z(L), central series, Der/ID/ID*/ad and the lambda bound");
    cmd_invariants->add_option("files", files, "algebra document files");
    cmd_invariants->add_option("--family", family_spec, "filiform:n,m | heisenberg:m,n,m1,n1 | abelian:p,q");
    cmd_invariants->add_option("--json", json_path, "write the machine-readable report to this path ('-' = stdout)");

    auto* cmd_verify = app.add_subcommand("verify", "verify a theorem on the input algebra");
    cmd_verify->add_option("files", files, "algebra document files");
    cmd_verify->add_option("--family", family_spec, "filiform:n,m | heisenberg:m,n,m1,n1 | abelian:p,q");
    cmd_verify->add_option("--theorem", theorem, "bound | heisenberg | class2 | filiform | chain")->required();
    cmd_verify->add_option("--json", json_path, "write the machine-readable report to this path ('-' = stdout)");

    std::size_t fuzz_count = 100, fuzz_max_dim = 10;
    std::uint64_t fuzz_seed = 0;
    auto* cmd_fuzz = app.add_subcommand("fuzz", "validate + chain + upper bound on random class-2 central extensions");
    cmd_fuzz->add_option("--count", fuzz_count, "number of samples");
    cmd_fuzz->add_option("--max-dim", fuzz_max_dim, "maximum total dimension");
    cmd_fuzz->add_option("--seed", fuzz_seed, "RNG seed (sole source of randomness)");
    cmd_fuzz->add_option("--json", json_path, "write the machine-readable summary to this path ('-' = stdout)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? exit_pass : exit_input;
    }

    try {
        std::vector<Input> inputs;
        for (const auto& f : files)
            inputs.push_back({f, f, std::nullopt});
        if (!family_spec.empty())
            inputs.push_back({family_spec, std::nullopt, parse_family_spec(family_spec)});

        std::vector<Outcome> outcomes;
        if (app.got_subcommand(cmd_validate)) {
            outcomes = run_over_inputs(inputs, validate_one);
        } else if (app.got_subcommand(cmd_invariants)) {
            if (inputs.empty())
                throw ParseError("invariants needs an input file or --family");
            outcomes = run_over_inputs(inputs, invariants_one);
        } else if (app.got_subcommand(cmd_verify)) {
            if (inputs.empty())
                throw ParseError("verify needs an input file or --family");
            outcomes = run_over_inputs(inputs, [&](const Input& in) { return verify_one(in, theorem); });
        } else {
            outcomes.push_back(fuzz_run(fuzz_count, fuzz_max_dim, fuzz_seed));
        }

        for (const auto& o : outcomes)
            out << o.text;
        if (!json_path.empty())
            write_json(json_path, machine_of(outcomes), out);
        return combine_codes(outcomes);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
}

}  // namespace superder::cli

#endif
