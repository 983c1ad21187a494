// abstorus: exact algebra of torsion-translated subtori and cohomology jump
// loci, batch front end.  All structured I/O is canonical JSON; identical
// inputs and flags produce byte-identical outputs.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "abstorus/errors.hpp"
#include "abstorus/fox.hpp"
#include "abstorus/json_io.hpp"
#include "abstorus/version.hpp"
#include "sha256.hpp"

namespace {

using namespace abstorus;
using io::json;

// Exit-code contract.
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitRank = 3;
constexpr int kExitIrrational = 4;
constexpr int kExitBudget = 5;

struct VerifyFailure {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Provenance {
    json inputs = json::object();
    json flags = json::object();

    json read_json(const std::string& path) {
        std::string text = read_file(path);
        inputs[path] = "sha256:" + tool::Sha256::of(text);
        return io::parse_text(text);
    }
    std::string read_text(const std::string& path) {
        std::string text = read_file(path);
        inputs[path] = "sha256:" + tool::Sha256::of(text);
        return text;
    }
    json block(const std::string& command) const {
        return json{{"tool", "abstorus"},
                    {"version", kVersion},
                    {"command", command},
                    {"inputs", inputs},
                    {"flags", flags}};
    }
};

void emit(const json& provenance, const json& result, const std::string& out_path) {
    std::string text = io::dump_canonical(json{{"provenance", provenance}, {"result", result}});
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    // no partial files on error: write aside, then rename into place
    std::filesystem::path target(out_path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write output file '" + out_path + "'");
        out << text;
    }
    std::filesystem::rename(tmp, target);
}

unsigned long long grid_ceiling_default() {
    if (const char* env = std::getenv("ABSTORUS_GRID_CEILING")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError("ABSTORUS_GRID_CEILING is not a number: '" + std::string(env) + "'");
        }
    }
    return kDefaultGridCeiling;
}

// ---- set subcommand -------------------------------------------------------

void oracle_recheck(const std::string& op, const AbsoluteSet& a, const AbsoluteSet* b,
                    const AbsoluteSet& result, long long level) {
    auto ra = grid_bitmap(a, level);
    auto rr = grid_bitmap(result, level);
    std::vector<char> rb;
    if (b) rb = grid_bitmap(*b, level);
    for (size_t i = 0; i < rr.size(); ++i) {
        bool expect;
        if (op == "union")
            expect = ra[i] || rb[i];
        else if (op == "intersect")
            expect = ra[i] && rb[i];
        else if (op == "difference")
            expect = ra[i] && !rb[i];
        else if (op == "complement")
            expect = !ra[i];
        else if (op == "closure")
            expect = rr[i] || ra[i];  // closure contains the input
        else
            return;
        if (static_cast<bool>(rr[i]) != expect)
            throw VerifyFailure{"oracle mismatch for '" + op + "' at grid index " +
                                std::to_string(i) + " (level " + std::to_string(level) + ")"};
    }
    if (op == "closure")
        for (size_t i = 0; i < rr.size(); ++i)
            if (ra[i] && !rr[i])
                throw VerifyFailure{"oracle: closure does not contain the input set"};
}

int run_set(const std::string& op, const std::string& path_a, const std::string& path_b,
            const std::string& out, long long oracle_level) {
    Provenance prov;
    prov.flags["op"] = op;
    if (oracle_level > 0) prov.flags["oracle_level"] = oracle_level;
    AbsoluteSet a = io::set_from_json(prov.read_json(path_a));
    bool binary = (op == "union" || op == "intersect" || op == "difference" || op == "equal");
    std::optional<AbsoluteSet> b;
    if (binary) {
        if (path_b.empty()) throw ParseError("operation '" + op + "' needs a second set file");
        b = io::set_from_json(prov.read_json(path_b));
    } else if (!path_b.empty()) {
        throw ParseError("operation '" + op + "' takes a single set file");
    }

    if (op == "equal") {
        bool eq = is_equal(a, *b);
        std::cout << (eq ? "true" : "false") << "\n";
        return eq ? 0 : kExitVerifyFail;
    }

    AbsoluteSet result = AbsoluteSet::empty(a.ambient_rank());
    json result_json;
    if (op == "union")
        result = set_union(a, *b);
    else if (op == "intersect")
        result = set_intersect(a, *b);
    else if (op == "difference")
        result = set_difference(a, *b);
    else if (op == "complement")
        result = set_complement(a);
    else if (op == "closure")
        result = closure(a);
    else if (op == "components") {
        json comps = json::array();
        for (const auto& c : irreducible_components(a, false))
            comps.push_back(io::coset_to_json(c, true));
        result_json = json{{"components", comps}};
    } else {
        throw ParseError("unknown set operation '" + op + "'");
    }

    if (result_json.is_null()) {
        if (oracle_level > 0) oracle_recheck(op, a, b ? &*b : nullptr, result, oracle_level);
        result_json = io::to_json(result);
    }
    emit(prov.block("set"), result_json, out);
    return 0;
}

// ---- galois subcommand ----------------------------------------------------

int run_galois(const std::string& mode, const std::string& path, long long level,
               const std::string& out) {
    Provenance prov;
    prov.flags["mode"] = mode;
    prov.flags["level"] = level;
    AbsoluteSet s = io::set_from_json(prov.read_json(path));
    if (mode == "check") {
        auto moved = galois_moving_unit(s, Int(level));
        if (moved) {
            std::cout << "moved by u=" << *moved << "\n";
            return kExitVerifyFail;
        }
        std::cout << "invariant\n";
        return 0;
    }
    // orbit: one output per unit
    json orbit = json::array();
    for (Int u = 1; u < level; ++u) {
        if (gcd(u, Int(level)) != 1) continue;
        AbsoluteSet img = galois_apply(GaloisElement(Int(level), u), s);
        json entry{{"unit", static_cast<long long>(u)}, {"set", io::to_json(img)}};
        if (!out.empty()) {
            emit(prov.block("galois"), entry, out + "_u" + u.str() + ".json");
        } else {
            orbit.push_back(entry);
        }
    }
    if (out.empty()) emit(prov.block("galois"), json{{"orbit", orbit}}, "");
    return 0;
}

// ---- exp subcommand -------------------------------------------------------

int run_exp(const std::string& mode, const std::string& path, const std::string& out,
            bool round_trip) {
    Provenance prov;
    prov.flags["mode"] = mode;
    if (round_trip) prov.flags["round_trip"] = true;
    json result;
    if (mode == "to-dr") {
        TorsionCoset c = io::coset_from_json(prov.read_json(path));
        RationalAffineSubspace v = dr_of_betti(c);
        if (round_trip && !(betti_of_dr(v) == c))
            throw VerifyFailure{"round trip through the de Rham side did not return the coset"};
        result = io::to_json(v);
    } else if (mode == "to-betti") {
        RationalAffineSubspace v = io::subspace_from_json(prov.read_json(path));
        TorsionCoset c = betti_of_dr(v);
        if (round_trip && !(dr_of_betti(c) == v))
            throw VerifyFailure{"round trip through the Betti side did not return the subspace"};
        result = io::coset_to_json(c, true);
    } else {
        throw ParseError("unknown exp mode '" + mode + "' (expected to-dr or to-betti)");
    }
    emit(prov.block("exp"), result, out);
    return 0;
}

// ---- fox subcommand -------------------------------------------------------

json fox_summary(const FoxComplex& fx) {
    json torsion = json::array();
    for (long long d : fx.torsion()) torsion.push_back(d);
    return json{{"free_rank", fx.free_rank()},
                {"torsion", torsion},
                {"component_count", fx.component_count()}};
}

int run_fox(const std::string& path, const std::string& out, long long component) {
    Provenance prov;
    prov.flags["component"] = component;
    GroupPresentation pres = GroupPresentation::parse(prov.read_text(path));
    FoxComplex fx = fox_complex(pres);
    LaurentChainComplex comp = fx.component_by_index(component);
    if (!comp.has_rational_coefficients())
        throw LevelError(
            "component " + std::to_string(component) +
            " twists by an irrational root of unity and cannot be written to the integer "
            "complex format; run jumploci --component on the presentation instead");
    json result = fox_summary(fx);
    result["component"] = component;
    result["complex"] = io::to_json(comp);
    emit(prov.block("fox"), result, out);
    return 0;
}

// ---- jumploci subcommand --------------------------------------------------

int run_jumploci(const std::string& path, long i, long long k, long long level,
                 long long component, const std::string& verify_path, bool symmetry, bool galois,
                 unsigned long long ceiling, const std::string& out) {
    Provenance prov;
    prov.flags["i"] = i;
    prov.flags["k"] = k;
    prov.flags["level"] = level;
    prov.flags["component"] = component;
    prov.flags["grid_ceiling"] = ceiling;
    if (symmetry) prov.flags["symmetry"] = true;
    if (galois) prov.flags["galois"] = true;

    std::optional<LaurentChainComplex> complex;
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        complex = io::complex_from_json(prov.read_json(path));
        if (component != 0)
            throw ParseError("--component applies to presentation inputs only");
    } else {
        FoxComplex fx = fox_complex(GroupPresentation::parse(prov.read_text(path)));
        complex = fx.component_by_index(component);
    }

    JumpLocusReport report = jump_locus_reconstruct(*complex, i, k, level, ceiling);
    json result = io::to_json(report);

    if (symmetry) {
        Verdict v = symmetry_check(*complex, i, k, level, ceiling);
        result["symmetry"] = json{{"pass", v.pass}, {"detail", v.detail}};
    }
    if (galois) {
        Int glevel = report.locus.torsion_level();
        auto moved = galois_moving_unit(report.locus, glevel);
        result["galois"] = json{{"level", static_cast<long long>(glevel)},
                                {"invariant", !moved.has_value()}};
        if (moved) result["galois"]["moving_unit"] = static_cast<long long>(*moved);
    }

    bool verify_failed = false;
    if (!verify_path.empty()) {
        AbsoluteSet claimed = io::set_from_json(prov.read_json(verify_path));
        Verdict v = verify_absolute(*complex, i, k, claimed, level, ceiling);
        json vj{{"pass", v.pass}, {"detail", v.detail}};
        if (v.witness_point) vj["witness_point"] = io::to_json(*v.witness_point);
        if (v.witness_coset) vj["witness_coset"] = io::coset_to_json(*v.witness_coset, true);
        result["verify"] = vj;
        verify_failed = !v.pass;
    }

    emit(prov.block("jumploci"), result, out);
    return verify_failed ? kExitVerifyFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact torsion-coset algebra and cohomology jump loci"};
    app.require_subcommand(1);
    app.set_version_flag("--version", abstorus::kVersion);

    std::string in_a, in_b, out, mode, verify_path;
    long i_deg = 0;
    long long k_val = 0, level = 0, component = 0, oracle_level = 0, parallel = 1;
    unsigned long long ceiling = 0;

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf_cmd->add_option("matrix", in_a, "matrix JSON file")->required();
    snf_cmd->add_option("-o,--output", out, "output file (default: stdout)");

    auto* hnf_cmd = app.add_subcommand("hnf", "canonical row Hermite normal form");
    hnf_cmd->add_option("matrix", in_a, "matrix JSON file")->required();
    hnf_cmd->add_option("-o,--output", out, "output file (default: stdout)");

    auto* set_cmd = app.add_subcommand("set", "boolean algebra of absolute sets");
    set_cmd->add_option("op", mode,
                        "union|intersect|complement|difference|closure|components|equal")
        ->required();
    set_cmd->add_option("a", in_a, "first set file")->required();
    set_cmd->add_option("b", in_b, "second set file (binary operations)");
    set_cmd->add_option("-o,--output", out, "output file (default: stdout)");
    set_cmd->add_option("--oracle-level", oracle_level,
                        "re-verify the result pointwise on this grid level");

    auto* gal_cmd = app.add_subcommand("galois", "Galois orbit / invariance of a set");
    gal_cmd->add_option("mode", mode, "orbit|check")->required();
    gal_cmd->add_option("set", in_a, "set JSON file")->required();
    gal_cmd->add_option("--level", level, "cyclotomic level N")->required();
    gal_cmd->add_option("-o,--output", out, "orbit file prefix / output file");

    auto* exp_cmd = app.add_subcommand("exp", "de Rham / Betti bridge");
    exp_cmd->add_option("mode", mode, "to-dr|to-betti")->required();
    exp_cmd->add_option("file", in_a, "coset or subspace JSON file")->required();
    exp_cmd->add_option("-o,--output", out, "output file (default: stdout)");
    bool round_trip = false;
    exp_cmd->add_flag("--round-trip", round_trip, "verify the inverse map returns the input");

    auto* fox_cmd = app.add_subcommand("fox", "presentation to chain complex");
    fox_cmd->add_option("presentation", in_a, "presentation text file")->required();
    fox_cmd->add_option("-o,--output", out, "output file (default: stdout)");
    fox_cmd->add_option("--component", component, "character-variety component index (default 0)");

    auto* jl_cmd = app.add_subcommand("jumploci", "reconstruct and certify a jump locus");
    jl_cmd->add_option("input", in_a, "complex JSON file or presentation text file")->required();
    jl_cmd->add_option("--i", i_deg, "cohomological degree")->required();
    jl_cmd->add_option("--k", k_val, "dimension threshold")->required();
    jl_cmd->add_option("--level", level, "search level N (grid of points of order dividing N)")
        ->required();
    jl_cmd->add_option("--component", component, "character-variety component (presentations)");
    jl_cmd->add_option("--verify", verify_path, "claimed locus to check instead of trusting");
    bool symmetry = false, galois_flag = false;
    jl_cmd->add_flag("--symmetry", symmetry, "add an inversion-symmetry verdict");
    jl_cmd->add_flag("--galois", galois_flag, "add a Galois-invariance verdict");
    jl_cmd->add_option("--grid-ceiling", ceiling,
                       "maximum grid size (default 10^6 or ABSTORUS_GRID_CEILING)");
    jl_cmd->add_option("--parallel", parallel,
                       "worker count; results are independent of this value");
    jl_cmd->add_option("-o,--output", out, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (snf_cmd->parsed() || hnf_cmd->parsed()) {
            Provenance prov;
            IntMatrix m = io::matrix_from_json(prov.read_json(in_a));
            if (snf_cmd->parsed()) {
                emit(prov.block("snf"), io::to_json(abstorus::snf(m)), out);
            } else {
                emit(prov.block("hnf"), io::to_json(abstorus::hnf(m)), out);
            }
            return 0;
        }
        if (set_cmd->parsed()) return run_set(mode, in_a, in_b, out, oracle_level);
        if (gal_cmd->parsed()) return run_galois(mode, in_a, level, out);
        if (exp_cmd->parsed()) return run_exp(mode, in_a, out, round_trip);
        if (fox_cmd->parsed()) return run_fox(in_a, out, component);
        if (jl_cmd->parsed()) {
            unsigned long long cl = ceiling > 0 ? ceiling : grid_ceiling_default();
            return run_jumploci(in_a, i_deg, k_val, level, component, verify_path, symmetry,
                                galois_flag, cl, out);
        }
    } catch (const VerifyFailure& e) {
        std::cerr << "abstorus: verification failed: " << e.message << "\n";
        return kExitVerifyFail;
    } catch (const abstorus::ParseError& e) {
        std::cerr << "abstorus: parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const abstorus::IrrationalDirectionError& e) {
        std::cerr << "abstorus: " << e.what() << "\n";
        return kExitIrrational;
    } catch (const abstorus::BudgetExceededError& e) {
        std::cerr << "abstorus: budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const abstorus::RankMismatchError& e) {
        std::cerr << "abstorus: " << e.what() << "\n";
        return kExitRank;
    } catch (const abstorus::LevelError& e) {
        std::cerr << "abstorus: " << e.what() << "\n";
        return kExitRank;
    } catch (const std::exception& e) {
        std::cerr << "abstorus: error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
