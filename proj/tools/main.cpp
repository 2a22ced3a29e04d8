#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tautilt/suite.hpp"

using namespace tautilt;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kGuard = 3 };

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string algebra;
    std::size_t dim_bound = 6;
    std::size_t cap = 2;
    double guard = 1e7;
    std::uint64_t seed = 7;
    std::string out;
};

struct Context {
    explicit Context(const Config& c) : cfg(c) {
        if (cfg.dim_bound == 0 || cfg.cap == 0 || cfg.guard <= 0) throw InputError("bounds must be positive");
        try {
            algebra = load_algebra(cfg.algebra);
        } catch (const ParseError& e) {
            throw InputError(std::string("cannot load algebra: ") + e.what());
        }
        mods = make_universe(algebra, options());
    }
    Config cfg;
    AlgebraPtr algebra;
    ModUniverse mods;

    [[nodiscard]] EnumerationOptions options() const { return {cfg.dim_bound, cfg.guard}; }
    [[nodiscard]] KUniverse universe() const {
        KUniverse u = two_term_universe(algebra, mods.indecs, cfg.cap);
        u.rng_seed = cfg.seed;
        return u;
    }
    [[nodiscard]] ProjComplex regular() const {
        return stalk(algebra, ProjSum{std::vector<std::size_t>(algebra->vertex_count(), 1)});
    }
};

// "[1,1,0]" means "[1,1,0]#0".
std::size_t module_index(const ModUniverse& u, const std::string& name) {
    const std::string full = name.find('#') == std::string::npos ? name + "#0" : name;
    for (std::size_t i = 0; i < u.names.size(); ++i)
        if (u.names[i] == full) return i;
    throw InputError("unknown module " + name + " (see the indecs command)");
}

// Lists are separated by '+'; an empty string or "0" is the zero subcategory.
Subcat module_list(const ModUniverse& u, const std::string& text) {
    std::vector<std::size_t> idx;
    if (text.empty() || text == "0") return explicit_subcat(idx);
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, '+');) idx.push_back(module_index(u, item));
    return explicit_subcat(idx);
}

template <class T>
const T& pick(const std::vector<T>& list, const std::string& key, const char* what) {
    for (const auto& x : list)
        if (x.name == key) return x;
    if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
        const std::size_t i = std::stoul(key);
        if (i < list.size()) return list[i];
    }
    throw InputError(std::string("unknown ") + what + " " + key + " (give a listed name or index)");
}

ProjComplex pick_silting(const Context& ctx, const std::string& key, std::string& name) {
    name = key;
    if (key == "A") return ctx.regular();
    if (key == "A[1]") return shift(ctx.regular(), 1);
    const auto list = enumerate_two_term_silting(ctx.algebra, ctx.mods.indecs);
    const auto& s = pick(list, key, "silting complex");
    name = s.name;
    return s.complex;
}

json names_of(const std::vector<KObject>& list) {
    json out = json::array();
    for (const auto& o : list) out.push_back(o.name);
    return out;
}

json checks_json(const std::vector<Check>& checks) {
    json out = json::array();
    for (const auto& c : checks) {
        json row{{"name", c.name}, {"pass", c.pass}};
        if (!c.witness.empty()) row["witness"] = c.witness;
        out.push_back(row);
    }
    return out;
}

struct Result {
    std::string text;
    std::string file;
    int code = kPass;
};

Result as_json(const json& doc, const std::string& command, int code = kPass) {
    return {doc.dump(2) + "\n", command + ".json", code};
}

Result cmd_indecs(const Context& ctx) {
    json rows = json::array();
    for (std::size_t i = 0; i < ctx.mods.indecs.size(); ++i)
        rows.push_back({{"name", ctx.mods.names[i]}, {"module", module_to_json(ctx.mods.indecs[i])}});
    return as_json({{"count", rows.size()}, {"indecomposables", rows}}, "indecs");
}

Result cmd_tau(const Context& ctx, const std::string& m) {
    const auto i = module_index(ctx.mods, m);
    const ModuleRep t = tau(ctx.mods.indecs[i]);
    json doc{{"module", ctx.mods.names[i]}, {"tauDims", dim_vector_string(t.dims())}};
    if (t.is_zero()) {
        doc["tau"] = "0";
    } else if (auto j = find_isomorphic(ctx.mods.indecs, t)) {
        doc["tau"] = ctx.mods.names[*j];
    } else {
        doc["tau"] = json(nullptr);
        doc["tauModule"] = module_to_json(t);
    }
    return as_json(doc, "tau");
}

Result cmd_stt(const Context& ctx) {
    json rows = json::array();
    for (const auto& s : enumerate_support_tau_tilting(ctx.mods)) {
        json mods = json::array();
        for (auto i : s.modules) mods.push_back(ctx.mods.names[i]);
        rows.push_back({{"name", s.name}, {"modules", mods}, {"genT", subcat_name(ctx.mods, gen_of(ctx.mods, {s.module}))}});
    }
    return as_json({{"count", rows.size()}, {"supportTauTilting", rows}}, "stt");
}

Result cmd_triple(const Context& ctx, const std::string& key) {
    const auto list = enumerate_support_tau_tilting(ctx.mods);
    const auto& s = pick(list, key, "support tau-tilting module");
    const Triple tr = triple(ctx.mods, s);
    const TripleInverse inv = triple_inverse(ctx.mods, tr);
    json doc = triple_to_json(ctx.mods, tr, inv);
    const bool round = inv.c_cap_t.members == s.modules;
    doc["T"] = s.name;
    doc["checks"] = checks_json({{"lw-cotorsion", inv.lw_ok, ""},
                                 {"torsion pair", inv.torsion_ok, ""},
                                 {"inverse recovers T", round, ""}});
    return as_json(doc, "triple", inv.lw_ok && inv.torsion_ok && round ? kPass : kFail);
}

Result cmd_verify_lw(const Context& ctx, const std::string& c, const std::string& t) {
    const LwReport r = lw_verify(ctx.mods, module_list(ctx.mods, c), module_list(ctx.mods, t));
    json doc = lw_to_json(ctx.mods, r);
    json failing = json::array();
    if (!r.ext_orthogonal) failing.push_back("Ext-orthogonal");
    for (const auto& e : r.per_module) {
        if (!e.right_surjective) failing.push_back("right approximation surjective: " + e.module);
        if (!e.kernel_in_t) failing.push_back("kernel in T: " + e.module);
        if (!e.cokernel_in_c) failing.push_back("cokernel in C: " + e.module);
    }
    doc["failingChecks"] = failing;
    return as_json(doc, "verify-lw", r.verdict ? kPass : kFail);
}

Result cmd_silting(const Context& ctx) {
    json rows = json::array();
    for (const auto& s : enumerate_two_term_silting(ctx.algebra, ctx.mods.indecs))
        rows.push_back({{"name", s.name}, {"summands", names_of(s.summands)}, {"H0", dim_vector_string(h0(s.complex).dims())}});
    return as_json({{"count", rows.size()}, {"silting", rows}}, "silting");
}

Result cmd_verify_cotorsion(const Context& ctx, const std::string& key) {
    std::string name;
    const ProjComplex p = pick_silting(ctx, key, name);
    const KUniverse universe = ctx.universe();
    const CotorsionPair pair = pair_of(p, universe);
    const CotorsionReport r = verify_complete_cotorsion(pair, universe);
    const json doc = report_to_json(r, {{"seed", name}, {"U", names_of(pair.u)}, {"V", names_of(pair.v)}});
    return as_json(doc, "verify-cotorsion", r.pass() ? kPass : kFail);
}

Result cmd_hrs(const Context& ctx, const std::string& key) {
    std::string name;
    const ProjComplex p = pick_silting(ctx, key, name);
    const CotorsionReport r = hrs_check(p, two_term_indecomposables(ctx.algebra, ctx.mods.indecs), ctx.cfg.seed);
    const json doc = report_to_json(r, {{"P", name}, {"seed", "A[1]"}});
    return as_json(doc, "hrs", r.pass() ? kPass : kFail);
}

Result cmd_bb(const Context& ctx, const std::string& key) {
    std::string name;
    const ProjComplex p = pick_silting(ctx, key, name);
    const BBReport r = bb_report(p, ctx.mods, ctx.universe(), ctx.options());
    json doc = bb_to_json(r);
    doc["P"] = name;
    return as_json(doc, "bb", r.pass() ? kPass : kFail);
}

Result cmd_verify_all(const Context& ctx) {
    const SuiteReport r = verify_all(ctx.algebra, {ctx.options(), ctx.cfg.cap, ctx.cfg.seed});
    return as_json(suite_to_json(r), "verify-all", r.pass() ? kPass : kFail);
}

Result cmd_export_dot(const Context& ctx) {
    return {torsion_poset_dot(ctx.mods, enumerate_support_tau_tilting(ctx.mods)), "torsion.dot", kPass};
}

void emit(const Config& cfg, const Result& r) {
    std::cout << r.text;
    if (cfg.out.empty()) return;
    std::filesystem::create_directories(cfg.out);
    std::ofstream f(std::filesystem::path(cfg.out) / r.file, std::ios::binary);
    if (!f) throw InputError("cannot write to " + cfg.out);
    f << r.text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Support tau-tilting, silting and cotorsion computations over bound quiver algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--algebra", cfg.algebra, "Algebra spec (JSON)")->required();
    app.add_option("--dim-bound", cfg.dim_bound, "Dimension bound for module enumeration")->capture_default_str();
    app.add_option("--cap", cfg.cap, "Summand cap for sums in the two-term universe")->capture_default_str();
    app.add_option("--guard", cfg.guard, "Abort when an enumeration would exceed this many candidates")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
    app.add_option("--out", cfg.out, "Directory for report files");

    std::string arg1, arg2;
    std::function<Result(const Context&)> run;
    auto plain = [&](const char* name, const char* help, Result (*f)(const Context&)) {
        app.add_subcommand(name, help)->callback([&run, f] { run = f; });
    };
    auto unary = [&](const char* name, const char* help, const char* what, Result (*f)(const Context&, const std::string&)) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option(what, arg1)->required();
        sub->callback([&run, &arg1, f] { run = [&arg1, f](const Context& c) { return f(c, arg1); }; });
    };
    plain("indecs", "Enumerate indecomposable modules", cmd_indecs);
    unary("tau", "AR translate of a module", "M", cmd_tau);
    plain("stt", "List basic support tau-tilting modules", cmd_stt);
    unary("triple", "Triple (C, T, F) of a support tau-tilting module", "T", cmd_triple);
    auto* lw = app.add_subcommand("verify-lw", "Check a left weak cotorsion pair (lists joined by '+')");
    lw->add_option("C", arg1)->required();
    lw->add_option("T", arg2)->required();
    lw->callback([&] { run = [&](const Context& c) { return cmd_verify_lw(c, arg1, arg2); }; });
    plain("silting", "List two-term silting complexes", cmd_silting);
    unary("verify-cotorsion", "Check (U(P), V(P)) is a complete cotorsion pair", "P", cmd_verify_cotorsion);
    unary("hrs", "Check (V(P), U(P)[1]) inside add P * add P[1]", "P", cmd_hrs);
    unary("bb", "Brenner-Butler checks over B = End(P)", "P", cmd_bb);
    plain("verify-all", "Run every property check", cmd_verify_all);
    plain("export-dot", "Torsion class poset as DOT", cmd_export_dot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInput;
    }
    try {
        const Context ctx(cfg);
        const Result r = run(ctx);
        emit(cfg, r);
        return r.code;
    } catch (const GuardError& e) {
        std::cerr << "guard abort: " << e.what() << "\n";
        return kGuard;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const UsageError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    }
}
