#include "leibconf/frontend.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "leibconf/cat2.hpp"
#include "leibconf/fixtures.hpp"

namespace leibconf {

using nlohmann::json;

std::string version_string() { return "leibconf 1.0.0"; }

namespace {

struct Usage : error {
    explicit Usage(const std::string& what) : error(what) {}
};

struct Options {
    std::string verb;
    std::string file;
    std::string name;    // entity selector
    std::string second;  // second entity for pairwise verbs
    std::string cochain;
    std::string tau;
    std::string dir;
    int nmax = 4;
    int max_ddeg = 3;
    int max_ldeg = 3;
    int max_degree = 4;
    int level = -1;  // optional degree assertion for delta
    int jobs = 1;
    long long seed = 0;
    bool json_only = false;
};

const char* kUsage =
    "usage: leibconf <verb> [file.lcf] [options]\n"
    "verbs:\n"
    "  parse               validate a file and print its canonical form\n"
    "  check-leibniz       Leibniz conformal identity on an algebra\n"
    "  check-rep           representation axioms\n"
    "  delta               coboundary of a cochain (--cochain)\n"
    "  is-cocycle          test delta(phi) = 0 (--cochain)\n"
    "  solve-preimage      bounded search for tau with delta(tau) = psi\n"
    "  check-linfty        structure identities of an operation tower (--nmax)\n"
    "  shift               suspend or desuspend a tower\n"
    "  check-mc            Maurer-Cartan test for a tower\n"
    "  linfty-delta        homotopy coboundary of an lcochain\n"
    "  check-2term         the nine two-term identities\n"
    "  check-hom           two-term homomorphism conditions\n"
    "  skeletal-extract    split a skeletal structure into algebra/rep/cocycle\n"
    "  skeletal-equiv      equivalence of skeletal structures (--a --b [--tau])\n"
    "  strict-to-crossed   crossed module of a strict structure\n"
    "  crossed-to-strict   strict structure of a crossed module\n"
    "  check-crossed       crossed module equations\n"
    "  functor-t           split realization of a two-term structure\n"
    "  functor-s           two-term extraction of a 2-algebra\n"
    "  check-2alg          2-algebra coherence\n"
    "  alpha               verify the comparison isomorphism T(S(A)) -> A\n"
    "  roundtrip           check S(T(a)) == a exactly\n"
    "  fixtures            list the built-in zoo or write it (--dir)\n"
    "  explain <id>        print the formula behind an identity id\n"
    "options: --name --a --b --cochain --tau --dir --nmax --max-ddeg --max-ldeg\n"
    "         --max-degree --level --jobs --seed --json --version --explain <id>\n";

Options parse_args(const std::vector<std::string>& args) {
    Options o;
    size_t i = 0;
    auto need_value = [&](const std::string& flag) -> std::string {
        if (i + 1 >= args.size()) throw Usage("missing value for " + flag);
        return args[++i];
    };
    for (; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--version") {
            o.verb = "version";
            return o;
        }
        if (a == "--help" || a == "-h") {
            o.verb = "help";
            return o;
        }
        if (a == "--explain") {
            o.verb = "explain";
            o.file = need_value(a);
            return o;
        }
        if (a == "--json") {
            o.json_only = true;
        } else if (a == "--name") {
            o.name = need_value(a);
        } else if (a == "--a") {
            o.name = need_value(a);
        } else if (a == "--b") {
            o.second = need_value(a);
        } else if (a == "--cochain") {
            o.cochain = need_value(a);
        } else if (a == "--tau") {
            o.tau = need_value(a);
        } else if (a == "--dir") {
            o.dir = need_value(a);
        } else if (a == "--nmax") {
            o.nmax = std::stoi(need_value(a));
        } else if (a == "--max-ddeg") {
            o.max_ddeg = std::stoi(need_value(a));
        } else if (a == "--max-ldeg") {
            o.max_ldeg = std::stoi(need_value(a));
        } else if (a == "--max-degree") {
            o.max_degree = std::stoi(need_value(a));
        } else if (a == "--level") {
            o.level = std::stoi(need_value(a));
        } else if (a == "--jobs") {
            o.jobs = std::stoi(need_value(a));
        } else if (a == "--seed") {
            o.seed = std::stoll(need_value(a));
        } else if (!a.empty() && a[0] == '-') {
            throw Usage("unknown option " + a);
        } else if (o.verb.empty()) {
            o.verb = a;
        } else if (o.file.empty()) {
            o.file = a;
        } else {
            throw Usage("unexpected argument " + a);
        }
    }
    if (o.verb.empty()) throw Usage("no verb given");
    return o;
}

dsl::Program load_program(const Options& o) {
    if (o.file.empty()) throw Usage("this verb needs an input file");
    std::ifstream in(o.file);
    if (!in) throw Usage("cannot open " + o.file);
    std::stringstream ss;
    ss << in.rdbuf();
    return dsl::parse(ss.str());
}

template <class M>
const typename M::mapped_type& pick(const M& m, const std::string& name, const char* kind) {
    if (!name.empty()) {
        auto it = m.find(name);
        if (it == m.end()) throw error(std::string("no ") + kind + " named '" + name + "'");
        return it->second;
    }
    if (m.size() == 1) return m.begin()->second;
    if (m.empty()) throw error(std::string("the file declares no ") + kind);
    throw error(std::string("several ") + kind + "s declared; pick one with --name");
}

json failures_json(const CheckReport& r) {
    json out = json::array();
    for (const auto& f : r.failures)
        out.push_back({{"identity", f.identity},
                       {"location", f.where},
                       {"residual", f.residual}});
    return out;
}

json report_json(const std::string& command, const CheckReport& r, long long seed) {
    return {{"command", command},
            {"status", r.pass() ? "pass" : "fail"},
            {"failures", failures_json(r)},
            {"counters", {{"checked", r.checked}, {"failed", r.failures.size()}}},
            {"wall_ms", r.wall_ms},
            {"seed", seed}};
}

// structure-constant serialization: {sources, target, vars, entries}
json map_json(const SesqMap& m) {
    json entries = json::array();
    for (const auto& [tuple, value] : m.table) {
        json args = json::array();
        for (size_t i = 0; i < tuple.size(); ++i) args.push_back(m.sources[i].basis[tuple[i]]);
        entries.push_back({{"args", args}, {"value", value.str()}});
    }
    json srcs = json::array();
    for (const auto& s : m.sources) srcs.push_back(s.name);
    return {{"sources", srcs},
            {"target", m.target.name},
            {"vars", m.lambda_ctx().lambdas},
            {"entries", entries}};
}

struct Outcome {
    int exit_code = 0;
    json report;
    std::string human;
};

Outcome from_report(const std::string& command, const CheckReport& r, long long seed) {
    return {r.pass() ? 0 : 1, report_json(command, r, seed), r.summary()};
}

Outcome run_verb(const Options& o) {
    const std::string& v = o.verb;

    if (v == "version") return {0, {{"command", "version"}, {"version", version_string()}},
                                version_string()};
    if (v == "help") return {0, {{"command", "help"}}, kUsage};

    if (v == "explain") {
        // the id rides in the file slot
        std::string id = o.file.empty() ? o.name : o.file;
        if (id.empty()) throw Usage("explain needs an identity id");
        std::string text = explain_identity(id);
        if (text.empty()) throw Usage("unknown identity id '" + id + "'");
        return {0, {{"command", "explain"}, {"id", id}, {"text", text}}, text};
    }

    if (v == "fixtures") {
        json names = json::array();
        std::string human;
        for (const auto& [name, text] : fixture_files()) {
            names.push_back(name + ".lcf");
            if (!o.dir.empty()) {
                std::filesystem::create_directories(o.dir);
                std::ofstream out(std::filesystem::path(o.dir) / (name + ".lcf"));
                out << text;
            }
            human += name + ".lcf\n";
        }
        return {0,
                {{"command", "fixtures"}, {"files", names}, {"written", !o.dir.empty()}},
                human};
    }

    dsl::Program p = load_program(o);

    if (v == "parse") {
        std::string canon = dsl::print(p);
        return {0,
                {{"command", "parse"}, {"status", "pass"}, {"result", {{"lcf", canon}}}},
                canon};
    }
    if (v == "check-leibniz") {
        const auto& alg = pick(p.algebras, o.name, "algebra").value;
        return from_report(v, verify_leibniz(alg.mod, alg.bracket, o.jobs), o.seed);
    }
    if (v == "check-rep") {
        const auto& rep = pick(p.reps, o.name, "representation").value;
        return from_report(v, verify_rep(rep.alg, rep.mod, rep.left, rep.right, o.jobs), o.seed);
    }
    if (v == "delta") {
        const auto& decl = pick(p.cochains, o.cochain.empty() ? o.name : o.cochain, "cochain");
        const ConfRep& rep = p.reps.at(decl.rep).value;
        if (o.level >= 0 && decl.value.degree != o.level)
            throw Usage("the selected cochain has degree " + std::to_string(decl.value.degree) +
                        ", not " + std::to_string(o.level));
        Cochain out = coboundary(rep, decl.value, o.max_degree);
        std::string lcf = dsl::print_map("delta_result", *out.map);
        json rj = {{"command", v},
                   {"status", "pass"},
                   {"degree", out.degree},
                   {"result", {{"lcf", lcf}, {"map", map_json(*out.map)}}},
                   {"seed", o.seed}};
        return {0, rj, lcf};
    }
    if (v == "is-cocycle") {
        const auto& decl = pick(p.cochains, o.cochain.empty() ? o.name : o.cochain, "cochain");
        const ConfRep& rep = p.reps.at(decl.rep).value;
        const bool ok = is_cocycle(rep, decl.value, o.max_degree);
        return {ok ? 0 : 1,
                {{"command", v}, {"status", ok ? "pass" : "fail"}, {"cocycle", ok}},
                ok ? "cocycle" : "not a cocycle"};
    }
    if (v == "solve-preimage") {
        const auto& decl = pick(p.cochains, o.cochain.empty() ? o.name : o.cochain, "cochain");
        const ConfRep& rep = p.reps.at(decl.rep).value;
        auto tau = find_coboundary_preimage(rep, decl.value, o.max_ddeg, o.max_ldeg);
        if (!tau)
            return {1,
                    {{"command", v}, {"status", "fail"}, {"found", false}},
                    "no preimage within the bounds"};
        json result;
        std::string lcf;
        if (decl.value.degree == 1) {
            std::string s;
            for (size_t i = 0; i < tau->c0.size(); ++i) s += (i ? ", " : "") + tau->c0[i].str();
            lcf = "value (" + s + ")";
            result = {{"lcf", lcf}};
        } else {
            lcf = dsl::print_map("tau", *tau->map);
            result = {{"lcf", lcf}, {"map", map_json(*tau->map)}};
        }
        return {0,
                {{"command", v}, {"status", "pass"}, {"found", true}, {"result", result}},
                lcf};
    }
    if (v == "check-linfty") {
        const auto& ops = pick(p.opsdecls, o.name, "operation tower").value;
        CheckReport r = verify_leib_infty(ops, o.nmax, o.jobs);
        json rj = report_json(v, r, o.seed);
        json per_level;
        for (int n = 1; n <= o.nmax; ++n) per_level["n=" + std::to_string(n)] = 0;
        for (const auto& f : r.failures)
            if (!f.where.empty()) per_level[f.where[0]] = per_level[f.where[0]].get<int>() + 1;
        rj["per_level"] = per_level;
        return {r.pass() ? 0 : 1, rj, r.summary()};
    }
    if (v == "shift") {
        const auto& ops = pick(p.opsdecls, o.name, "operation tower").value;
        HomotopyOps out =
            ops.flavor == HomotopyOps::Flavor::unshifted ? shift(ops) : unshift(ops);
        std::string lcf = dsl::print_ops("shifted", out);
        return {0, {{"command", v}, {"status", "pass"}, {"result", {{"lcf", lcf}}}}, lcf};
    }
    if (v == "check-mc") {
        const auto& ops = pick(p.opsdecls, o.name, "operation tower").value;
        HomotopyOps shifted = ops.flavor == HomotopyOps::Flavor::shifted ? ops : shift(ops);
        const bool ok = is_maurer_cartan(shifted, o.nmax);
        return {ok ? 0 : 1,
                {{"command", v},
                 {"status", ok ? "pass" : "fail"},
                 {"maurer_cartan", ok},
                 {"shifted_automatically", ops.flavor != HomotopyOps::Flavor::shifted}},
                ok ? "Maurer-Cartan" : "not Maurer-Cartan"};
    }
    if (v == "linfty-delta") {
        const auto& decl = pick(p.lcochains, o.cochain.empty() ? o.name : o.cochain, "lcochain");
        const auto& opsd = p.opsdecls.at(decl.ops).value;
        HomotopyOps shifted =
            opsd.flavor == HomotopyOps::Flavor::shifted ? opsd : shift(opsd);
        ConvElem out = linfty_coboundary(shifted, decl.value, std::max(8, o.nmax * 2));
        std::string lcf;
        for (const auto& [arity, piece] : out.pieces)
            lcf += dsl::print_map("delta_piece" + std::to_string(arity), piece);
        return {0,
                {{"command", v},
                 {"status", "pass"},
                 {"degree", 1 - out.degree},
                 {"result", {{"lcf", lcf}}}},
                lcf.empty() ? "0" : lcf};
    }
    if (v == "check-2term") {
        const auto& a = pick(p.twoterms, o.name, "two-term structure").value;
        return from_report(v, verify_two_term(a, o.jobs), o.seed);
    }
    if (v == "check-hom") {
        const auto& h = pick(p.homs, o.name, "homomorphism");
        return from_report(
            v, verify_two_term_hom(p.twoterms.at(h.from).value, p.twoterms.at(h.to).value,
                                   h.value),
            o.seed);
    }
    if (v == "skeletal-extract") {
        const auto& a = pick(p.twoterms, o.name, "two-term structure").value;
        SkeletalTriple t = skeletal_to_triple(a);
        std::string lcf = dsl::print_rep("extracted", t.rep) +
                          dsl::print_cochain("theta", "extracted", t.theta);
        return {0, {{"command", v}, {"status", "pass"}, {"result", {{"lcf", lcf}}}}, lcf};
    }
    if (v == "skeletal-equiv") {
        if (o.name.empty() || o.second.empty()) throw Usage("skeletal-equiv needs --a and --b");
        const auto& a = pick(p.twoterms, o.name, "two-term structure").value;
        const auto& b = pick(p.twoterms, o.second, "two-term structure").value;
        if (!o.tau.empty()) {
            auto it = p.maps.find(o.tau);
            if (it == p.maps.end()) throw error("no map named '" + o.tau + "'");
            const bool ok = skeletal_equivalent(a, b, it->second);
            return {ok ? 0 : 1,
                    {{"command", v}, {"status", ok ? "pass" : "fail"}, {"equivalent", ok}},
                    ok ? "equivalent via the given witness" : "the given witness fails"};
        }
        auto tau = skeletal_equivalence_witness(a, b, o.max_ddeg, o.max_ldeg);
        if (!tau)
            return {1,
                    {{"command", v}, {"status", "fail"}, {"equivalent", false}},
                    "no witness within the bounds"};
        std::string lcf = dsl::print_map("tau", *tau);
        return {0,
                {{"command", v},
                 {"status", "pass"},
                 {"equivalent", true},
                 {"result", {{"lcf", lcf}}}},
                lcf};
    }
    if (v == "strict-to-crossed") {
        const auto& a = pick(p.twoterms, o.name, "two-term structure").value;
        std::string lcf = dsl::print_crossed("crossed", strict_to_crossed(a));
        return {0, {{"command", v}, {"status", "pass"}, {"result", {{"lcf", lcf}}}}, lcf};
    }
    if (v == "crossed-to-strict") {
        const auto& x = pick(p.crosseds, o.name, "crossed module").value;
        std::string lcf = dsl::print_two_term("strict", crossed_to_strict(x));
        return {0, {{"command", v}, {"status", "pass"}, {"result", {{"lcf", lcf}}}}, lcf};
    }
    if (v == "check-crossed") {
        const auto& x = pick(p.crosseds, o.name, "crossed module").value;
        return from_report(v, verify_crossed(x, o.jobs), o.seed);
    }
    if (v == "functor-t") {
        const auto& a = pick(p.twoterms, o.name, "two-term structure").value;
        std::string lcf = dsl::print_two_alg("realized", functor_t(a));
        return {0, {{"command", v}, {"status", "pass"}, {"result", {{"lcf", lcf}}}}, lcf};
    }
    if (v == "functor-s") {
        const auto& a = pick(p.twoalgs, o.name, "2-algebra").value;
        std::string lcf = dsl::print_two_term("extracted", functor_s(a));
        return {0, {{"command", v}, {"status", "pass"}, {"result", {{"lcf", lcf}}}}, lcf};
    }
    if (v == "check-2alg") {
        const auto& a = pick(p.twoalgs, o.name, "2-algebra").value;
        return from_report(v, verify_two_alg(a, o.jobs), o.seed);
    }
    if (v == "alpha") {
        const auto& a = pick(p.twoalgs, o.name, "2-algebra").value;
        TwoAlg tsa = functor_t(functor_s(a));
        TwoAlgHom al = alpha_iso(a);
        CheckReport r = verify_two_alg_hom(tsa, a, al);
        auto inv = inverse_two_alg_hom(tsa, a, al);
        if (!inv) r.add("alpha.invertible", {}, "no inverse");
        else {
            if (!(compose_two_alg_hom(tsa, a, tsa, *inv, al) == two_alg_id_hom(tsa)))
                r.add("alpha.left-inverse", {}, "composite differs from the identity");
            if (!(compose_two_alg_hom(a, tsa, a, al, *inv) == two_alg_id_hom(a)))
                r.add("alpha.right-inverse", {}, "composite differs from the identity");
        }
        return from_report(v, r, o.seed);
    }
    if (v == "roundtrip") {
        const auto& a = pick(p.twoterms, o.name, "two-term structure").value;
        const bool ok = functor_s(functor_t(a)) == a;
        return {ok ? 0 : 1,
                {{"command", v}, {"status", ok ? "pass" : "fail"}, {"identity", ok}},
                ok ? "S(T(a)) == a" : "round trip differs"};
    }
    throw Usage("unknown verb '" + v + "'\n" + kUsage);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> fixture_files() {
    namespace fx = fixtures;
    std::vector<std::pair<std::string, std::string>> out;
    auto alg = [&](const std::string& name, const LeibnizConfAlg& a) {
        out.push_back({name, dsl::print_algebra(name, a)});
    };
    alg("virasoro", fx::virasoro());
    alg("current_nilpotent2", fx::current_nilpotent2());
    alg("current_affine2", fx::current_affine2());
    alg("current_heisenberg3", fx::current_heisenberg3());
    alg("current_central3", fx::current_central3());
    alg("semidirect_virasoro_weight1", fx::semidirect_virasoro_weight1());
    alg("semidirect_affine2", fx::semidirect_affine2_module());
    alg("mutant_rank1_idempotent", fx::mutant_rank1_idempotent());
    alg("mutant_current_bad2", fx::mutant_current_bad2());
    alg("mutant_weight3", fx::mutant_weight3());

    {
        ConfRep rep = fx::virasoro_weight_module(1);
        std::string text = dsl::print_rep("weight1", rep) +
                           dsl::print_cochain("tau", "weight1", fx::tau_fixture(rep));
        out.push_back({"virasoro_weight1", text});
    }
    {
        ConfRep adj = fx::virasoro_adjoint();
        SesqMap id({adj.alg.mod}, adj.mod);
        id.set_entry({0}, ModValue::basis_unit(adj.mod, 0, VarCtx{}));
        std::string text = dsl::print_rep("adjoint", adj) +
                           dsl::print_cochain("phi", "adjoint", cochain_from_map(adj, id));
        out.push_back({"virasoro_adjoint", text});
    }
    out.push_back({"morphism_kernel", dsl::print_ops("morphism_kernel",
                                                     fx::morphism_kernel_tower())});
    out.push_back({"skeletal", dsl::print_two_term("skeletal", fx::skeletal_fixture())});
    out.push_back({"strict", dsl::print_two_term("strict", fx::strict_fixture())});
    out.push_back({"mixed", dsl::print_two_term("mixed", fx::mixed_fixture())});
    out.push_back(
        {"crossed_nilpotent", dsl::print_crossed("crossed_nilpotent", fx::nilpotent_crossed())});
    out.push_back(
        {"twoalg_skeletal", dsl::print_two_alg("twoalg_skeletal",
                                               functor_t(fx::skeletal_fixture()))});
    return out;
}

std::string explain_identity(const std::string& id) {
    static const std::map<std::string, std::string> table = {
        {"leibniz",
         "[x_l1 [y_l2 z]] = [[x_l1 y]_{l1+l2} z] + [y_l2 [x_l1 z]]  (left translations act as "
         "conformal derivations)"},
        {"skew", "[x_l y] = -[y_{-D-l} x]  (skew symmetry of the bracket)"},
        {"rep.d-shift",
         "(D x)_l v = -l (x_l v),  x_l (D v) = (D + l)(x_l v)  and the mirrored rules for the "
         "right action"},
        {"rep.left-left", "x_l1 (y_l2 v) = [x_l1 y]_{l1+l2} v + y_l2 (x_l1 v)"},
        {"rep.left-right", "x_l1 (v_l2 y) = (x_l1 v)_{l1+l2} y + v_l2 [x_l1 y]"},
        {"rep.right-bracket", "v_l1 [x_l2 y] = (v_l1 x)_{l1+l2} y + x_l2 (v_l1 y)"},
        {"leibnizator",
         "the level-n structure identity: the shuffle sum of rho_k inserted into rho_l with "
         "Koszul and shuffle signs vanishes"},
        {"2term.i", "rho2(u, v) = 0 for u, v in G1 (held by representation: no such table)"},
        {"2term.ii", "d(rho2_l(x, u)) = rho2_l(x, du)"},
        {"2term.iii", "d(rho2_l(u, x)) = rho2_l(du, x)"},
        {"2term.iv", "rho2_l(du, v) = rho2_l(u, dv)"},
        {"2term.v",
         "d(rho3_{l1,l2}(x,y,z)) = rho2_l1(x, rho2_l2(y,z)) - rho2_{l1+l2}(rho2_l1(x,y), z) - "
         "rho2_l2(y, rho2_l1(x,z))"},
        {"2term.vi",
         "rho3_{l1,l2}(x,y,dv) equals the same three-term combination with v in the last slot"},
        {"2term.vii",
         "rho3_{l1,l2}(x,dv,y) equals the same three-term combination with v in the middle slot"},
        {"2term.viii",
         "rho3_{l1,l2}(dv,x,y) equals the same three-term combination with v in the first slot"},
        {"2term.ix",
         "the ten-term coherence of rho3 against rho2 on G0^4 with variables l1, l2, l3"},
        {"hom.chain", "d' f1 = f0 d"},
        {"hom.binary-00", "rho2'_l(f0 x, f0 y) - f0(rho2_l(x,y)) = d'(f2_l(x,y))"},
        {"hom.binary-01", "rho2'_l(f0 x, f1 v) - f1(rho2_l(x,v)) = f2_l(x, dv)"},
        {"hom.binary-10", "rho2'_l(f1 v, f0 x) - f1(rho2_l(v,x)) = f2_l(dv, x)"},
        {"hom.ternary",
         "rho3'(f0 x, f0 y, f0 z) - f1(rho3(x,y,z)) equals the six-term mixed combination of "
         "rho2', f2 and rho2"},
        {"crossed.d-morphism", "d[u_l v]^g = [du_l dv]^h"},
        {"crossed.eq1", "d(Phi^l_l(h, x)) = [h_l dx]^h"},
        {"crossed.eq2", "d(Phi^r_l(x, h)) = [(dx)_l h]^h"},
        {"crossed.eq3l", "Phi^l_l(dx, y) = [x_l y]^g"},
        {"crossed.eq3r", "Phi^r_l(x, dy) = [x_l y]^g"},
        {"crossed.eq4",
         "[x_l1 Phi^r_l2(y,h)]^g = Phi^r_{l1+l2}([x_l1 y]^g, h) + [y_l2 Phi^r_l1(x,h)]^g"},
        {"crossed.eq5",
         "[x_l1 Phi^l_l2(h,y)]^g = [Phi^r_l1(x,h)_{l1+l2} y]^g + Phi^l_l2(h, [x_l1 y]^g)"},
        {"crossed.eq6",
         "Phi^l_l1(h, [x_l2 y]^g) = [Phi^l_l1(h,x)_{l1+l2} y]^g + [x_l2 Phi^l_l1(h,y)]^g"},
        {"2vs.unit-source", "s(1_x) = x"},
        {"2vs.unit-target", "t(1_x) = x"},
        {"2vs.unit-left", "1_{s(f)} ; f = f"},
        {"2vs.unit-right", "f ; 1_{t(f)} = f"},
        {"2vs.compose-assoc", "(f ; g) ; h = f ; (g ; h)"},
        {"2alg.source", "s[f_l g] = [s(f)_l s(g)]"},
        {"2alg.target", "t[f_l g] = [t(f)_l t(g)]"},
        {"2alg.identity", "[1_x _l 1_y] = 1_{[x_l y]}"},
        {"2alg.interchange", "[(f;f')_l (g;g')] = [f_l g] ; [f'_l g']"},
        {"2alg.leibnizator-target",
         "L_{x,y,z} : [x_l1 [y_l2 z]] -> [[x_l1 y]_{l1+l2} z] + [y_l2 [x_l1 z]]"},
        {"2alg.naturality", "L is natural in each slot against generator morphisms"},
        {"2alg.coherence",
         "the two rewritings of [x_l1 [y_l2 [z_l3 w]]] through L agree (pentagon-style "
         "coherence)"},
        {"2alghom.source", "s' F1 = F0 s"},
        {"2alghom.target", "t' F1 = F0 t"},
        {"2alghom.unit", "F1(1_x) = 1_{F0 x}"},
        {"2alghom.f2-target", "F2^{x,y} : [F0(x)_l F0(y)]' -> F0[x_l y]"},
        {"2alghom.f2-natural", "F2 is natural in both slots"},
        {"2alghom.coherence", "the two Leibnizators agree through F2 (the comparison square)"},
        {"alpha.invertible", "the comparison homomorphism admits an inverse"},
    };
    auto it = table.find(id);
    return it == table.end() ? std::string() : it->second;
}

int dispatch(const std::vector<std::string>& args, std::ostream& json_out,
             std::ostream& human_out) {
    Options o;
    try {
        o = parse_args(args);
    } catch (const Usage& u) {
        json_out << json{{"command", "usage"}, {"status", "error"}, {"message", u.what()}}.dump(2)
                 << "\n";
        human_out << u.what() << "\n" << kUsage;
        return 2;
    }
    try {
        Outcome out = run_verb(o);
        json_out << out.report.dump(2) << "\n";
        if (!o.json_only) human_out << out.human << "\n";
        return out.exit_code;
    } catch (const Usage& u) {
        json_out << json{{"command", o.verb}, {"status", "error"}, {"message", u.what()}}.dump(2)
                 << "\n";
        human_out << u.what() << "\n" << kUsage;
        return 2;
    } catch (const dsl::ParseError& e) {
        json_out << json{{"command", o.verb},
                         {"status", "error"},
                         {"message", e.what()},
                         {"line", e.span.line},
                         {"col", e.span.col}}
                        .dump(2)
                 << "\n";
        if (!o.json_only) human_out << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json_out << json{{"command", o.verb}, {"status", "error"}, {"message", e.what()}}.dump(2)
                 << "\n";
        if (!o.json_only) human_out << e.what() << "\n";
        return 2;
    }
}

}  // namespace leibconf
