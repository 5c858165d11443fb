// Acceptance suite: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "leibconf/cat2.hpp"
#include "leibconf/fixtures.hpp"
#include "leibconf/frontend.hpp"
#include "leibconf/randgen.hpp"

using namespace leibconf;
using namespace leibconf::fixtures;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<std::string()> body;  // empty string = pass, else failure detail
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixture_text_of(const std::string& name) {
    for (const auto& [n, text] : fixture_files())
        if (n == name) return text;
    throw error("no fixture " + name);
}

// ---------------------------------------------------------------------------

std::string axiom_suite() {
    auto t0 = std::chrono::steady_clock::now();
    auto zoo = algebra_zoo();
    int semidirects = 0, currents = 0;
    for (const auto& [name, alg] : zoo) {
        if (!verify_leibniz(alg.mod, alg.bracket).pass()) return "zoo member failed: " + name;
        if (name.rfind("semidirect", 0) == 0) semidirects++;
        if (name.rfind("current", 0) == 0) currents++;
    }
    if (currents < 3 || semidirects < 2) return "zoo composition too small";
    auto mutants = mutant_zoo();
    if (mutants.size() < 3) return "need at least three broken structures";
    for (const auto& [name, alg] : mutants) {
        CheckReport r = verify_leibniz(alg.mod, alg.bracket);
        if (r.pass()) return "mutant passed unexpectedly: " + name;
        if (r.failures.empty()) return "no residuals for " + name;
        for (const auto& f : r.failures)
            if (f.residual == "0") return "zero residual reported for " + name;
    }
    double secs = seconds_since(t0);
    if (secs >= 5.0) return "too slow: " + std::to_string(secs) + "s";
    return "";
}

std::string delta_squared() {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(20260808);
    std::vector<std::pair<std::string, ConfRep>> reps{
        {"virasoro_adjoint", virasoro_adjoint()},
        {"virasoro_weight1", virasoro_weight_module(1)},
        {"current_nilpotent2_adjoint", adjoint_rep(current_nilpotent2())},
        {"current_central3_adjoint", adjoint_rep(current_central3())},
        {"semidirect_affine2_adjoint", adjoint_rep(semidirect_affine2_module())},
    };
    for (const auto& [name, rep] : reps) {
        int done = 0;
        for (int n = 0; n <= 3; ++n)
            for (int trial = 0; trial < 13; ++trial) {
                Cochain phi = random_cochain(rng, rep, n, 3, 3);
                if (!coboundary(rep, coboundary(rep, phi)).is_zero())
                    return "delta^2 != 0 on " + name + " in degree " + std::to_string(n);
                done++;
            }
        if (done < 50) return "too few samples";
    }
    double secs = seconds_since(t0);
    if (secs >= 60.0) return "too slow: " + std::to_string(secs) + "s";
    return "";
}

std::string maurer_cartan_oracle() {
    Rng rng(31337);
    int satisfied = 0, violated = 0;
    for (int i = 0; i < 100; ++i) {
        TwoTermAlg a = [&] {
            switch (i % 3) {
                case 0: return random_two_term_valid(rng);
                case 1: return random_two_term_any(rng);
                default: return perturb_ternary(rng, random_two_term_valid(rng));
            }
        }();
        HomotopyOps tower = to_tower(a);
        const bool direct = verify_leib_infty(tower, 4).pass();
        const bool mc = is_maurer_cartan(shift(tower), 4);
        if (direct != mc) return "disagreement at sample " + std::to_string(i);
        (direct ? satisfied : violated)++;
    }
    if (satisfied < 20 || violated < 20)
        return "sample mix too one-sided: " + std::to_string(satisfied) + " / " +
               std::to_string(violated);
    return "";
}

std::string decalage_inverse() {
    Rng rng(424242);
    GradedModule mod("acc",
                     {{0, ConfModule("acc0", {"x", "y"})}, {1, ConfModule("acc1", {"u"})}});
    for (int i = 0; i < 100; ++i) {
        HomotopyOps ops = random_tower(rng, mod, 4, 2, 2);
        if (!(unshift(shift(ops)) == ops))
            return "round trip differs at sample " + std::to_string(i);
    }
    return "";
}

std::string boundary_oracle() {
    Rng rng(5150);
    int agree_pass = 0, agree_fail = 0;
    for (int i = 0; i < 50; ++i) {
        TwoTermAlg a = [&] {
            switch (i % 4) {
                case 0: return random_two_term_valid(rng);
                case 1: return random_two_term_any(rng);
                case 2: return perturb_ternary(rng, random_two_term_valid(rng));
                default: {
                    TwoTermAlg base = random_two_term_valid(rng);
                    return twist_by(base, random_tau(rng, base, 1, 1));
                }
            }
        }();
        const bool direct = verify_two_term(a).pass();
        const bool graded = verify_leib_infty(to_tower(a), 4).pass();
        if (direct != graded) return "disagreement at sample " + std::to_string(i);
        (direct ? agree_pass : agree_fail)++;
    }
    if (agree_pass < 10 || agree_fail < 10)
        return "sample mix too one-sided: " + std::to_string(agree_pass) + " / " +
               std::to_string(agree_fail);
    return "";
}

std::string skeletal_bijection() {
    Rng rng(777);
    std::vector<ConfRep> reps{virasoro_weight_module(1), virasoro_weight_module(2),
                              adjoint_rep(current_nilpotent2()),
                              adjoint_rep(current_central3())};
    int fixtures = 0;
    for (int i = 0; i < 20; ++i) {
        const ConfRep& rep = reps[i % reps.size()];
        Cochain theta = coboundary(rep, random_cochain(rng, rep, 2, 1, 1));
        TwoTermAlg a = triple_to_skeletal(rep, theta);
        SkeletalTriple t = skeletal_to_triple(a);
        if (!(triple_to_skeletal(t.rep, t.theta) == a)) return "round trip differs";
        if (!(t.theta == theta) || !(t.rep.left == rep.left) || !(t.rep.right == rep.right))
            return "extraction differs from the source triple";
        SesqMap tau = random_tau(rng, a, 1, 1);
        if (!skeletal_equivalent(a, twist_by(a, tau), tau)) return "twist pair rejected";
        fixtures++;
    }
    if (fixtures < 20) return "too few fixtures";

    // planted non-coboundary difference on an abelian complex with zero
    // actions: every coboundary vanishes there, the difference does not
    ConfModule g0("p0", {"x", "y"});
    ConfModule g1("p1", {"u"});
    TwoTermAlg a = zero_two_term(g0, g1);
    TwoTermAlg b = a;
    ModValue v(g1, canon_lambdas(2));
    v.coeffs[0] = lambda_var(canon_lambdas(2), 0);
    b.r3.set_entry({0, 0, 0}, std::move(v));
    if (!verify_two_term(b).pass()) return "planted fixture invalid";
    if (skeletal_equivalence_witness(a, b, 3, 3)) return "planted difference accepted";
    for (int i = 0; i < 5; ++i)
        if (skeletal_equivalent(a, b, random_tau(rng, a, 2, 2)))
            return "planted difference accepted by a random witness";
    return "";
}

std::string strict_crossed_bijection() {
    std::vector<CrossedModule> xs;
    xs.push_back(nilpotent_crossed());
    for (const auto& [name, alg] : algebra_zoo()) {
        xs.push_back(
            crossed_module(alg, alg, identity_linmap(alg.mod), alg.bracket, alg.bracket));
        LeibnizConfAlg trivial = raw_leibniz_alg(alg.mod, SesqMap({alg.mod, alg.mod}, alg.mod));
        xs.push_back(crossed_module(trivial, alg, zero_linmap(alg.mod, alg.mod),
                                    SesqMap({alg.mod, alg.mod}, alg.mod),
                                    SesqMap({alg.mod, alg.mod}, alg.mod)));
    }
    int round_trips = 0;
    const VarCtx c2 = canon_lambdas(2);
    const Poly L1 = lambda_var(c2, 0), L2 = lambda_var(c2, 1);
    for (size_t i = 0; i < xs.size(); ++i) {
        const CrossedModule& x = xs[i];
        if (!verify_crossed(x).pass())
            return "crossed fixture " + std::to_string(i) + " invalid";
        TwoTermAlg s = crossed_to_strict(x);
        if (!verify_two_term(s).pass()) return "strict image fails verification";
        if (!(strict_to_crossed(s) == x)) return "crossed round trip differs";
        if (!(crossed_to_strict(strict_to_crossed(s)) == s)) return "strict round trip differs";
        round_trips += 2;

        // the symmetrized composition identity holds on every strict fixture
        auto u0 = [&](int b) { return ModValue::basis_unit(s.g0, b, c2); };
        for (const auto& t : all_tuples({s.g0, s.g0, s.g0})) {
            ModValue r =
                eval(s.r2_00, {eval_basis(s.r2_00, {t[0], t[1]}, {L1}, c2), u0(t[2])}, {L1 + L2},
                     c2) +
                eval(s.r2_00, {eval_basis(s.r2_00, {t[1], t[0]}, {L2}, c2), u0(t[2])}, {L1 + L2},
                     c2);
            if (!r.is_zero()) return "symmetrized composition identity fails";
        }
    }
    if (round_trips < 20) return "too few strict fixtures";
    return "";
}

std::string category_equivalence() {
    Rng rng(161803);
    int fixtures = 0;
    for (int i = 0; i < 20; ++i) {
        TwoTermAlg a = random_two_term_valid(rng);
        TwoAlg t = functor_t(a);
        if (!(functor_s(t) == a)) return "S(T(a)) differs from a";

        SesqMap tau = random_tau(rng, a, 1, 1);
        TwoTermAlg b = twist_by(a, tau);
        TwoTermHom f = twist_hom(a, tau);
        TwoAlg tb = functor_t(b);
        TwoAlgHom tf = functor_t_hom(a, b, f);
        if (!(functor_s_hom(t, tb, tf) == f)) return "S(T(f)) differs from f";

        TwoAlgHom al = alpha_iso(t);
        TwoAlg tst = functor_t(functor_s(t));
        if (!verify_two_alg_hom(tst, t, al).pass()) return "alpha fails verification";
        auto inv = inverse_two_alg_hom(tst, t, al);
        if (!inv) return "alpha not invertible";
        if (!(compose_two_alg_hom(tst, t, tst, *inv, al) == two_alg_id_hom(tst)))
            return "alpha inverse fails on the left";
        if (!(compose_two_alg_hom(t, tst, t, al, *inv) == two_alg_id_hom(t)))
            return "alpha inverse fails on the right";
        fixtures++;
    }
    if (fixtures < 20) return "too few fixtures";

    // coherence <-> the ternary identity, both directions
    for (int i = 0; i < 6; ++i) {
        TwoTermAlg good = random_two_term_valid(rng);
        TwoAlg tg = functor_t(good);
        if (!verify_two_alg(tg).pass()) return "image of a valid structure fails coherence";
        TwoTermAlg bad = perturb_ternary(rng, good);
        while (verify_two_term(bad).pass()) bad = perturb_ternary(rng, bad);
        TwoAlg tbad = tg;
        tbad.lk = -bad.r3;
        if (verify_two_alg(tbad).pass()) return "image of a broken structure passes coherence";
    }
    return "";
}

std::string cross_oracle() {
    Rng rng(90210);
    int done = 0;
    for (const auto& alg : {virasoro(), current_central3(), current_affine2()}) {
        ConfRep adj = adjoint_rep(alg);
        HomotopyOps rho = shift(degree0_tower(alg.mod, alg.bracket));
        for (int n = 1; n <= 3; ++n)
            for (int trial = 0; trial < 6; ++trial) {
                Cochain phi = random_cochain(rng, adj, n, 2, 1);
                ConvElem lifted =
                    make_conv_elem(rho.mod, 1 - n, {{n, with_degree(*phi.map, 1 - n)}});
                ConvElem dphi = linfty_coboundary(rho, lifted);
                SesqMap expect = with_degree(*coboundary(adj, phi).map, -n);
                // recorded sign table: +1 in every degree
                if (dphi.pieces.empty()) {
                    if (!expect.is_zero())
                        return "zero against nonzero in degree " + std::to_string(n);
                } else if (!(dphi.pieces.at(n + 1) == expect)) {
                    return "mismatch in degree " + std::to_string(n);
                }
                done++;
            }
    }
    if (done < 50) return "too few samples";
    return "";
}

int run_cli(const std::string& bin, const std::string& args) {
    const std::string cmd = bin + " " + args + " >/dev/null 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string frontend_contract() {
    for (const auto& [name, text] : fixture_files()) {
        dsl::Program p = dsl::parse(text);
        std::string canon = dsl::print(p);
        if (!(dsl::parse(canon) == p)) return "round trip differs for " + name;
    }
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "leibconf_acceptance";
    fs::create_directories(dir);
    fs::path good = dir / "virasoro.lcf";
    std::ofstream(good) << fixture_text_of("virasoro");
    {
        std::ostringstream a1, a2, h;
        dispatch({"check-leibniz", good.string(), "--seed", "11"}, a1, h);
        dispatch({"check-leibniz", good.string(), "--seed", "11"}, a2, h);
        auto strip = [](std::string s) {
            auto p = s.find("\"wall_ms\"");
            if (p != std::string::npos) s.erase(p, s.find('\n', p) - p);
            return s;
        };
        if (strip(a1.str()) != strip(a2.str())) return "reports differ across runs";
    }
    const char* bin = std::getenv("LEIBCONF_BIN");
    if (!bin) return "LEIBCONF_BIN not set";
    fs::path bad = dir / "mutant.lcf";
    fs::path broken = dir / "broken.lcf";
    std::ofstream(bad) << fixture_text_of("mutant_rank1_idempotent");
    std::ofstream(broken) << "module oops {";
    if (run_cli(bin, "check-leibniz " + good.string()) != 0) return "exit code 0 expected";
    if (run_cli(bin, "check-leibniz " + bad.string()) != 1) return "exit code 1 expected";
    if (run_cli(bin, "check-leibniz " + broken.string()) != 2) return "exit code 2 expected";
    if (run_cli(bin, "no-such-verb") != 2) return "usage exit code 2 expected";
    return "";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "axiom suite on the zoo with failing mutants (< 5 s)", axiom_suite},
        {2, "delta squared vanishes exactly in degrees 0-3 (< 60 s)", delta_squared},
        {3, "Maurer-Cartan test agrees with the structure identities (100 samples)",
         maurer_cartan_oracle},
        {4, "suspension round trip is exact (100 samples)", decalage_inverse},
        {5, "two-term checker agrees with the graded tower checker (50 samples)",
         boundary_oracle},
        {6, "skeletal bijection: round trips and coboundary equivalence", skeletal_bijection},
        {7, "strict/crossed bijection: round trips and derived identity",
         strict_crossed_bijection},
        {8, "category equivalence: S/T identity, alpha isomorphism, coherence",
         category_equivalence},
        {9, "homotopy coboundary matches the classical one in degree-0 concentration",
         cross_oracle},
        {10, "frontend: round trip, deterministic reports, exit codes", frontend_contract},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = seconds_since(t0);
        std::ostringstream line;
        line << (detail.empty() ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
             << c.title << " (" << std::fixed;
        line.precision(1);
        line << secs << "s)";
        if (!detail.empty()) {
            line << " -- " << detail;
            failed++;
        }
        std::cout << line.str() << std::endl;
    }
    if (failed) std::cout << failed << " criteria failed" << std::endl;
    return failed == 0 ? 0 : 1;
}
