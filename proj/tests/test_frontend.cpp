#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "leibconf/fixtures.hpp"
#include "leibconf/frontend.hpp"

using namespace leibconf;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

fs::path write_temp(const std::string& name, const std::string& text) {
    fs::path dir = fs::temp_directory_path() / "leibconf_test";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream out(p);
    out << text;
    return p;
}

struct Run {
    int code;
    json report;
    std::string human;
};

Run run(std::vector<std::string> args) {
    std::ostringstream js, hs;
    int code = dispatch(args, js, hs);
    Run r{code, json(), hs.str()};
    r.report = json::parse(js.str());
    return r;
}

std::string fixture_text(const std::string& name) {
    for (const auto& [n, text] : fixture_files())
        if (n == name) return text;
    throw error("no fixture " + name);
}

// structural validation against the shipped report schema
void check_report_shape(const json& r) {
    REQUIRE(r.contains("command"));
    REQUIRE(r.contains("status"));
    std::string status = r["status"];
    CHECK((status == "pass" || status == "fail" || status == "error"));
    if (r.contains("failures")) {
        REQUIRE(r["failures"].is_array());
        for (const auto& f : r["failures"]) {
            CHECK(f.contains("identity"));
            CHECK(f.contains("location"));
            CHECK(f.contains("residual"));
        }
    }
    if (r.contains("counters")) {
        CHECK(r["counters"].contains("checked"));
        CHECK(r["counters"].contains("failed"));
    }
}

}  // namespace

TEST_CASE("exit codes follow the contract") {
    fs::path good = write_temp("vir.lcf", fixture_text("virasoro"));
    fs::path bad = write_temp("bad.lcf", fixture_text("mutant_rank1_idempotent"));
    fs::path broken = write_temp("broken.lcf", "module g { basis");

    Run pass = run({"check-leibniz", good.string()});
    CHECK(pass.code == 0);
    CHECK(pass.report["status"] == "pass");
    check_report_shape(pass.report);

    Run fail = run({"check-leibniz", bad.string()});
    CHECK(fail.code == 1);
    CHECK(fail.report["status"] == "fail");
    CHECK(fail.report["failures"].size() == 1);
    CHECK(fail.report["failures"][0]["residual"] == "(-1) e");
    check_report_shape(fail.report);

    CHECK(run({"check-leibniz", broken.string()}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check-leibniz", "/nonexistent/file.lcf"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("reports are deterministic") {
    fs::path good = write_temp("vir2.lcf", fixture_text("virasoro"));
    json a = run({"check-leibniz", good.string(), "--seed", "7"}).report;
    json b = run({"check-leibniz", good.string(), "--seed", "7"}).report;
    a.erase("wall_ms");
    b.erase("wall_ms");
    CHECK(a == b);
}

TEST_CASE("the zoo passes its checkers through the CLI") {
    auto file_of = [&](const std::string& name) {
        return write_temp(name + ".lcf", fixture_text(name)).string();
    };
    CHECK(run({"check-leibniz", file_of("current_central3")}).code == 0);
    CHECK(run({"check-leibniz", file_of("semidirect_virasoro_weight1")}).code == 0);
    CHECK(run({"check-rep", file_of("virasoro_weight1")}).code == 0);
    CHECK(run({"check-linfty", file_of("morphism_kernel"), "--nmax", "4"}).code == 0);
    CHECK(run({"check-mc", file_of("morphism_kernel")}).code == 0);
    CHECK(run({"check-2term", file_of("skeletal")}).code == 0);
    CHECK(run({"check-2term", file_of("mixed")}).code == 0);
    CHECK(run({"check-crossed", file_of("crossed_nilpotent")}).code == 0);
    CHECK(run({"check-2alg", file_of("twoalg_skeletal")}).code == 0);
    CHECK(run({"alpha", file_of("twoalg_skeletal")}).code == 0);
    CHECK(run({"roundtrip", file_of("strict")}).code == 0);
    CHECK(run({"check-leibniz", file_of("mutant_weight3")}).code == 1);
    CHECK(run({"check-leibniz", file_of("mutant_current_bad2")}).code == 1);
}

TEST_CASE("computation verbs emit parsable results") {
    fs::path adj = write_temp("adj.lcf", fixture_text("virasoro_adjoint"));
    Run d = run({"delta", adj.string(), "--cochain", "phi"});
    CHECK(d.code == 0);
    std::string lcf = d.report["result"]["lcf"];
    // the derivative of the identity cochain is the bracket itself
    CHECK(lcf.find("(D + 2*l1) L") != std::string::npos);

    fs::path sk = write_temp("sk.lcf", fixture_text("skeletal"));
    Run ex = run({"skeletal-extract", sk.string()});
    CHECK(ex.code == 0);
    CHECK_NOTHROW(dsl::parse(ex.report["result"]["lcf"]));

    fs::path st = write_temp("st.lcf", fixture_text("strict"));
    Run cr = run({"strict-to-crossed", st.string()});
    CHECK(cr.code == 0);
    CHECK_NOTHROW(dsl::parse(cr.report["result"]["lcf"]));

    fs::path mk = write_temp("mk.lcf", fixture_text("morphism_kernel"));
    Run sh = run({"shift", mk.string()});
    CHECK(sh.code == 0);
    CHECK_NOTHROW(dsl::parse(sh.report["result"]["lcf"]));

    Run ft = run({"functor-t", sk.string()});
    CHECK(ft.code == 0);
    fs::path ta = write_temp("ta.lcf", ft.report["result"]["lcf"]);
    CHECK(run({"check-2alg", ta.string()}).code == 0);
    Run fs2 = run({"functor-s", ta.string()});
    CHECK(fs2.code == 0);
}

TEST_CASE("solve-preimage through the CLI") {
    ConfRep rep = fixtures::virasoro_weight_module(1);
    Cochain tau = fixtures::tau_fixture(rep);
    Cochain psi = coboundary(rep, tau);
    std::string text = dsl::print_rep("weight1", rep) +
                       dsl::print_cochain("psi", "weight1", psi);
    fs::path f = write_temp("psi.lcf", text);
    Run found = run({"solve-preimage", f.string(), "--cochain", "psi", "--max-ddeg", "2",
                     "--max-ldeg", "2"});
    CHECK(found.code == 0);
    CHECK(found.report["found"] == true);

    // something that is not even a cocycle has no preimage
    std::string bad_text = dsl::print_rep("weight1", rep) +
                           "map badmap : vir, vir -> wt1 vars(l1) { [L, L] = (1) v; }\n"
                           "cochain bad { rep weight1; degree 2; map badmap; }\n";
    fs::path b = write_temp("badpsi.lcf", bad_text);
    Run none = run({"solve-preimage", b.string(), "--cochain", "bad", "--max-ddeg", "2",
                    "--max-ldeg", "2"});
    CHECK(none.code == 1);
    CHECK(none.report["found"] == false);
}

TEST_CASE("explain prints identity formulas") {
    Run r = run({"explain", "leibniz"});
    CHECK(r.code == 0);
    CHECK(r.report["text"].get<std::string>().find("[[x_l1 y]_{l1+l2} z]") != std::string::npos);
    CHECK(run({"explain", "2term.ix"}).code == 0);
    CHECK(run({"explain", "no-such-identity"}).code == 2);
}

TEST_CASE("version and fixtures verbs") {
    CHECK(run({"--version"}).code == 0);
    Run fx = run({"fixtures"});
    CHECK(fx.code == 0);
    CHECK(fx.report["files"].size() >= 15);
}

#ifdef LEIBCONF_FIXTURE_DIR
TEST_CASE("shipped fixture files match the embedded zoo") {
    for (const auto& [name, text] : fixture_files()) {
        CAPTURE(name);
        fs::path p = fs::path(LEIBCONF_FIXTURE_DIR) / (name + ".lcf");
        REQUIRE(fs::exists(p));
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(ss.str() == text);
    }
}
#endif
