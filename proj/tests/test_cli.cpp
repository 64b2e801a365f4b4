#include <catch2/catch_amalgamated.hpp>

#include "hopfkit/cli.hpp"
#include "hopfkit/io.hpp"

#include <filesystem>
#include <sstream>

using namespace hopfkit;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(HOPFKIT_FIXTURES) + "/" + name; }

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "hopfkit-cli-test";
    fs::create_directories(dir);
    return dir / name;
}

bool contains(const std::string& s, const std::string& sub) { return s.find(sub) != std::string::npos; }

}  // namespace

TEST_CASE("io round trips") {
    for (const std::string& n : catalog_hopf_names()) {
        HopfAlgebra h = hopf_by_name(n);
        CHECK(hopf_from_json(parse_json_text(pretty_json(hopf_to_json(h)), n)) == h);
    }
    for (const std::string& n : catalog_action_names()) {
        ModuleAlgebra m = action_by_name(n);
        ModuleAlgebra back = action_from_json(action_to_json(m));
        CHECK(back.action == m.action);
        CHECK(back.algebra == m.algebra);
        CHECK(back.hopf == m.hopf);
        CHECK(back.side == m.side);
    }
    HopfMorphism r = morphism_by_name("restriction:symmetric:3/cyclic:2");
    HopfMorphism rb = morphism_from_json(morphism_to_json(r));
    CHECK(rb.matrix == r.matrix);
    CHECK(rb.source == r.source);
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(group_from_json(group_to_json(s3)) == s3);
    CHECK(rational_from_json("-3/6", "x") == Rational(-1, 2));
    CHECK(rational_to_json(Rational(4, 2)) == "2");
    CHECK_THROWS_AS(rational_from_json("1/0", "x"), ParseError);
    CHECK_THROWS_AS(rational_from_json(1.5, "x"), ParseError);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_json_text("{\n  \"basis\": [\"1\",\n  ]\n}", "f.json");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(contains(e.what(), "f.json:3:"));
    }
    Json j = hopf_to_json(sweedler4());
    j["comult"].push_back(Json::array({9, 0, 0, "1"}));
    try {
        hopf_from_json(j);
        FAIL("expected a schema error");
    } catch (const ParseError& e) {
        CHECK(contains(e.what(), "comult[6]"));
        CHECK(contains(e.what(), "out of range"));
    }
    CHECK_THROWS_AS(hopf_from_json(Json::object({{"basis", {"1"}}})), ParseError);
}

TEST_CASE("fixtures match the catalog") {
    CHECK(read_file(fixture("sweedler4.json")) == run({"catalog", "sweedler4"}).out);
    CHECK(read_file(fixture("function-algebra-symmetric-3.json")) == run({"catalog", "function-algebra:symmetric:3"}).out);
    CHECK(read_file(fixture("restriction-s3-z2.json")) == run({"catalog", "restriction:symmetric:3/cyclic:2"}).out);
    CHECK(read_file(fixture("action-graded.json")) == run({"catalog", "graded", "--kind", "action"}).out);
    CHECK(read_file(fixture("group-s3.json")) == run({"catalog", "symmetric:3", "--kind", "group"}).out);
}

TEST_CASE("verify-hopf") {
    Run ok = run({"verify-hopf", fixture("sweedler4.json")});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "unimodular: false"));
    CHECK(contains(ok.out, "verdict: PASS"));

    Json j = read_json_file(fixture("sweedler4.json"));
    j["comult"][2][3] = "2";  // Δ(x) coefficient on g⊗x
    fs::path bad = scratch("bad-comult.json");
    write_file(bad.string(), pretty_json(j));
    Run r = run({"verify-hopf", bad.string()});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "FAIL"));
    CHECK(contains(r.out, "witness:"));

    Run missing = run({"verify-hopf", "no/such/file.json"});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "I/O error"));

    fs::path broken = scratch("broken.json");
    write_file(broken.string(), "{\n  \"basis\": [\"1\"\n}\n");
    Run b = run({"verify-hopf", broken.string()});
    CHECK(b.code == 2);
    CHECK(contains(b.err, broken.string() + ":3:"));
}

TEST_CASE("dual") {
    fs::path out = scratch("dual-cs3.json"), iso = scratch("iso.json");
    Run r = run({"dual", fixture("function-algebra-symmetric-3.json"), "--out", out.string(), "--iso", iso.string()});
    CHECK(r.code == 0);
    HopfAlgebra d = hopf_from_json(read_json_file(out.string()));
    CHECK(d.dim() == 6);
    CHECK(same_structure(d, hopf_by_name("group-algebra:symmetric:3")));
    CHECK(d.labels().front().rfind("δ:", 0) == 0);
    HopfMorphism m = morphism_from_json(read_json_file(iso.string()));
    CHECK(verify_morphism(m).ok());

    // dual of dual matches the input through the emitted iso
    fs::path dd = scratch("dual-dual.json");
    CHECK(run({"dual", out.string(), "--out", dd.string()}).code == 0);
    CHECK(same_structure(hopf_from_json(read_json_file(dd.string())), m.target));

    Run k = run({"dual", "base-field"});
    CHECK(k.code == 0);
    CHECK(same_structure(hopf_from_json(parse_json_text(k.out, "stdout")), base_field_hopf()));
}

TEST_CASE("integrals, subgroups, invariants, smash") {
    Run i = run({"integrals", "function-algebra:cyclic:3", "--format", "json"});
    CHECK(i.code == 0);
    Json j = parse_json_text(i.out, "stdout");
    CHECK(j["stages"][0]["details"]["left_integrals"] == Json::array({"χ_e"}));
    CHECK(j["stages"][0]["details"]["unimodular"] == true);

    CHECK(run({"subgroup-check", fixture("restriction-s3-z2.json")}).code == 0);
    CHECK(run({"subgroup-check", "--pi", "sweedler-projection"}).code == 0);
    CHECK(run({"subgroup-check", "identity:sweedler4"}).code == 1);  // H₄ is not unimodular

    Run inv = run({"invariants", "translation:cyclic:2", "--pi", "restriction:symmetric:3/cyclic:2", "--format", "json"});
    CHECK(inv.code == 0);
    Json ij = parse_json_text(inv.out, "stdout");
    CHECK(ij["stages"][1]["details"]["dim_invariants"] == 6);  // |G|·dim A/|H|
    Run triv = run({"invariants", "trivial:dual:function-algebra:cyclic:2", "--pi", "restriction:symmetric:3/cyclic:2",
                    "--format", "json"});
    CHECK(parse_json_text(triv.out, "stdout")["stages"][1]["details"]["dim_invariants"] == 3);
    CHECK(run({"invariants", "graded"}).code == 2);

    fs::path s = scratch("smash.json");
    Run sm = run({"smash", fixture("action-graded-involution.json"), "--out", s.string()});
    CHECK(sm.code == 0);
    CHECK(algebra_from_json(read_json_file(s.string())).dim() == 4);
    CHECK(run({"verify-action", "swap"}).code == 0);
    CHECK(run({"verify-action", "swap-broken"}).code == 1);
}

TEST_CASE("morita") {
    CHECK(run({"morita", "--algebra", "trivial:dual:function-algebra:cyclic:2", "--pi", fixture("restriction-s3-z2.json")})
              .code == 0);
    CHECK(run({"morita", "--algebra", fixture("action-translation-cyclic-2.json"), "--hopf",
               fixture("function-algebra-symmetric-3.json"), "--subgroup", fixture("function-algebra-cyclic-2.json"),
               "--pi", fixture("restriction-s3-z2.json"), "--strategy", "reduce-to-invariants"})
              .code == 0);
    CHECK(run({"morita", "--algebra", "graded", "--pi", "sweedler-projection"}).code == 0);

    Json pi = read_json_file(fixture("sweedler-projection.json"));
    pi["matrix"][1][2] = "1";
    fs::path bad = scratch("bad-pi.json");
    write_file(bad.string(), pretty_json(pi));
    Run r = run({"morita", "--algebra", "graded", "--pi", bad.string(), "--format", "json"});
    CHECK(r.code == 1);
    Json j = parse_json_text(r.out, "stdout");
    CHECK(j["stages"][0]["stage"] == "inputs");
    CHECK(j["stages"][0]["verdict"] == "fail");

    CHECK(run({"morita", "--algebra", "graded", "--pi", "sweedler-projection", "--strategy", "sideways"}).code == 2);
}

TEST_CASE("prop32") {
    std::vector<std::string> args{"prop32", "--group", "infinite-dihedral", "--subgroup", "e,s", "--coeff",
                                  "graded-involution", "--seed", "42", "--samples", "200"};
    Run r = run(args);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "eq-3.2-left (200)"));
    CHECK(run({"prop32", "--group", "symmetric:3", "--subgroup", "123, 213", "--coeff", "translation-group:cyclic:2",
               "--samples", "50", "--cross-check"})
              .code == 0);
    Run bad = run({"prop32", "--group", "infinite-dihedral", "--subgroup", "e,s", "--coeff", "graded"});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "inputs"));
    CHECK(run({"prop32", "--group", "infinite-dihedral", "--subgroup", "e,s", "--coeff", "graded-involution",
               "--cross-check", "--samples", "5"})
              .code == 2);
    CHECK(run({"prop32", "--group", "free:2", "--subgroup", "e", "--coeff", "trivial:group-algebra:trivial",
               "--samples", "20"})
              .code == 0);
}

TEST_CASE("determinism") {
    const std::vector<std::vector<std::string>> cmds{
        {"verify-hopf", "sweedler4", "--format", "json"},
        {"morita", "--algebra", "graded", "--pi", "sweedler-projection", "--format", "json", "--seed", "3"},
        {"prop32", "--group", "infinite-dihedral", "--subgroup", "e,s", "--coeff", "graded-involution", "--seed", "9",
         "--samples", "40"},
        {"integrals", "sweedler4"}};
    for (const auto& c : cmds) CHECK(run(c).out == run(c).out);
    auto a = run({"prop32", "--group", "infinite-dihedral", "--subgroup", "e,s", "--coeff", "graded-involution",
                  "--seed", "1", "--samples", "10"});
    auto b = run({"prop32", "--group", "infinite-dihedral", "--subgroup", "e,s", "--coeff", "graded-involution",
                  "--seed", "2", "--samples", "10"});
    CHECK(a.out != b.out);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"verify-hopf"}).code == 2);
    CHECK(run({"verify-hopf", "sweedler4", "--format", "yaml"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"catalog", "no-such-thing"}).code == 2);
    Run list = run({"catalog", "--format", "json"});
    CHECK(list.code == 0);
    CHECK(parse_json_text(list.out, "stdout")["hopf"].size() == catalog_hopf_names().size());
}
