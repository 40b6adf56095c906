#include "test_support.hpp"

#include "gtpoly_cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace gtpoly;
using gtpoly::io::json;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args, const std::string &stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int status = cli::run(args, in, out, err);
    return {status, out.str(), err.str()};
}

std::string face_json() { return io::to_json(instances::face_pattern()).dump(); }

} // namespace

TEST(Cli, FaceDimOnFacePattern) {
    const auto r = run({"face-dim", "--json", face_json()});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.parsed(), json::parse(R"({"face_dimension": 2})"));
}

TEST(Cli, ReadsStdin) {
    const auto r = run({"face-dim"}, face_json());
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.parsed()["face_dimension"], 2);
    const auto dash = run({"oracle-face-dim", "-"}, face_json());
    EXPECT_EQ(dash.parsed()["face_dimension"], 2);
}

TEST(Cli, FamilyTwo) {
    const auto r = run({"family", "--k", "2"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = r.parsed();
    EXPECT_EQ(j["|det|"], 2);
    EXPECT_EQ(j["q"], 2);
    EXPECT_EQ(io::pattern_from_json(j["pattern"]), family_pattern(2));
}

TEST(Cli, FamilyEven) {
    const auto r = run({"family", "--k", "3", "--even"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.parsed()["n"], 8);
    EXPECT_EQ(r.parsed()["q"], 3);
}

TEST(Cli, FamilyRejectsKOne) { EXPECT_EQ(run({"family", "--k", "1"}).status, 2); }

TEST(Cli, ValidateMalformedRows) {
    const auto r = run({"validate", "--json", R"({"n": 2, "rows": [[1, 0], [1, 2]]})"});
    EXPECT_EQ(r.status, 2);
    EXPECT_FALSE(r.parsed()["valid"]);
    EXPECT_FALSE(r.parsed()["violations"].empty());
}

TEST(Cli, ValidateViolations) {
    const auto r = run({"validate", "--json", R"({"n": 2, "rows": [["3/2", "1/2"], [3]]})"});
    EXPECT_EQ(r.status, 2);
    const auto v = r.parsed()["violations"];
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0]["cell"], json::parse("[1,1]"));
    EXPECT_EQ(v[0]["other"], json::parse("[1,2]"));
    EXPECT_EQ(run({"validate", "--json", face_json()}).status, 0);
}

TEST(Cli, Errors) {
    EXPECT_EQ(run({"face-dim", "--json", "{not json"}).status, 2);
    EXPECT_EQ(run({"no-such-command"}).status, 2);
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"face-dim", "/nonexistent/file.json"}).status, 2);
    EXPECT_EQ(run({"face-dim", "--json", R"({"n": 2, "rows": [[1, 0], ["2/4"]]})"}).status, 2);
    EXPECT_EQ(run({"face-dim", "--json", R"({"n": 2, "rows": [[1, 0], [0.5]]})"}).status, 2);
    const auto guard = run({"vertices", "--json", io::to_json(family_spec(3)).dump()});
    EXPECT_EQ(guard.status, 2);
    EXPECT_NE(guard.err.find("scale guard"), std::string::npos);
    EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, NonMemberSpec) {
    json j = {{"pattern", io::to_json(instances::face_pattern())}, {"spec", io::to_json(family_spec(2))}};
    EXPECT_EQ(run({"face-dim", "--json", j.dump()}).status, 2);
}

TEST(Cli, TilingMatrixAndBasis) {
    const auto m = run({"matrix", "--json", face_json()});
    EXPECT_EQ(m.parsed()["matrix"], json::parse("[[1,1,0,0,0],[0,1,1,1,0],[0,1,0,0,1]]"));
    const auto t = run({"tiling", "--json", face_json()});
    EXPECT_EQ(t.parsed()["free"].size(), 5u);
    const auto b = run({"face-basis", "--json", face_json()});
    ASSERT_EQ(b.status, 0) << b.err;
    EXPECT_EQ(b.parsed()["face_dimension"], 2);
    EXPECT_EQ(b.parsed()["scale"], "1/6");
    const auto v = run({"is-vertex", "--json", face_json()});
    EXPECT_EQ(v.parsed()["is_vertex"], false);
}

TEST(Cli, CertificateAndConstructRoundTrip) {
    const auto fam = run({"family", "--k", "2"}).parsed();
    const auto cert = run({"certificate", "--json", json{{"pattern", fam["pattern"]}}.dump()});
    ASSERT_EQ(cert.status, 0) << cert.err;
    const auto c = cert.parsed();
    EXPECT_FALSE(c["integral"]);
    EXPECT_EQ(c["certificate"]["q"], 2);
    EXPECT_EQ(c["certificate"]["xi"], json::parse("[1,1,1]"));

    json input = {{"pattern", json::parse(R"({"n":5,"rows":[[2,2,1,0,0],[2,1,0,0],[1,1,0],[1,0],[1]]})")},
                  {"xi", c["certificate"]["xi"]},
                  {"q", 2},
                  {"witness", fam["pattern"]}};
    const auto built = run({"construct", "--json", input.dump()});
    ASSERT_EQ(built.status, 0) << built.err;
    EXPECT_EQ(built.parsed()["pattern"], fam["pattern"]);

    input["xi"] = json::parse("[0,0,0]");
    const auto drift = run({"construct", "--json", input.dump()});
    EXPECT_EQ(drift.status, 3);
    EXPECT_NE(drift.err.find("drift"), std::string::npos);
}

TEST(Cli, IntegralCertificateIsNull) {
    const PolytopeSpec point({2, 1, 0}, {2, 1, 0});
    json j = {{"pattern", io::to_json(enumerate_lattice_points(point).at(0))}};
    const auto r = run({"certificate", "--json", j.dump()});
    EXPECT_TRUE(r.parsed()["integral"]);
    EXPECT_TRUE(r.parsed()["certificate"].is_null());
}

TEST(Cli, Counting) {
    const std::string spec = R"({"lambda":[2,2,1,0,0],"mu":[1,1,1,1,1]})";
    EXPECT_EQ(run({"kostka", "--json", spec}).parsed()["kostka"], 5);
    const auto pts = run({"points", "--json", spec}).parsed();
    EXPECT_EQ(pts["count"], 5);
    for (const auto &p : pts["points"])
        EXPECT_EQ(run({"validate", "--json", p.dump()}).status, 0);
    const auto e = run({"ehrhart", "--mmax", "4", "--json", spec});
    ASSERT_EQ(e.status, 0) << e.err;
    EXPECT_TRUE(e.parsed()["polynomial"]["verified"]);
    EXPECT_EQ(e.parsed()["values"].size(), 4u);
    EXPECT_EQ(e.parsed()["values"][0]["f"], 5);
    const auto bad = run({"ehrhart", "--degree", "0", "--json", R"({"lambda":[2,1,0],"mu":[1,1,1]})"});
    EXPECT_EQ(bad.status, 3);
}

TEST(Cli, OracleCommands) {
    const std::string spec = io::to_json(family_spec(2)).dump();
    const auto v = run({"vertices", "--json", spec}).parsed();
    bool found = false;
    for (const auto &p : v["vertices"])
        found = found || io::pattern_from_json(p) == family_pattern(2);
    EXPECT_TRUE(found);
    const auto s = run({"sample", "--count", "6", "--seed", "4", "--json", spec});
    ASSERT_EQ(s.status, 0) << s.err;
    EXPECT_EQ(s.parsed()["points"].size(), 6u);
    for (const auto &p : s.parsed()["points"]) {
        json in = {{"pattern", p}, {"spec", json::parse(spec)}};
        EXPECT_EQ(run({"face-dim", "--json", in.dump()}).parsed(), run({"oracle-face-dim", "--json", in.dump()}).parsed());
    }
}

TEST(Cli, ScaleGuardOverride) {
    const std::string spec = io::to_json(PolytopeSpec({2, 1, 0}, {1, 1, 1})).dump();
    ::setenv("GTPOLY_SCALE_GUARD", "2", 1);
    EXPECT_EQ(run({"vertices", "--json", spec}).status, 2);
    ::setenv("GTPOLY_SCALE_GUARD", "banana", 1);
    EXPECT_EQ(run({"vertices", "--json", spec}).status, 2);
    ::unsetenv("GTPOLY_SCALE_GUARD");
    EXPECT_EQ(run({"vertices", "--json", spec}).status, 0);
}

TEST(Cli, TableauCommands) {
    const auto t = run({"to-tableau", "--json", io::to_json(instances::tableau_pattern()).dump()});
    ASSERT_EQ(t.status, 0) << t.err;
    EXPECT_EQ(t.parsed()["tableau"], json::parse("[[1,1,1,3,5,5],[2,3,5],[3,4],[5,5]]"));
    EXPECT_EQ(t.parsed()["content"], json::parse("[3,1,3,1,5]"));
    const auto back = run({"from-tableau", "--json", t.out});
    ASSERT_EQ(back.status, 0) << back.err;
    EXPECT_EQ(io::pattern_from_json(back.parsed()["pattern"]), instances::tableau_pattern());
    const auto bare = run({"from-tableau", "--n", "5", "--json", "[[1,1,1,3,5,5],[2,3,5],[3,4],[5,5]]"});
    EXPECT_EQ(bare.parsed()["spec"], io::to_json(instances::tableau_spec()));
    EXPECT_EQ(run({"from-tableau", "--json", "[[1]]"}).status, 2);
    EXPECT_EQ(run({"from-tableau", "--n", "1", "--json", "[[2]]"}).status, 2);
}

TEST(Cli, Embed) {
    const auto r = run({"embed", "--json", face_json()});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.parsed()["spec"], json::parse(R"({"lambda":[6,5,3,2,0,0],"mu":[0,4,1,4,5,2]})"));
    const auto again = run({"face-dim", "--json", r.out});
    EXPECT_EQ(again.parsed()["face_dimension"], 2);
}

TEST(Cli, BoundIsExact) {
    EXPECT_EQ(run({"bound", "--n", "5"}).parsed()["bound"], 262144);
    EXPECT_EQ(run({"bound", "--n", "12"}).parsed()["bound"], pow_of(Integer(11), 65).get_str());
    EXPECT_EQ(run({"bound", "--n", "1"}).status, 2);
}

TEST(Cli, ReproTable) {
    const auto r = run({"repro-paper"});
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.parsed()["passed"]);
    const auto table = run({"repro-paper", "--pretty"});
    EXPECT_EQ(table.status, 0);
    EXPECT_NE(table.out.find("PASS"), std::string::npos);
    EXPECT_EQ(table.out.find("FAIL"), std::string::npos);
}

TEST(Cli, PrettyAndOutputFile) {
    const auto r = run({"family", "--k", "2", "--pretty"});
    EXPECT_NE(r.out.find("pattern:"), std::string::npos);
    EXPECT_NE(r.out.find("3/2"), std::string::npos);
    const auto path = std::filesystem::temp_directory_path() / "gtpoly_cli_test.json";
    EXPECT_EQ(run({"kostka", "--json", R"({"lambda":[1,0],"mu":[0,1]})", "--output", path.string()}).status, 0);
    std::ifstream f(path);
    EXPECT_EQ(json::parse(f)["kostka"], 1);
    std::filesystem::remove(path);
}

TEST(Cli, EveryPatternOutputIsAcceptedBack) {
    const std::string pattern = face_json();
    for (const auto &cmd : {"tiling", "matrix", "face-dim", "is-vertex", "face-basis", "embed", "oracle-face-dim"}) {
        const auto r = run({cmd, "--json", pattern});
        EXPECT_EQ(r.status, 0) << cmd << ": " << r.err;
        EXPECT_NO_THROW(json::parse(r.out)) << cmd;
    }
    const auto basis = run({"face-basis", "--json", pattern}).parsed();
    for (const auto &d : basis["face_directions"])
        EXPECT_NO_THROW(io::pattern_from_json(d));
}
