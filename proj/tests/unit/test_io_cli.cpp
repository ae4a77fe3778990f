#include <tclique/cli.hpp>
#include <tclique/gadgets.hpp>
#include <tclique/io.hpp>
#include <tclique/solvers.hpp>

#include "../fixtures.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace tclique;
namespace fs = std::filesystem;

namespace {

const fs::path data = TCLIQUE_TEST_DATA;

struct Run
{
    int code = 0;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string path(const char * name) { return (data / name).string(); }

class TempDir
{
public:
    TempDir()
    {
        dir_ = fs::temp_directory_path() / ("tclique-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    ~TempDir() { fs::remove_all(dir_); }
    std::string operator/(const std::string & name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

ParseError parse_error(std::string_view text)
{
    try {
        parse_tournament(text, "t");
    } catch (const ParseError & e) {
        return e;
    }
    ADD_FAILURE() << "accepted: " << text;
    return ParseError("t", 0, 0, "");
}

void expect_envelope(const Json & j, const std::string & command)
{
    EXPECT_EQ(j.at("command"), command);
    EXPECT_TRUE(j.at("inputs").is_array());
    for (auto & in : j.at("inputs")) {
        EXPECT_TRUE(in.at("name").is_string());
        EXPECT_EQ(in.at("fnv1a64").get<std::string>().size(), 16u);
    }
    EXPECT_TRUE(j.at("result").is_object());
    EXPECT_TRUE(j.at("elapsed_ms").is_number());
    EXPECT_TRUE(j.contains("nodes_explored"));
    auto status = j.at("budget_status").get<std::string>();
    EXPECT_TRUE(status == "ok" || status == "exhausted" || status == "unbounded") << status;
    EXPECT_EQ(j.at("version"), version_string);
}

} // namespace

TEST(Trn, ParsesTextAndJsonMirror)
{
    auto t = parse_tournament("tournament 3\n010\n001\n100\n");
    EXPECT_EQ(t, c3());
    EXPECT_EQ(parse_tournament(R"({"n": 3, "rows": ["010", "001", "100"]})"), c3());
    EXPECT_EQ(parse_tournament(R"({"n": 3, "rows": [[0,1,0],[0,0,1],[1,0,0]]})"), c3());
    EXPECT_EQ(parse_tournament(format_trn(r5())), r5());
    EXPECT_EQ(parse_tournament(tournament_json(r5()).dump()), r5());
}

TEST(Trn, ErrorsCarryLineAndColumn)
{
    auto anti = parse_error("tournament 2\n01\n10\n");
    EXPECT_EQ(anti.line(), 3u);
    EXPECT_EQ(anti.column(), 1u);
    EXPECT_NE(std::string(anti.what()).find("antisymmetr"), std::string::npos);

    auto diag = parse_error("tournament 2\n11\n00\n");
    EXPECT_EQ(diag.line(), 2u);
    EXPECT_EQ(diag.column(), 1u);

    auto width = parse_error("tournament 3\n010\n01\n100\n");
    EXPECT_EQ(width.line(), 3u);

    auto rows = parse_error("tournament 3\n010\n001\n");
    EXPECT_GT(rows.line(), 0u);

    auto header = parse_error("tourney 3\n");
    EXPECT_EQ(header.line(), 1u);

    auto bad = parse_error("tournament 2\n0x\n00\n");
    EXPECT_EQ(bad.line(), 2u);
    EXPECT_EQ(bad.column(), 2u);

    EXPECT_THROW(parse_tournament(R"({"n": 2, "rows": ["01"]})"), ParseError);
    EXPECT_THROW(load_tournament(data / "missing.trn"), std::runtime_error);
}

TEST(Trn, AssetMatchesEmbeddedGadget)
{
    EXPECT_EQ(load_tournament(data / "var_base.trn"), var_base().tournament);
    EXPECT_EQ(load_tournament(data / "r5.trn"), r5());
    EXPECT_EQ(load_tournament(data / "w7.trn"), fixture::surrogate_w());
}

TEST(Trn, SaveLoadRoundtripIsBitIdentical)
{
    TempDir tmp;
    auto d2 = pi(c3(), Ordering::identity(3)).tournament;
    for (auto name : {"d2.trn", "d2.json"}) {
        save_tournament(d2, tmp / name);
        auto back = load_tournament(tmp / name);
        EXPECT_EQ(back, d2);
        auto first = read_file(tmp / name);
        save_tournament(back, tmp / name);
        EXPECT_EQ(read_file(tmp / name), first);
    }
    EXPECT_EQ(read_file(tmp / "d2.json").front(), '{');
}

TEST(Digest, KnownFnvValues)
{
    EXPECT_EQ(digest(""), "cbf29ce484222325");
    EXPECT_EQ(digest("a"), "af63dc4c8601ec8c");
    EXPECT_EQ(digest("foobar"), "85944171f73967e8");
}

TEST(Orderings, ParseForms)
{
    EXPECT_EQ(parse_ordering("[2, 0, 1]"), Ordering({2, 0, 1}));
    EXPECT_EQ(parse_ordering("2 0 1\n"), Ordering({2, 0, 1}));
    EXPECT_EQ(parse_ordering("2,0,1"), Ordering({2, 0, 1}));
    EXPECT_THROW(parse_ordering("0 0 1"), ParseError);
    EXPECT_THROW(parse_ordering("[0, 0, 1]"), ParseError);
    EXPECT_THROW(parse_ordering("0 a"), ParseError);
    EXPECT_EQ(ordering_json(Ordering({2, 0, 1}), true), Json({3, 1, 2}));
}

TEST(Json, PassRoundtrip)
{
    PassInstance p{4, {{0, 1, 2}, {3}}};
    auto back = pass_from_json(pass_json(p));
    EXPECT_EQ(back.alphabet, 4u);
    EXPECT_EQ(back.forbidden, p.forbidden);
    EXPECT_THROW(pass_from_json(Json::parse(R"({"alphabet": 2, "forbidden": [[0, 7]]})")), ParseError);
}

TEST(Json, LandmarksRoundtrip)
{
    auto w = fixture::surrogate_w();
    auto inst = build(fixture::two_clauses(), w, omega(w).witness);
    auto back = instance_from_json(inst.tournament, Json::parse(landmarks_json(inst).dump()));
    EXPECT_EQ(back.var_blocks.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(back.var_blocks[i].span, inst.var_blocks[i].span);
        EXPECT_EQ(back.var_blocks[i].f_plus, inst.var_blocks[i].f_plus);
        EXPECT_EQ(back.var_blocks[i].f_minus, inst.var_blocks[i].f_minus);
    }
    EXPECT_EQ(back.separator, inst.separator);
    for (std::size_t j = 0; j < 2; ++j)
        EXPECT_EQ(back.clause_blocks[j].e, inst.clause_blocks[j].e);
    EXPECT_EQ(back.reversed_arcs, inst.reversed_arcs);
    EXPECT_TRUE(audit_reduction(back).ok);
    std::vector<bool> nu{true, false, true};
    EXPECT_EQ(ordering_from_assignment(back, nu), ordering_from_assignment(inst, nu));
}

TEST(Json, EnvelopeFields)
{
    ReportEnvelope e;
    e.command = "omega";
    e.inputs = {{"t.trn", digest("x")}};
    e.result["value"] = 2;
    e.nodes_explored = 7;
    auto j = envelope_json(e);
    expect_envelope(j, "omega");
    EXPECT_EQ(j["nodes_explored"], 7);
    EXPECT_EQ(j["inputs"][0]["name"], "t.trn");
}

TEST(Cli, DecisionExitCodes)
{
    auto yes = run({"omega-decide", "--k", "2", path("r5.trn")});
    EXPECT_EQ(yes.code, cli::ok);
    auto j = yes.json();
    expect_envelope(j, "omega-decide");
    EXPECT_EQ(j["result"]["decision"], true);
    EXPECT_EQ(j["result"]["witness"], Json({0, 1, 2, 3, 4}));
    EXPECT_EQ(j["inputs"][0]["fnv1a64"], digest(read_file(data / "r5.trn")));

    auto no = run({"omega-decide", "--k", "1", path("r5.trn")});
    EXPECT_EQ(no.code, cli::negative);
    EXPECT_EQ(no.json()["result"]["decision"], false);

    EXPECT_EQ(run({"chi-decide", "--k", "1", path("r5.trn")}).code, cli::negative);
    EXPECT_EQ(run({"chi-decide", "--k", "2", path("r5.trn")}).code, cli::ok);
    EXPECT_EQ(run({"forcing", path("r5.trn"), "--u", "0", "--v", "1", "--k", "2"}).code, cli::negative);
}

TEST(Cli, InputErrors)
{
    TempDir tmp;
    auto wide = run({"reduce", "--cnf", path("wide.cnf"), "--gadget", path("w7.trn")});
    EXPECT_EQ(wide.code, cli::input_error);
    EXPECT_NE(wide.err.find("4 literals"), std::string::npos);

    EXPECT_EQ(run({"omega", path("missing.trn")}).code, cli::input_error);
    EXPECT_EQ(run({"omega"}).code, cli::input_error);
    EXPECT_EQ(run({"no-such-verb"}).code, cli::input_error);
    EXPECT_EQ(run({"omega-decide", "--k", "0", path("r5.trn")}).code, cli::input_error);

    write_file(tmp / "bad.trn", "tournament 2\n01\n10\n");
    auto bad = run({"omega", tmp / "bad.trn"});
    EXPECT_EQ(bad.code, cli::input_error);
    EXPECT_NE(bad.err.find(":3:1"), std::string::npos) << bad.err;

    auto refused = run({"construct", "amplifier", path("r5.trn"), "--vertex-budget", "100"});
    EXPECT_EQ(refused.code, cli::input_error);
    EXPECT_EQ(refused.json()["result"]["sizing"]["total_vertices"], "508725");
}

TEST(Cli, BudgetExhaustion)
{
    auto r = run({"--budget-ms", "0", "search-min-omega", "--k", "4", "--nmax", "9"});
    EXPECT_EQ(r.code, cli::budget_exhausted);
    EXPECT_EQ(r.json()["budget_status"], "exhausted");

    ::setenv(cli::budget_env, "0", 1);
    auto env = run({"search-min-omega", "--k", "4", "--nmax", "9"});
    ::unsetenv(cli::budget_env);
    EXPECT_EQ(env.code, cli::budget_exhausted);
    EXPECT_EQ(env.json()["budget_status"], "exhausted");

    auto ok = run({"--budget-ms", "60000", "omega", path("r5.trn")});
    EXPECT_EQ(ok.code, cli::ok);
    EXPECT_EQ(ok.json()["budget_status"], "ok");
}

TEST(Cli, OutputIndependentOfThreads)
{
    auto one = run({"--threads", "1", "orderings", path("var_base.trn")}).json()["result"];
    auto four = run({"--threads", "4", "orderings", path("var_base.trn")}).json()["result"];
    EXPECT_EQ(one, four);
    EXPECT_EQ(one["count"], 39);
}

TEST(Cli, OneBasedRendering)
{
    auto zero = run({"gadget", "show", "clause"}).json()["result"];
    auto paper = run({"--render", "paper", "gadget", "show", "clause"}).json()["result"];
    EXPECT_EQ(zero["certified_orderings"][1]["ordering"], Json({3, 6, 4, 7, 0, 1, 5, 2}));
    EXPECT_EQ(paper["certified_orderings"][1]["ordering"], Json({4, 7, 5, 8, 1, 2, 6, 3}));

    auto table = run({"--render", "paper", "check-rules", path("r5.trn"), "--first-vertex", "0"});
    EXPECT_EQ(table.code, cli::ok);
    EXPECT_EQ(table.out.rfind("ordering\tx\tbroken rule\n", 0), 0u);
}

TEST(Cli, GadgetAndRuleReports)
{
    auto v = run({"gadget", "verify", "var"});
    EXPECT_EQ(v.code, cli::ok);
    auto j = v.json();
    expect_envelope(j, "gadget verify");
    EXPECT_EQ(j["result"]["minimum_orderings"], 39);
    EXPECT_EQ(j["result"]["property_holds"], true);

    auto rules = run({"check-rules", path("r5.trn"), "--first-vertex", "0"}).json()["result"];
    EXPECT_EQ(rules["verdict"], "excluded");
    EXPECT_EQ(rules["cells"].size(), 45u);
}

TEST(Cli, ConstructVerbs)
{
    TempDir tmp;
    auto dk = run({"construct", "dk", "--k", "3", "--sizing-only"});
    EXPECT_EQ(dk.code, cli::ok);
    EXPECT_EQ(dk.json()["result"]["sizing"]["total_vertices"], "380200869452968622504955472103804664063");

    auto d2 = run({"construct", "dk", "--k", "2", "--out", tmp / "d2.trn", "--layout", tmp / "d2.layout.json"});
    EXPECT_EQ(d2.code, cli::ok);
    EXPECT_EQ(load_tournament(tmp / "d2.trn"), pi(c3(), Ordering::identity(3)).tournament);
    auto layout = Json::parse(read_file(tmp / "d2.layout.json"));
    EXPECT_EQ(layout["copies"].size(), 21u);

    auto t = run({"construct", "tt", "--n", "4", "--out", tmp / "tt4.json"});
    EXPECT_EQ(t.code, cli::ok);
    EXPECT_EQ(load_tournament(tmp / "tt4.json"), tt(4));
}

TEST(Cli, ReductionPipeline)
{
    TempDir tmp;
    auto reduce = run({"reduce", "--cnf", path("phi.cnf"), "--gadget", path("w7.trn"), "--out", tmp / "i.trn", "--landmarks", tmp / "i.json"});
    ASSERT_EQ(reduce.code, cli::ok) << reduce.err;
    EXPECT_EQ(reduce.json()["result"]["vertices"], 90);
    EXPECT_EQ(reduce.json()["result"]["reversed_arcs"], 24);

    auto common = std::vector<std::string>{"--instance", tmp / "i.trn", "--landmarks", tmp / "i.json"};
    auto to_ord = common;
    to_ord.insert(to_ord.begin(), {"witness", "to-ordering"});
    to_ord.insert(to_ord.end(), {"--assign", "1,0,1", "--out", tmp / "o.json"});
    ASSERT_EQ(run(to_ord).code, cli::ok);

    auto verify = run({"verify-ordering", "--instance", tmp / "i.trn", "--ordering", tmp / "o.json"});
    EXPECT_EQ(verify.code, cli::ok);
    EXPECT_EQ(verify.json()["result"]["k4_free"], true);

    auto back = common;
    back.insert(back.begin(), {"witness", "to-assignment"});
    back.insert(back.end(), {"--ordering", tmp / "o.json"});
    EXPECT_EQ(run(back).json()["result"]["assignment"], Json({true, false, true}));

    auto unsat = to_ord;
    unsat[unsat.size() - 3] = "1,1,0";
    EXPECT_EQ(run(unsat).code, cli::input_error);

    // Reversing the whole ordering breaks the K4-free guarantee.
    auto ord = parse_ordering(read_file(tmp / "o.json"));
    write_file(tmp / "rev.json", ordering_json(ord.reversed()).dump());
    auto rev = run({"verify-ordering", "--instance", tmp / "i.trn", "--ordering", tmp / "rev.json"});
    EXPECT_EQ(rev.code, cli::negative);
    EXPECT_EQ(rev.json()["result"]["k4_free"], false);
}

TEST(Cli, PassVerbs)
{
    TempDir tmp;
    auto from = run({"pass", "from-tournament", path("r5.trn"), "--out", tmp / "p.json"});
    EXPECT_EQ(from.code, cli::ok);
    EXPECT_EQ(from.json()["result"]["forbidden"].size(), 5u);
    auto solve = run({"pass", "solve", tmp / "p.json"});
    EXPECT_EQ(solve.code, cli::ok);
    EXPECT_EQ(solve.json()["result"]["permutation"], Json({0, 1, 2, 3, 4}));

    write_file(tmp / "none.json", R"({"alphabet": 1, "forbidden": [[0]]})");
    auto none = run({"pass", "solve", tmp / "none.json"});
    EXPECT_EQ(none.code, cli::negative);
    EXPECT_TRUE(none.json()["result"]["permutation"].is_null());
}

TEST(Cli, EveryVerbEmitsEnvelope)
{
    TempDir tmp;
    std::vector<std::pair<std::string, std::vector<std::string>>> cases{
        {"omega", {"omega", path("r5.trn")}},
        {"chi", {"chi", path("r5.trn")}},
        {"orderings", {"orderings", path("r5.trn"), "--first", "0"}},
        {"search-min-omega", {"search-min-omega", "--k", "2", "--nmax", "4"}},
        {"construct c3", {"construct", "c3"}},
        {"construct pi", {"construct", "pi", path("r5.trn"), "--sizing-only"}},
        {"gadget show", {"gadget", "show", "r5"}},
        {"pass from-tournament", {"pass", "from-tournament", path("r5.trn")}},
    };
    for (auto & [command, args] : cases) {
        auto r = run(args);
        EXPECT_EQ(r.code, cli::ok) << command << ": " << r.err;
        expect_envelope(r.json(), command);
    }
}

TEST(Cli, HelpAndVersion)
{
    EXPECT_EQ(run({"--help"}).code, cli::ok);
    auto v = run({"--version"});
    EXPECT_EQ(v.code, cli::ok);
    EXPECT_NE((v.out + v.err).find(version_string), std::string::npos);
}
