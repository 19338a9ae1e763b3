#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wildram/cli.hpp"
#include "wildram/errors.hpp"
#include "wildram/report_io.hpp"

using namespace wildram;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void expect_parse_error(const std::string& text, int line, int col, const std::string& fragment) {
    try {
        parse_job(text);
        ADD_FAILURE() << "no error for:\n" << text;
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), line) << e.what();
        EXPECT_EQ(e.column(), col) << e.what();
        EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
}

}  // namespace

TEST(SeriesLiteral, ParsesAndRenders) {
    auto s = parse_series_literal("p=3 e=1; 2*t^-5 + t^-1 + 1 + O(t^20)");
    EXPECT_EQ(s.field().p(), 3u);
    EXPECT_EQ(s.prec(), 20);
    EXPECT_EQ(s.valuation(), -5);
    EXPECT_EQ(s.coeff(-5), s.field().from_int(2));
    EXPECT_EQ(render_series_literal(s), "p=3 e=1; 2*t^-5 + t^-1 + 1 + O(t^20)");
    EXPECT_EQ(parse_series_literal(render_series_literal(s)), s);

    auto m = parse_series_literal("p=5 e=1; -t^-2 - 3*t + 2t^(-1) + O(t^4)");
    EXPECT_EQ(m.coeff(-2), m.field().from_int(4));
    EXPECT_EQ(m.coeff(-1), m.field().from_int(2));
    EXPECT_EQ(m.coeff(1), m.field().from_int(2));

    auto g = parse_series_literal("p=2 e=3; [1,0,1]*t^-3 + [0,1]*t^-1 + O(t^2)");
    EXPECT_EQ(g.field().e(), 3u);
    EXPECT_EQ(parse_series_literal(render_series_literal(g)), g);

    EXPECT_THROW(parse_series_literal("p=3 e=1; t^-1"), ParseError);
    EXPECT_THROW(parse_series_literal("t^-1 + O(t^3)"), ParseError);
    EXPECT_THROW(parse_series_literal("p=3 e=1; t^-1 + t^3 + O(t^3)"), ParseError);
}

TEST(JobParse, MinimalAndRoundTrip) {
    const std::string text = "field p=2 e=1\nas: t^-3 + t^-1 + O(t^10)\n";
    JobSpec job = parse_job(text);
    EXPECT_EQ(job.field->p(), 2u);
    ASSERT_EQ(job.blocks.size(), 1u);
    EXPECT_EQ(job.blocks[0].kind, BlockKind::AS);

    const std::string rich =
        "# comment\n"
        "field p=3 e=2 modulus=[1,0,1]   # trailing comment\n"
        "prec 120\n"
        "witt2: W2([1,2]*t^-4 + 2*t^-1 + O(t^30) ; t^-7 + [0,1] + O(t^30))\n"
        "witt2: W2(t^-2 + O(t^30) ; p=3 e=2; t^-5 + O(t^30))\n";
    JobSpec a = parse_job(rich);
    JobSpec b = parse_job(render_job(a));
    EXPECT_TRUE(a.field->same_field(*b.field));
    EXPECT_EQ(a.prec, b.prec);
    ASSERT_EQ(a.blocks.size(), b.blocks.size());
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        EXPECT_EQ(a.blocks[i].a.terms(), b.blocks[i].a.terms());
        EXPECT_EQ(a.blocks[i].b.terms(), b.blocks[i].b.terms());
        EXPECT_EQ(a.blocks[i].a.prec(), b.blocks[i].a.prec());
    }

    JobSpec c = parse_job("field p=2\ncover cyclic: W2(x^3 + x ; x^5 + 1)\n");
    JobSpec d = parse_job(render_job(c));
    EXPECT_EQ(c.blocks[0].a.terms(), d.blocks[0].a.terms());
    EXPECT_EQ(c.blocks[0].b.terms(), d.blocks[0].b.terms());
    EXPECT_EQ(d.blocks[0].cover, CoverKind::Cyclic);
}

TEST(JobParse, Errors) {
    expect_parse_error("field p=4 e=1\nas: t^-1 + O(t^5)\n", 1, 7, "p must be prime");
    expect_parse_error("field p=3 e=2 modulus=[1,0,1,1]\nas: O(t^5)\n", 1, 7, "modulus");
    expect_parse_error("field p=3 e=2 modulus=[2,0,1]\nas: O(t^5)\n", 1, 7, "reducible");
    expect_parse_error("field p=3\nas: t^-1 + t^6 + O(t^5)\n", 2, 12, "beyond O(t^5)");
    expect_parse_error("field p=3\nas: t^-1 + 2\n", 2, 13, "O(t^N)");
    expect_parse_error("field p=3\nas: t^-1 + * + O(t^5)\n", 2, 12, "expected coefficient");
    expect_parse_error("field p=3\nfoo: 1\n", 2, 1, "unknown statement");
    expect_parse_error("field p=3\ncover pcyclic: x^2 + x^-1\n", 2, 22, "branch point");
    expect_parse_error("field p=3\ncover hyper: x\n", 2, 7, "unknown cover kind");
    expect_parse_error("field p=3\nas: t^-1 + O(t^5)\nwitt2: W2(t^-1 + O(t^5) ; O(t^5))\n", 3, 1, "same type");
    expect_parse_error("field p=3\n", 2, 1, "no extension block");
    expect_parse_error("field p=3\nas: p=5 e=1; t^-1 + O(t^5)\n", 2, 5, "differs");
    expect_parse_error("field p=3\nwitt2: W2(t^-1 + O(t^5) t^-2)\n", 2, 25, "';'");
}

TEST(ReportJson, RoundTripAndSchema) {
    RamReport r;
    r.group = "Z/9";
    r.case_label = "demo";
    r.upper_jumps = {Rational(1), Rational(7, 3)};
    r.lower_jumps = {Rational(1), Rational(5)};
    r.orders = {9, 3, 1};
    r.different_degree = 28;
    r.status = Status::Undetermined;
    r.notes = {"a", "b"};
    const std::string j = report_to_json(r);
    EXPECT_EQ(report_from_json(j), r);
    EXPECT_NE(j.find("\"7/3\""), std::string::npos);
    const auto keys = {"\"group\"", "\"case\"", "\"upper_jumps\"", "\"lower_jumps\"", "\"orders\"",
                       "\"different_degree\"", "\"genus\"", "\"status\"", "\"notes\""};
    std::size_t last = 0;
    for (const char* k : keys) {
        const std::size_t at = j.find(k);
        ASSERT_NE(at, std::string::npos) << k;
        EXPECT_GT(at + 1, last) << k;
        last = at;
    }
    EXPECT_THROW(report_from_json("{\"group\": 1}"), ParseError);
    EXPECT_THROW(report_from_json("not json"), ParseError);
}

TEST(Run, CommandsAndExitCodes) {
    const JobSpec w = parse_job("field p=3\nwitt2: W2(t^-1 + O(t^20) ; t^-2 + O(t^20))\n");
    RamReport j = run(w, Command::Jumps);
    EXPECT_EQ(j.lower_jumps, (std::vector<Rational>{Rational(1), Rational(7)}));
    EXPECT_EQ(j.upper_jumps, (std::vector<Rational>{Rational(1), Rational(3)}));
    EXPECT_EQ(run(w, Command::Verify).status, Status::OracleConfirmed);
    EXPECT_THROW(run(w, Command::Genus), InvalidInput);

    const JobSpec c = parse_job("field p=2\ncover cyclic: W2(x ; x)\n");
    RamReport g = run(c, Command::Genus);
    EXPECT_EQ(g.genus, std::optional<std::int64_t>(1));
    EXPECT_EQ(run(c, Command::Verify).status, Status::OracleConfirmed);
    EXPECT_THROW(run(c, Command::Reduce), InvalidInput);

    EXPECT_EQ(exit_code(Status::FormulaOnly), 0);
    EXPECT_EQ(exit_code(Status::OracleConfirmed), 0);
    EXPECT_EQ(exit_code(Status::Undetermined), 2);
    EXPECT_EQ(exit_code(Status::DiscrepancyFlag), 3);
}

TEST(Run, CliEndToEnd) {
    auto ok = cli({"jumps", "-", "--json"}, "field p=3\nas: t^-2 + O(t^9)\n");
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(report_from_json(ok.out).lower_jumps, std::vector<Rational>{Rational(2)});

    auto bad = cli({"jumps", "-"}, "field p=3\nas: t^-2 + t^9 + O(t^9)\n");
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("line 2, column 12"), std::string::npos) << bad.err;

    EXPECT_EQ(cli({"genus", "-"}, "field p=3\nas: t^-2 + O(t^9)\n").code, 1);
    EXPECT_EQ(cli({"frobnicate"}).code, 1);
    EXPECT_EQ(cli({"verify"}).code, 1);
    EXPECT_EQ(cli({"jumps", "/nonexistent/job"}).code, 1);

    auto suite = cli({"verify", "--trials", "12", "--seed", "3", "--json"});
    EXPECT_EQ(suite.code, 0) << suite.err;
    EXPECT_EQ(report_from_json(suite.out).status, Status::OracleConfirmed);
    EXPECT_EQ(suite.out, cli({"verify", "--trials", "12", "--seed", "3", "--json"}).out);
}

TEST(Golden, JobFiles) {
    const fs::path dir(WILDRAM_GOLDEN_DIR);
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".job") continue;
        ++seen;
        const std::string text = read_file(entry.path());
        const auto at = text.find("# command: ");
        ASSERT_NE(at, std::string::npos) << entry.path();
        const std::string cmd = text.substr(at + 11, text.find('\n', at) - at - 11);
        fs::path expected = entry.path();
        expected.replace_extension(".json");
        const auto r = cli({cmd, entry.path().string(), "--json"});
        EXPECT_EQ(r.out, read_file(expected)) << entry.path();
        // Byte-identical on a second run.
        EXPECT_EQ(cli({cmd, entry.path().string(), "--json"}).out, r.out);
        const int want = r.out.empty() ? 1 : exit_code(report_from_json(read_file(expected)).status);
        EXPECT_EQ(r.code, want) << entry.path() << "\n" << r.err;
    }
    EXPECT_GE(seen, 10);
}
