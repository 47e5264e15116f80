#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "schema_check.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

// Runs the CLI binary through the shell, merging stderr into the capture.
RunResult run(const std::string& args) {
    std::string cmd = std::string(PARTLOG_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(PARTLOG_ROOT) + "/schemas/" + name);
    REQUIRE(in.good());
    json schema;
    in >> schema;
    return schema;
}

std::string corpus_path() { return std::string(PARTLOG_ROOT) + "/data/paper.taut"; }

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0, at = 0;
    while ((at = haystack.find(needle, at)) != std::string::npos) {
        ++count;
        at += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("cli eval reproduces the worked example") {
    for (const char* method : {"graph", "closure", "blocks"}) {
        RunResult r = run(std::string("eval \"s -> p\" -u a,b,c,d -b \"s={a|b,c,d}\" "
                                      "-b \"p={a,b|c,d}\" --method ") +
                          method);
        CHECK(r.code == 0);
        CHECK(r.out == "{a,b|c|d}\n");
    }
}

TEST_CASE("cli eval of the join at the bottom") {
    RunResult r = run("eval \"x | y\" -u a,b -b \"x={a,b}\" -b \"y={a,b}\"");
    CHECK(r.code == 0);
    CHECK(r.out == "{a,b}\n");
}

TEST_CASE("cli eval json validates against the shipped schema") {
    RunResult r = run("eval \"s -> p\" -u a,b,c,d -b \"s={a|b,c,d}\" -b \"p={a,b|c,d}\" "
                      "--format json --emit-graph dot");
    REQUIRE(r.code == 0);
    json out = json::parse(r.out);
    std::string error;
    CHECK_MESSAGE(schemacheck::validate(out, load_schema("eval_result.schema.json"), &error),
                  error);
    CHECK(out["result"]["text"] == "{a,b|c|d}");
    CHECK(out["result"]["rgs"] == json::array({0, 0, 1, 2}));
}

TEST_CASE("cli eval emits a deterministic dot graph with one kept link") {
    std::string args = "eval \"s -> p\" -u a,b,c,d -b \"s={a|b,c,d}\" -b \"p={a,b|c,d}\" "
                       "--emit-graph dot";
    RunResult first = run(args);
    RunResult second = run(args);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(count_occurrences(first.out, "style=bold") == 1);
    CHECK(first.out.find("\"a\" -- \"b\" [label=\"T_s,F_p\", style=bold]") != std::string::npos);
    // All six K4 edges are present.
    CHECK(count_occurrences(first.out, " -- ") == 6);
}

TEST_CASE("cli eval writes dot to a file with --graph-out") {
    auto path = std::filesystem::temp_directory_path() / "partlog_cli_graph.dot";
    std::filesystem::remove(path);
    RunResult r = run("eval \"s -> p\" -u a,b,c,d -b \"s={a|b,c,d}\" -b \"p={a,b|c,d}\" "
                      "--emit-graph dot --graph-out " +
                      path.string());
    REQUIRE(r.code == 0);
    CHECK(r.out == "{a,b|c|d}\n");  // the graph went to the file
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(count_occurrences(buf.str(), "style=bold") == 1);
    std::filesystem::remove(path);
}

TEST_CASE("cli eval error paths exit 2") {
    CHECK(run("eval \"x + y\" -u a,b -b \"x=0\" -b \"y=0\" --method blocks").code == 2);
    CHECK(run("eval \"s -> \" -u a,b").code == 2);                      // parse error
    CHECK(run("eval \"s\" -u a,b -b \"s={a,z}\"").code == 2);           // undeclared element
    CHECK(run("eval \"s\"").code == 2);                                 // no universe
    CHECK(run("eval \"s\" -u a,b").code == 2);                          // unbound variable
    RunResult parse_err = run("eval \"s -> )\" -u a,b -b \"s=0\"");
    CHECK(parse_err.code == 2);
    CHECK(parse_err.out.find(")") != std::string::npos);  // names the offending token
}

TEST_CASE("cli taut on the bundled corpus") {
    RunResult text = run("taut " + corpus_path() + " --max-n 4");
    CHECK(text.code == 1);  // refutations exist
    CHECK(text.out.find("modus_ponens") != std::string::npos);
    CHECK(text.out.find("PartitionRefuted") != std::string::npos);

    RunResult js = run("taut " + corpus_path() + " --max-n 4 --format json");
    CHECK(js.code == 1);
    json report = json::parse(js.out);
    std::string error;
    CHECK_MESSAGE(schemacheck::validate(report, load_schema("taut_report.schema.json"), &error),
                  error);

    // Text and JSON report identical verdicts.
    for (const json& row : report["rows"]) {
        std::string name = row["name"].get<std::string>();
        std::string kind = row["partition"]["kind"].get<std::string>();
        std::size_t at = text.out.find(name);
        REQUIRE(at != std::string::npos);
        std::size_t line_end = text.out.find('\n', at);
        CHECK(text.out.substr(at, line_end - at).find(kind) != std::string::npos);
    }
}

TEST_CASE("cli taut inline formula") {
    CHECK(run("taut \"(s & (s -> p)) -> p\"").code == 0);
    CHECK(run("taut \"((s -> p) -> s) -> s\"").code == 1);
    CHECK(run("taut /no/such/file.taut").code == 2);
}

TEST_CASE("cli taut workers flag keeps output identical") {
    RunResult serial = run("taut " + corpus_path() + " --format json");
    RunResult parallel = run("taut " + corpus_path() + " --format json --workers 4");
    CHECK(serial.code == parallel.code);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("cli taut corpus with an unparsable line") {
    auto path = std::filesystem::temp_directory_path() / "partlog_bad.taut";
    {
        std::ofstream out(path);
        out << "good: x -> x\nbad: x -> )\n";
    }
    RunResult r = run("taut " + path.string() + " --format json");
    CHECK(r.code == 2);  // errors dominate
    json report = json::parse(r.out);
    CHECK(report["rows"][1].contains("error"));
    std::filesystem::remove(path);
}

TEST_CASE("cli structures core") {
    RunResult r = run("structures core -p \"{a,b|c}\" -u a,b,c");
    CHECK(r.code == 0);
    CHECK(r.out.find("members (2)") != std::string::npos);

    RunResult one = run("structures core -p \"1\" -u a,b");
    CHECK(one.code == 0);
    CHECK(one.out.find("members (1)") != std::string::npos);

    RunResult js = run("structures core -p \"{a,b|c}\" -u a,b,c --format json");
    json report = json::parse(js.out);
    std::string error;
    CHECK_MESSAGE(schemacheck::validate(report, load_schema("core_report.schema.json"), &error),
                  error);
    CHECK(report["member_count"] == 2);
}

TEST_CASE("cli structures embed") {
    RunResult r = run("structures embed -n 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("all laws pass") != std::string::npos);
    CHECK(r.out.find("core members: 4 (expected 4)") != std::string::npos);

    RunResult js = run("structures embed -n 2 --format json");
    json report = json::parse(js.out);
    std::string error;
    CHECK_MESSAGE(schemacheck::validate(report, load_schema("embed_report.schema.json"), &error),
                  error);
    CHECK(report["all_pass"] == true);
}

TEST_CASE("cli explore at n=2 terminates, saturates, and is reproducible") {
    RunResult a = run("explore -n 2 --depth 3 --format json");
    RunResult b = run("explore -n 2 --depth 3 --format json");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    json report = json::parse(a.out);
    std::string error;
    CHECK_MESSAGE(schemacheck::validate(report, load_schema("explore_report.schema.json"), &error),
                  error);
    CHECK(report["saturated"] == true);

    auto csv = std::filesystem::temp_directory_path() / "partlog_counts.csv";
    RunResult with_csv = run("explore -n 2 --depth 3 --csv " + csv.string());
    CHECK(with_csv.code == 0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "depth,cumulative_tables");
    std::filesystem::remove(csv);
}

TEST_CASE("cli enumerate") {
    RunResult r = run("enumerate -n 4");
    CHECK(r.code == 0);
    CHECK(count_occurrences(r.out, "\n") == 15);
    CHECK(r.out.rfind("{a,b,c,d}", 0) == 0);  // the indiscrete partition leads

    RunResult named = run("enumerate -u p,q");
    CHECK(named.code == 0);
    CHECK(named.out == "{p,q}\n{p|q}\n");

    RunResult js = run("enumerate -n 3 --format json");
    json report = json::parse(js.out);
    std::string error;
    CHECK_MESSAGE(schemacheck::validate(report, load_schema("enumerate.schema.json"), &error),
                  error);
    CHECK(report["count"] == 5);

    CHECK(run("enumerate -n 12").code == 2);  // enumeration cap
    CHECK(run("enumerate -n 12 --enum-cap 3").code == 2);
}

TEST_CASE("cli config file supplies defaults, flags win") {
    auto path = std::filesystem::temp_directory_path() / "partlog_cli.ini";
    {
        std::ofstream out(path);
        out << "[taut]\nmax-n=2\n";
    }
    // Config max-n=2 cannot refute accumulation (needs n=3); flag overrides.
    RunResult with_config =
        run("taut \"s -> (p -> (s & p))\" --config " + path.string());
    CHECK(with_config.code == 0);
    RunResult with_flag =
        run("taut \"s -> (p -> (s & p))\" --max-n 4 --config " + path.string());
    CHECK(with_flag.code == 1);
    std::filesystem::remove(path);
}

TEST_CASE("cli usage errors exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("unknown-command").code == 2);
    CHECK(run("eval").code == 2);  // missing formula
    CHECK(run("taut").code == 2);
}
