#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "tibcal/cli.hpp"

using namespace tibcal;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "tibcal");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& part) {
    return text.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("convert") {
    Run r = run({"convert", "-g", "2017-02-27"});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, "2017-01-01"));
    CHECK(has(r.out, "Monday"));
    CHECK(has(r.out, "Fire-Female-Bird"));
    Run back = run({"convert", "-t", "2017-01-01", "--format", "jsonl"});
    CHECK(back.code == kExitOk);
    CHECK(has(back.out, "\"jd\":2457812"));
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"nonsense"}).code == kExitUsage);
    CHECK(run({"convert", "-g", "2017-02-30"}).code == kExitUsage);
    CHECK(run({"convert", "-g", "2017-02-27", "--jd", "5"}).code == kExitUsage);
    CHECK(run({"--tradition", "nope", "losar", "2017"}).code == kExitUsage);
    CHECK(run({"losar", "2018..2017"}).code == kExitUsage);
    Run skipped = run({"convert", "-t", "2012-02-12"});
    CHECK(skipped.code == kExitDomain);
    CHECK(has(skipped.err, "skipped"));
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("global options after the subcommand") {
    Run a = run({"--tradition", "bhutan", "losar", "2003"});
    Run b = run({"losar", "2003", "--tradition", "bhutan"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(has(a.out, "2003-03-04"));
}

TEST_CASE("formats") {
    Run csv = run({"losar", "2017..2018", "--format", "csv"});
    CHECK(csv.code == kExitOk);
    CHECK(csv.out.rfind("year,jd,gregorian", 0) == 0);
    Run jl = run({"losar", "2017..2018", "--format", "jsonl"});
    std::istringstream lines(jl.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        CHECK(line.front() == '{');
        CHECK(line.back() == '}');
        ++n;
    }
    CHECK(n == 2);
}

TEST_CASE("output is byte stable") {
    const std::vector<std::vector<std::string>> cmds = {
        {"almanac", "2012", "--month", "2"},
        {"special-days", "2013", "--format", "csv"},
        {"planets", "2017-02-27..2017-03-02"},
        {"compare", "2000..2004"},
        {"attributes", "-g", "2017-02-27"},
        {"leap-months", "2000..2020", "--tradition", "tsurphu"},
        {"tables"},
    };
    for (const auto& c : cmds) {
        Run a = run(c), b = run(c);
        CAPTURE(c.front());
        CHECK(a.code == kExitOk);
        CHECK(!a.out.empty());
        CHECK(a.out == b.out);
    }
}

TEST_CASE("leap months") {
    Run r = run({"leap-months", "2000..2003"});
    CHECK(r.code == kExitOk);
    CHECK(has(r.out, "2000  1"));
    CHECK(has(r.out, "2002  10"));
}
