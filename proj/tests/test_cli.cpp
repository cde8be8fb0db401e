#include "doctest.h"
#include "helpers.hpp"

#include "pexider/cli.hpp"
#include "pexider/error.hpp"
#include "pexider/generator.hpp"
#include "pexider/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace pexider;
using testing::fn;
using testing::set;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("pexider-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const {
        std::filesystem::path p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

private:
    std::filesystem::path path_;
};

EquationInstance example(IntervalSet zero) {
    return EquationInstance(fn("(0,2)", {{"(0,1)", "1"}, {"[1,2)", "7"}}), fn("(4,6)", {{"(4,6)", "1"}}),
                            std::move(zero));
}

}  // namespace

TEST_CASE("reflect command") {
    Run r = run({"reflect", "--s", "(0,2)", "--p", "[1,1]", "--q", "(0,4)"});
    CHECK(r.code == 0);
    CHECK(r.out == "(0,2)\n");
    CHECK(run({"reflect", "--s", "(0,+inf)", "--p", "(0,1)", "--q", "(-inf,5)"}).out == "(-inf,2)\n");
    CHECK(run({"reflect", "--s", "(0,2", "--p", "[1,1]", "--q", "(0,4)"}).code == 2);
    CHECK(run({"reflect", "--s", "(0,2)"}).code == 2);
}

TEST_CASE("exit codes follow the verdict") {
    TempDir dir;
    GenSpec spec;
    spec.kind = GenCase::Extremal;
    spec.seed = 3;
    std::string extremal = dir.write("extremal.json", dump_instance(generate(spec)));
    std::string good = dir.write("good.json", dump_instance(example(set({"[5/2,4)"}))));
    std::string bad = dir.write("bad.json", dump_instance(example(set({"(3,4)"}))));
    std::string open = dir.write("open.json", dump_instance(example(set({"(5/2,3)", "(3,7/2)"}))));

    CHECK(run({"check", extremal}).code == 0);
    CHECK(run({"check", good}).code == 0);
    CHECK(run({"check", bad}).code == 1);
    CHECK(run({"classify", good}).code == 0);
    CHECK(run({"classify", bad}).code == 3);
    CHECK(run({"classify", dir.write("bad-closed.json", dump_instance(example(set({"[3,4)"}))))}).code == 1);
    CHECK(run({"classify", open}).code == 3);
    CHECK(run({"classify", dir.write("x.json", "{")}).code == 2);
    CHECK(run({"check", (std::filesystem::path(good).parent_path() / "missing.json").string()}).code == 2);

    Run explained = run({"classify", good, "--explain"});
    CHECK(explained.code == 0);
    CHECK(explained.out.find("case (iii)") != std::string::npos);

    Run checked = run({"check", bad, "--grid-step", "1/32", "--window", "[-2,8]"});
    CHECK(checked.code == 1);
    Json report = Json::parse(checked.out);
    CHECK(report["exact"]["holds"] == false);
}

TEST_CASE("flag order does not change the result") {
    TempDir dir;
    std::string bad = dir.write("bad.json", dump_instance(example(set({"(3,4)"}))));
    Run a = run({"check", bad, "--grid-step", "1/32", "--window", "[-2,8]"});
    Run b = run({"check", "--window", "[-2,8]", "--grid-step", "1/32", bad});
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);

    Run g1 = run({"generate", "--case", "two_sided", "--seed", "9", "--max-pieces", "5"});
    Run g2 = run({"generate", "--max-pieces", "5", "--seed", "9", "--case", "two_sided"});
    CHECK(g1.code == 0);
    CHECK(g1.out == g2.out);
}

TEST_CASE("diagnostics carry line numbers") {
    TempDir dir;
    std::string text = dump_instance(example(set({"[5/2,4)"})));
    std::string broken = text;
    broken.replace(broken.find("\"[5/2,4)\""), 9, "\"[5/2,4\"");
    Run r = run({"classify", dir.write("broken.json", broken)});
    CHECK(r.code == 2);
    std::size_t expected_line = 1;
    for (char ch : broken.substr(0, broken.find("\"[5/2,4\""))) {
        expected_line += ch == '\n';
    }
    CHECK_MESSAGE(r.err.find("broken.json:" + std::to_string(expected_line) + ":") != std::string::npos, r.err);

    CHECK_THROWS_AS(parse_instance("{\n  \"I1\": \"(0,1)\",\n  oops\n}"), ParseError);
    try {
        parse_instance("{\n  \"I1\": \"(0,1)\",\n  oops\n}");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("serialization round-trips exactly") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenSpec spec;
        spec.kind = static_cast<GenCase>(seed % 4);
        spec.seed = seed;
        EquationInstance inst = generate(spec);
        std::string text = dump_instance(inst);
        EquationInstance back = parse_instance(text);
        CHECK(back == inst);
        CHECK(dump_instance(back) == text);
    }
    EquationInstance fine = example(set({"[5/2,4)", "[3001/1024,3]"}));
    CHECK(parse_instance(dump_instance(fine)) == fine);
}

TEST_CASE("corpus keeps manifest order") {
    TempDir dir;
    dir.write("good.json", dump_instance(example(set({"[5/2,4)"}))));
    std::string manifest = dir.write("manifest.json", R"({"entries": [
        {"case": "two_sided", "seed": 4, "expected": "TwoSidedPlateaus"},
        {"file": "good.json", "expected": "OneConstant"},
        {"case": "mutant", "seed": 5, "expected": "Extremal"}
    ]})");
    Run r = run({"corpus", manifest});
    CHECK(r.code == 1);
    CHECK(r.out.find("passed 2/3") != std::string::npos);
    std::size_t first = r.out.find("two_sided");
    std::size_t second = r.out.find("good.json");
    CHECK(first < second);
    CHECK(r.out == run({"corpus", manifest}).out);
}
