#include "pexider/cli.hpp"

#include "pexider/error.hpp"
#include "pexider/generator.hpp"
#include "pexider/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace pexider::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

EquationInstance load_instance(const std::string& path) {
    try {
        return parse_instance(read_file(path));
    } catch (const ParseError& e) {
        std::string where = e.line() > 0 ? path + ":" + std::to_string(e.line()) : path;
        throw ParseError(where + ": " + e.detail());
    }
}

class Style {
public:
    Style() : enabled_(std::getenv("PEXIDER_NO_COLOR") == nullptr) {}

    std::string bold(const std::string& s) const { return wrap("1", s); }
    std::string green(const std::string& s) const { return wrap("32", s); }
    std::string red(const std::string& s) const { return wrap("31", s); }

private:
    std::string wrap(const char* code, const std::string& s) const {
        return enabled_ ? "\x1b[" + std::string(code) + "m" + s + "\x1b[0m" : s;
    }

    bool enabled_;
};

std::string show(const std::optional<Rational>& q) {
    return q ? to_string(*q) : std::string("none");
}

void explain(const EquationInstance& inst, const Classification& c, std::ostream& out) {
    Style style;
    out << style.bold("Instance") << "\n";
    out << "  I1 = " << to_string(inst.i1()) << ", I2 = " << to_string(inst.i2()) << ", D = " << to_string(inst.domain())
        << "\n";
    out << "  zero set = " << to_string(inst.zero_set()) << "\n";
    out << "  required zero region = " << to_string(required_zero_region(inst.f1(), inst.f2())) << "\n";
    out << style.bold("Classification: " + clause_name(c)) << " (" << case_name(c) << ")\n";
    std::visit(overloaded{
                   [&](const Extremal& e) {
                       if (e.lambda) {
                           out << "  f1 == f2 == " << to_string(*e.lambda) << " on their domains\n";
                       } else {
                           out << "  phi vanishes on all of D\n";
                       }
                   },
                   [&](const TwoSidedPlateaus& t) {
                       out << "  lambda = " << show(t.lambda) << ", mu = " << show(t.mu) << "\n";
                       out << "  U1 = " << to_string(t.u1) << ", V1 = " << to_string(t.v1) << "  (value lambda)\n";
                       out << "  U2 = " << to_string(t.u2) << ", V2 = " << to_string(t.v2) << "  (value mu)\n";
                       out << "  K1 = " << to_string(t.k1) << ", K2 = " << to_string(t.k2) << "\n";
                       IntervalSet forced =
                           unite(IntervalSet(half_sum(t.k1, inst.i2())), IntervalSet(half_sum(inst.i1(), t.k2)));
                       out << "  phi vanishes on (K1 + I2)/2 u (I1 + K2)/2 = " << to_string(forced) << "\n";
                   },
                   [&](const OneConstant& o) {
                       int j = o.i == 1 ? 2 : 1;
                       out << "  f" << j << " == " << to_string(o.lambda) << " on I" << j << "\n";
                       out << "  f" << o.i << " == " << to_string(o.lambda) << " on plateaus " << to_string(o.plateaus)
                           << "\n";
                       out << "  K" << o.i << " = " << to_string(o.big_k) << "\n";
                       const Interval& ij = o.i == 1 ? inst.i2() : inst.i1();
                       out << "  phi vanishes on (K" << o.i << " + I" << j << ")/2 = " << to_string(half_sum(o.big_k, ij))
                           << "\n";
                   },
                   [&](const NotASolution& n) {
                       out << "  " << style.red("violated") << " at x = " << to_string(n.witness.x)
                           << ", y = " << to_string(n.witness.y) << ": phi(" << to_string(n.witness.midpoint())
                           << ") != 0 and f1(x) = " << to_string(inst.f1().evaluate(n.witness.x))
                           << " != f2(y) = " << to_string(inst.f2().evaluate(n.witness.y)) << "\n";
                   },
                   [&](const ZeroSetNotClosed&) {
                       out << "  closure in D is " << to_string(closure_within(inst.zero_set(), inst.domain()))
                           << "; no classification attempted\n";
                   },
               },
               c);
}

int exit_code_for(const Classification& c) {
    if (std::holds_alternative<NotASolution>(c)) {
        return fails;
    }
    if (std::holds_alternative<ZeroSetNotClosed>(c)) {
        return not_closed;
    }
    return ok;
}

struct CorpusEntry {
    std::string label;
    std::optional<GenSpec> spec;
    std::string file;
    std::string expected;
};

std::vector<CorpusEntry> load_manifest(const std::string& path) {
    Json doc;
    try {
        doc = Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": malformed JSON: " + e.what());
    }
    const Json& entries = doc.is_array() ? doc : doc.value("entries", Json());
    if (!entries.is_array()) {
        throw ParseError(path + ": expected a list of entries or {\"entries\": [...]}");
    }
    std::filesystem::path dir = std::filesystem::path(path).parent_path();
    std::vector<CorpusEntry> out;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const Json& e = entries[k];
        std::string where = path + ": /entries/" + std::to_string(k);
        if (!e.is_object() || !e.contains("expected") || !e["expected"].is_string()) {
            throw ParseError(where + ": each entry needs an \"expected\" case name");
        }
        CorpusEntry entry;
        entry.expected = e["expected"].get<std::string>();
        if (e.contains("file")) {
            entry.file = (dir / e["file"].get<std::string>()).string();
            entry.label = e["file"].get<std::string>();
        } else if (e.contains("case") && e.contains("seed")) {
            GenSpec spec;
            spec.kind = parse_gen_case(e["case"].get<std::string>());
            spec.seed = e["seed"].get<std::uint64_t>();
            spec.max_pieces = e.value("max_pieces", spec.max_pieces);
            spec.symmetric = e.value("symmetric", false);
            if (e.contains("bounds")) {
                spec.bounds = parse_interval(e["bounds"].get<std::string>());
            }
            entry.label = to_string(spec.kind) + " seed=" + std::to_string(spec.seed);
            entry.spec = spec;
        } else {
            throw ParseError(where + ": entry needs either \"file\" or \"case\" and \"seed\"");
        }
        out.push_back(std::move(entry));
    }
    return out;
}

struct CorpusResult {
    std::string actual;
    bool verified = false;
    std::string error;
};

CorpusResult run_entry(const CorpusEntry& entry) {
    CorpusResult r;
    try {
        EquationInstance inst = entry.spec ? generate(*entry.spec) : load_instance(entry.file);
        Classification c = classify(inst);
        r.actual = case_name(c);
        bool valid_case = std::holds_alternative<Extremal>(c) || std::holds_alternative<TwoSidedPlateaus>(c) ||
                          std::holds_alternative<OneConstant>(c);
        r.verified = !valid_case || verify_classification(inst, c);
    } catch (const Error& e) {
        r.error = e.what();
    }
    return r;
}

int run_corpus(const std::string& path, std::ostream& out) {
    std::vector<CorpusEntry> entries = load_manifest(path);
    std::vector<CorpusResult> results(entries.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < entries.size(); k = next++) {
            results[k] = run_entry(entries[k]);
        }
    };
    std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < std::min(threads, entries.size()); ++t) {
        pool.emplace_back(worker);
    }
    pool.clear();

    Style style;
    std::size_t passed = 0;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const CorpusResult& r = results[k];
        bool pass = r.error.empty() && r.actual == entries[k].expected && r.verified;
        passed += pass ? 1 : 0;
        out << (pass ? style.green("PASS") : style.red("FAIL")) << "  " << entries[k].label << "  expected "
            << entries[k].expected << ", got " << (r.error.empty() ? r.actual : "error: " + r.error);
        if (r.error.empty() && !r.verified) {
            out << " (verification failed)";
        }
        out << "\n";
    }
    out << "passed " << passed << "/" << entries.size() << "\n";
    return passed == entries.size() ? ok : fails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact workbench for phi((x+y)/2) (f1(x) - f2(y)) = 0", "pexider"};
    app.require_subcommand(1, 1);

    std::string input;
    std::string grid_step = "1/64";
    std::string window;
    bool explain_flag = false;
    std::string case_name_arg;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string bounds;
    int max_pieces = GenSpec{}.max_pieces;
    bool symmetric = false;
    std::string s_lit, p_lit, q_lit;

    CLI::App* check = app.add_subcommand("check", "Decide whether an instance solves the equation");
    check->add_option("instance", input, "Instance JSON file")->required();
    check->add_option("--grid-step", grid_step, "Lattice spacing of the cross-check oracle");
    check->add_option("--window", window, "Bounded window for the oracle (default: padded hull)");

    CLI::App* cls = app.add_subcommand("classify", "Sort a solution into case (i), (ii) or (iii)");
    cls->add_option("instance", input, "Instance JSON file")->required();
    cls->add_flag("--explain", explain_flag, "Human-readable report instead of JSON");

    CLI::App* gen = app.add_subcommand("generate", "Write a seeded random instance");
    gen->add_option("--case", case_name_arg, "extremal, two_sided, one_constant or mutant")->required();
    gen->add_option("--seed", seed, "64-bit seed");
    gen->add_option("--out", out_path, "Output path (default: stdout)");
    gen->add_option("--bounds", bounds, "Bounded window for generated endpoints");
    gen->add_option("--max-pieces", max_pieces, "Upper bound on pieces per function");
    gen->add_flag("--symmetric", symmetric, "I1 == I2 and f1 == f2");

    CLI::App* refl = app.add_subcommand("reflect", "Print (2P - S) ∩ Q");
    refl->add_option("--s", s_lit, "Interval S")->required();
    refl->add_option("--p", p_lit, "Interval P")->required();
    refl->add_option("--q", q_lit, "Interval Q")->required();

    CLI::App* corpus = app.add_subcommand("corpus", "Classify every manifest entry and compare");
    corpus->add_option("manifest", input, "Manifest JSON file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (check->parsed()) {
            EquationInstance inst = load_instance(input);
            Rational step = parse_rational(grid_step);
            Interval win = window.empty() ? default_window(inst) : parse_interval(window);
            Verdict exact = check_exact(inst);
            Verdict grid = check_grid(inst, win, step);
            Json report{{"exact", verdict_to_json(exact)},
                        {"oracle", {{"window", to_string(win)}, {"step", to_string(step)}, {"verdict", verdict_to_json(grid)}}}};
            out << report.dump(2) << "\n";
            bool exact_witness_bad = exact.witness && !is_violation(inst, exact.witness->x, exact.witness->y);
            if ((exact.holds && !grid.holds) || exact_witness_bad) {
                err << "internal error: exact checker and grid oracle disagree\n";
                return internal_error;
            }
            return exact.holds ? ok : fails;
        }
        if (cls->parsed()) {
            EquationInstance inst = load_instance(input);
            Classification c = classify(inst);
            if (explain_flag) {
                explain(inst, c, out);
            } else {
                out << classification_to_json(c).dump(2) << "\n";
            }
            return exit_code_for(c);
        }
        if (gen->parsed()) {
            GenSpec spec;
            spec.kind = parse_gen_case(case_name_arg);
            spec.seed = seed;
            spec.max_pieces = max_pieces;
            spec.symmetric = symmetric;
            if (!bounds.empty()) {
                spec.bounds = parse_interval(bounds);
            }
            std::string text = dump_instance(generate(spec));
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream file(out_path, std::ios::binary);
                if (!file || !(file << text)) {
                    throw ParseError("cannot write '" + out_path + "'");
                }
            }
            return ok;
        }
        if (refl->parsed()) {
            out << to_string(reflect(parse_interval(s_lit), parse_interval(p_lit), parse_interval(q_lit))) << "\n";
            return ok;
        }
        if (corpus->parsed()) {
            return run_corpus(input, out);
        }
    } catch (const ImpossibleCase& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}

}  // namespace pexider::cli
