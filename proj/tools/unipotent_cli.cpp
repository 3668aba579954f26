#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>

#include "unipotent/acceptance.hpp"
#include "unipotent/derivation.hpp"
#include "unipotent/quadratic.hpp"
#include "unipotent/relations.hpp"
#include "unipotent/ringmodel.hpp"
#include "unipotent/spanning.hpp"
#include "unipotent/variety.hpp"

using nlohmann::json;
using namespace unipotent;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Report {
    std::string command;
    std::string ring;
    json results = json::object();
    std::vector<std::string> failures;
};

// Any boolean "ok" or "*_ok" field that is false becomes a failure.
void collect_failures(const json& j, const std::string& path, std::vector<std::string>& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            bool flag = key == "ok" || (key.size() > 3 && key.compare(key.size() - 3, 3, "_ok") == 0);
            if (flag && value.is_boolean() && !value.get<bool>()) out.push_back(path.empty() ? key : path + "." + key);
            else collect_failures(value, path.empty() ? key : path + "." + key, out);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            std::string label = std::to_string(i);
            if (j[i].is_object())
                for (const char* name : {"label", "word", "check"})
                    if (j[i].contains(name)) label = j[i][name].get<std::string>();
            collect_failures(j[i], path + "[" + label + "]", out);
        }
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

int max_d_from_env() {
    const char* env = std::getenv("UNIPOTENT_MAX_D");
    if (!env || !*env) return kQuadraticDefaultMaxD;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end || v < 1 || v > kQuadraticMaxD)
        throw UsageError("UNIPOTENT_MAX_D must be an integer in [1, " + std::to_string(kQuadraticMaxD) + "]");
    return static_cast<int>(v);
}

void parse_sweep(const std::string& text, VarietyOptions& opts) {
    static const std::regex item(R"(\s*([nm])\s*=\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::smatch m;
        if (!std::regex_match(part, m, item)) throw UsageError("bad --sweep item '" + part + "'");
        int lo = std::stoi(m[2]), hi = std::stoi(m[3]);
        if (lo > hi) throw UsageError("empty range in --sweep");
        (m[1] == "n" ? opts.n_min : opts.m_min) = lo;
        (m[1] == "n" ? opts.n_max : opts.m_max) = hi;
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
}

int parse_words(const std::string& text) {
    static const std::regex form(R"(\s*(?:length\s*<=\s*)?(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, form)) throw UsageError("bad --words '" + text + "'");
    return std::stoi(m[1]);
}

void print_pretty_value(const json& v, const std::string& indent, std::ostream& os) {
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) {
            if (x.is_structured()) {
                os << indent << k << ":\n";
                print_pretty_value(x, indent + "  ", os);
            } else {
                os << indent << k << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& x : v) {
            if (x.is_object()) {
                std::string line;
                for (const auto& [k, y] : x.items())
                    line += (line.empty() ? "" : "  ") + k + "=" + (y.is_string() ? y.get<std::string>() : y.dump());
                os << indent << "- " << line << "\n";
            } else {
                os << indent << "- " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
            }
        }
    } else {
        os << indent << v.dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification tools for 3-unipotent noncommutative algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string ring_flag = "z16";
    bool pretty = false;
    app.add_option("--ring", ring_flag, "Coefficient ring")->check(CLI::IsMember({"z", "z16", "q"}));
    app.add_flag("--pretty", pretty, "Plain-text output");

    auto* derive = app.add_subcommand("derive", "Replay the cubic-relation derivation");

    auto* reduce_cmd = app.add_subcommand("reduce", "Normal form of a polynomial in U, V");
    std::string expr;
    std::string system_name = "derived";
    reduce_cmd->add_option("expr", expr, "Polynomial, e.g. \"V*U*V\"")->required();
    reduce_cmd->add_option("--system", system_name, "Rewrite system")
        ->check(CLI::IsMember({"derived", "table", "lemma"}));

    auto* ring_cmd = app.add_subcommand("ring", "Rank-18 ring model report");
    std::string csv_a, csv_b;
    ring_cmd->add_option("--csv-a", csv_a, "Write the matrix of U as CSV");
    ring_cmd->add_option("--csv-b", csv_b, "Write the matrix of V as CSV");

    auto* quad = app.add_subcommand("quadratic", "Quadratic construction in dimension 2^d");
    int quad_d = 1;
    bool full = false;
    quad->add_option("--d", quad_d, "Number of generators")->required();
    quad->add_flag("--full", full, "Also rank the flattened matrices");

    auto* var = app.add_subcommand("variety", "Cubic locus membership sweep");
    std::string sweep = "n=-6..6,m=-6..6";
    std::string words = "length<=6";
    var->add_option("--sweep", sweep, "Exponent ranges, n=a..b,m=c..d");
    var->add_option("--words", words, "Raw word length bound, length<=L");

    auto* span = app.add_subcommand("spanning", "Spanning sets and bounds");
    span->require_subcommand(1);
    int span_d = 2;
    std::string out_path;
    auto* em = span->add_subcommand("em", "E_d and M_d");
    auto* bound = span->add_subcommand("bound", "Cardinality bounds");
    auto* pw = span->add_subcommand("pw", "W_d and P_d");
    for (auto* sub : {em, bound, pw}) {
        sub->add_option("--d", span_d, "Number of generators")->required();
        sub->fallthrough();
    }
    em->add_option("--out", out_path, "Write M_d as newline-delimited words");

    auto* all = app.add_subcommand("verify-all", "Run the acceptance suite");
    std::vector<int> only;
    all->add_option("--only", only, "Criterion ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    Report report;
    report.ring = ring_flag;
    try {
        CoefficientRing ring = CoefficientRing::from_flag(ring_flag);
        if (*derive) {
            report.command = "derive";
            auto res = replay_derivation(ring);
            report.results = res.log.to_json();
            if (res.log.failure)
                report.failures.push_back("InversionRequired(" + std::to_string(res.log.failure->prime) + ") at step " +
                                          std::to_string(res.log.failure->step));
        } else if (*reduce_cmd) {
            report.command = "reduce";
            Polynomial p;
            try {
                p = Polynomial::parse(expr);
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            report.results["input"] = p.to_string();
            try {
                const RewriteSystem* sys = &table_system();
                RewriteSystem derived;
                if (system_name == "lemma") sys = &lemma_system();
                if (system_name == "derived") {
                    derived = derive_cubic_relations(ring).system;
                    sys = &derived;
                }
                Polynomial nf = reduce(p, *sys);
                for (const auto& [m, c] : nf.terms())
                    if (!ring.admits(c)) report.failures.push_back("coefficient " + c.to_string() + " outside ring");
                report.results["normal_form"] = nf.to_string();
            } catch (const InversionRequired& e) {
                report.failures.push_back(e.what());
            }
        } else if (*ring_cmd) {
            report.command = "ring";
            report.results = ring_report();
            if (!csv_a.empty()) write_file(csv_a, RingModel::printed_matrix('a').to_csv());
            if (!csv_b.empty()) write_file(csv_b, RingModel::printed_matrix('b').to_csv());
        } else if (*quad) {
            report.command = "quadratic";
            try {
                report.results = quadratic_report(quad_d, max_d_from_env(), full);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (report.results["rank"] != (std::size_t{1} << quad_d)) report.failures.push_back("rank");
            if (report.results["nilpotency_degree"] != quad_d + 1) report.failures.push_back("nilpotency_degree");
        } else if (*var) {
            report.command = "variety";
            VarietyOptions opts;
            parse_sweep(sweep, opts);
            opts.word_length = parse_words(words);
            report.results = check_group_in_variety(opts).to_json();
        } else if (*span) {
            if (span_d < 1) throw UsageError("--d must be positive");
            try {
                if (*em) {
                    report.command = "spanning em";
                    report.results = spanning_em_report(span_d);
                    if (!out_path.empty()) write_file(out_path, build_EM(span_d).M.to_text());
                } else if (*bound) {
                    report.command = "spanning bound";
                    report.results = spanning_bound_report(span_d);
                } else {
                    report.command = "spanning pw";
                    report.results = spanning_pw_report(span_d);
                }
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        } else if (*all) {
            report.command = "verify-all";
            auto results = run_acceptance(only, [&](const CriterionResult& r) {
                if (pretty) std::cerr << format_result(r) << std::endl;
            });
            report.results = acceptance_json(results);
            for (const auto& r : results)
                if (!r.pass) report.failures.push_back("criterion " + std::to_string(r.id) + ": " + r.detail);
        }
        if (report.command != "verify-all") collect_failures(report.results, "", report.failures);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        report.failures.push_back(std::string("error: ") + e.what());
    }

    long long elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (pretty) {
        std::cout << report.command << " (ring " << report.ring << ", " << elapsed << " ms)\n";
        print_pretty_value(report.results, "  ", std::cout);
        std::cout << (report.failures.empty() ? "OK\n" : "FAILURES:\n");
        for (const auto& f : report.failures) std::cout << "  " << f << "\n";
    } else {
        json out{{"command", report.command},
                 {"ring", report.ring},
                 {"results", report.results},
                 {"failures", report.failures},
                 {"elapsed_ms", elapsed}};
        std::cout << out.dump(2) << "\n";
    }
    return report.failures.empty() ? 0 : 1;
}
