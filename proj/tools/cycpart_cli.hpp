#pragma once

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <cycpart/cycpart.hpp>
#include <cycpart/verify.hpp>

namespace cycpart::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2, kIoError = 3 };

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Output of one command before it is rendered.
struct Result {
    std::string command;
    json params = json::object();
    json payload = json::object();
    std::string text;  // tsv / ascii / svg rendering
    int code = kOk;
};

inline std::string count_text(const ExactCount& v) { return v.str(); }

inline std::string fraction_text(const ExactCount& num, const ExactCount& den) {
    return num.str() + "/" + den.str();
}

inline std::string rational_text(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline std::string float_text(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

inline std::string join(const std::vector<std::int64_t>& values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

inline void require(bool ok, const std::string& message) {
    if (!ok) throw usage_error(message);
}

inline Result cmd_qtable(std::int64_t m, std::int64_t t) {
    require(m >= 1, "qtable requires m >= 1");
    Result r{"qtable", {{"m", m}, {"t", t}}};
    const auto table = q_table(m, t);
    std::ostringstream os;
    os << "n\tcount\n";
    json rows = json::array();
    for (std::int64_t n = 0; n < m; ++n) {
        os << n << '\t' << table[n] << '\n';
        rows.push_back({{"n", n}, {"count", count_text(table[n])}});
    }
    os << "total\t" << table.total() << '\n';
    r.payload = {{"rows", rows}, {"total", count_text(table.total())}};
    r.text = os.str();
    return r;
}

inline Result cmd_prob(std::int64_t m, std::int64_t t) {
    require(m >= 1 && t >= 0 && t <= m, "prob requires m >= 1 and 0 <= t <= m");
    Result r{"prob", {{"m", m}, {"t", t}}};
    const auto urn = urn_distribution(m, t);
    const auto best = maximizers(m, t).maximizing_residues;
    std::ostringstream os;
    os << "n\tprobability\treduced\n";
    json rows = json::array();
    for (std::int64_t n = 0; n < m; ++n) {
        const auto raw = fraction_text(urn.counts[n], urn.draws);
        const auto reduced = rational_text(urn.probability(n));
        os << n << '\t' << raw << '\t' << reduced << '\n';
        rows.push_back({{"n", n}, {"probability", raw}, {"reduced", reduced}});
    }
    os << "best_guess\t" << join(best, ",") << '\n';
    r.payload = {{"rows", rows}, {"draws", count_text(urn.draws)}, {"best_guess", best}};
    r.text = os.str();
    return r;
}

inline Result cmd_max(std::int64_t m, std::int64_t t) {
    require(m >= 1 && t >= 0 && t <= m, "max requires m >= 1 and 0 <= t <= m");
    Result r{"max", {{"m", m}, {"t", t}}};
    const auto rep = maximizers(m, t);
    std::ostringstream os;
    os << "case\t" << rep.case_id << '\n'
       << "witness_gcd\t" << rep.witness_gcd << '\n'
       << "residues\t" << join(rep.maximizing_residues, ",") << '\n'
       << "max_value\t" << rep.max_value << '\n';
    r.payload = {{"case", rep.case_id},
                 {"witness_gcd", rep.witness_gcd},
                 {"residues", rep.maximizing_residues},
                 {"max_value", count_text(rep.max_value)}};
    r.text = os.str();
    return r;
}

inline Result cmd_necklaces(std::int64_t m, std::int64_t t, std::optional<std::int64_t> divides, bool list) {
    require(m >= 1 && t >= 0 && t <= m, "necklaces requires m >= 1 and 0 <= t <= m");
    Result r{"necklaces", {{"m", m}, {"t", t}}};
    std::ostringstream os;
    if (list) {
        require(m <= oracle::kNecklaceLimit,
                "necklaces --list requires m <= " + std::to_string(oracle::kNecklaceLimit));
        r.params["mode"] = "list";
        os << "necklace\tfrequency\n";
        json rows = json::array();
        const auto classes = oracle::enumerate_necklaces(m, t);
        for (const auto& w : classes) {
            os << w.beads << '\t' << w.frequency << '\n';
            rows.push_back({{"necklace", w.beads}, {"frequency", w.frequency}});
        }
        os << "total\t" << classes.size() << '\n';
        r.payload = {{"necklaces", rows}, {"total", std::to_string(classes.size())}};
    } else if (divides) {
        require(*divides >= 1, "--divides requires n >= 1");
        r.params["mode"] = "divides";
        r.params["divides"] = *divides;
        const auto c = count_freq_dividing(m, t, *divides);
        os << "count\t" << c << '\n';
        r.payload = {{"count", count_text(c)}};
    } else {
        r.params["mode"] = "by-frequency";
        os << "frequency\tcount\n";
        json rows = json::array();
        ExactCount total = 0;
        for (auto u : divisors(m)) {
            const auto c = count_with_frequency(m, t, u);
            if (c == 0) continue;
            total += c;
            os << u << '\t' << c << '\n';
            rows.push_back({{"frequency", u}, {"count", count_text(c)}});
        }
        os << "total\t" << total << '\n';
        r.payload = {{"rows", rows}, {"total", count_text(total)}};
    }
    r.text = os.str();
    return r;
}

inline Result cmd_audit(std::int64_t m) {
    require(m >= 1, "audit requires m >= 1");
    Result r{"audit", {{"m", m}}};
    const auto a = identity_audit(m);
    std::ostringstream os;
    os << "partition_total\t" << a.partition_total << '\n'
       << "necklace_total\t" << a.necklace_total << '\n'
       << "excluded_total\t" << a.excluded_total() << '\n'
       << "balanced\t" << (a.balanced() ? "yes" : "no") << '\n'
       << '\n'
       << "t\tfrequency\tcount\n";
    json rows = json::array();
    for (const auto& e : a.excluded) {
        os << e.t << '\t' << e.frequency << '\t' << e.count << '\n';
        rows.push_back({{"t", e.t}, {"frequency", e.frequency}, {"count", count_text(e.count)}});
    }
    r.payload = {{"partition_total", count_text(a.partition_total)},
                 {"necklace_total", count_text(a.necklace_total)},
                 {"excluded_total", count_text(a.excluded_total())},
                 {"balanced", a.balanced()},
                 {"excluded", rows}};
    r.text = os.str();
    if (!a.balanced()) r.code = kVerificationFailed;
    return r;
}

/// Oracle suite bound: 16 unless CYCPART_MAX_ORACLE_M raises or lowers it.
inline std::int64_t oracle_suite_limit() {
    return std::getenv("CYCPART_MAX_ORACLE_M") ? oracle::subset_sum_limit() : verify::kOracleSuiteMaxM;
}

inline Result cmd_verify(std::int64_t max_m, const std::string& suite) {
    require(max_m >= 1, "verify requires --max-m >= 1");
    const std::int64_t oracle_bound = oracle_suite_limit();
    if (suite == "oracle") {
        require(max_m <= oracle_bound, "oracle suite requires --max-m <= " + std::to_string(oracle_bound));
    }
    if (suite == "dft") {
        require(max_m <= verify::kDftSuiteMaxM, "dft suite requires --max-m <= " + std::to_string(verify::kDftSuiteMaxM));
    }
    Result r{"verify", {{"max_m", max_m}, {"suite", suite}}};

    std::vector<std::future<verify::SuiteReport>> jobs;
    const bool all = suite == "all";
    if (all || suite == "oracle") {
        jobs.push_back(std::async(std::launch::async, verify::run_oracle_suite, std::min(max_m, oracle_bound)));
    }
    if (all || suite == "dft") {
        jobs.push_back(std::async(std::launch::async, verify::run_dft_suite, std::min(max_m, verify::kDftSuiteMaxM)));
    }
    if (all || suite == "identities") {
        jobs.push_back(std::async(std::launch::async, verify::run_identities_suite, max_m));
    }

    std::ostringstream os;
    os << "suite\tcheck\tcases\tstatus\n";
    json suites = json::array();
    std::optional<verify::Counterexample> first;
    for (auto& job : jobs) {
        const auto rep = job.get();
        json checks = json::array();
        for (const auto& c : rep.checks) {
            os << rep.suite << '\t' << c.name << '\t' << c.cases << '\t' << (c.passed ? "pass" : "FAIL") << '\n';
            checks.push_back({{"name", c.name}, {"cases", std::to_string(c.cases)}, {"passed", c.passed}});
        }
        suites.push_back({{"suite", rep.suite}, {"checks", checks}, {"passed", rep.passed()}});
        if (!first && rep.failure) first = rep.failure;
    }
    os << "result\t" << (first ? "FAIL" : "pass") << '\n';
    r.payload = {{"suites", suites}, {"passed", !first.has_value()}};
    if (first) {
        os << "counterexample\t" << first->check << "\t(" << first->m << ',' << first->t << ',' << first->n << ','
           << first->expected << ',' << first->got << ')';
        if (!first->extra.empty()) os << '\t' << first->extra;
        os << '\n';
        r.payload["counterexample"] = {{"check", first->check}, {"m", first->m},          {"t", first->t},
                                       {"n", first->n},         {"expected", first->expected}, {"got", first->got},
                                       {"extra", first->extra}};
        r.code = kVerificationFailed;
    }
    r.text = os.str();
    return r;
}

inline Result cmd_diagram(std::int64_t m, std::int64_t t, const std::string& format) {
    require(m >= 1, "diagram requires m >= 1");
    Result r{"diagram", {{"m", m}, {"t", t}}};
    const auto d = diagram(m, t);
    r.text = format == "svg" ? d.svg() : d.ascii();
    r.payload = {{"heights", d.heights}, {"boxes", std::to_string(d.box_count())}, {"ascii", d.ascii()}};
    return r;
}

inline Result cmd_fpoly(std::int64_t m, std::int64_t u) {
    require(m >= 1 && u >= 1, "fpoly requires m >= 1 and u >= 1");
    Result r{"fpoly", {{"m", m}, {"u", u}}};
    const auto [alpha, beta] = genfunc::alpha_beta(m, u);
    const auto poly = genfunc::f_closed_coeffs(m, u);
    std::ostringstream os;
    os << "alpha\t" << alpha << '\n' << "beta\t" << beta << '\n' << "coefficients";
    json coeffs = json::array();
    for (const auto& c : poly.coefficients) {
        os << '\t' << c;
        coeffs.push_back(c.str());
    }
    os << '\n';
    r.payload = {{"alpha", alpha}, {"beta", beta}, {"coefficients", coeffs}};
    r.text = os.str();
    return r;
}

inline constexpr double kDftTolerance = 1e-6;

inline Result cmd_dft_check(std::int64_t m, std::int64_t s) {
    require(m >= 1 && m <= 12, "dft-check requires 1 <= m <= 12");
    require(s >= 1, "dft-check requires s >= 1");
    Result r{"dft-check", {{"m", m}, {"s", s}}};
    std::ostringstream os;
    os << "t\tu\tj_real\tj_imag\tupsilon\tdeviation\n";
    json rows = json::array();
    double worst = 0.0;
    for (std::int64_t t = 0; t <= m; ++t) {
        for (std::int64_t u = 0; u < m; ++u) {
            const auto [alpha, beta] = genfunc::alpha_beta(m, u);
            const auto j = genfunc::j_from_qstar(m, t, s, u);
            const auto ups = genfunc::upsilon(s, t, alpha, beta);
            const double dev = std::abs(j - ups.convert_to<double>());
            worst = std::max(worst, dev);
            os << t << '\t' << u << '\t' << float_text(j.real()) << '\t' << float_text(j.imag()) << '\t' << ups
               << '\t' << float_text(dev) << '\n';
            rows.push_back({{"t", t},
                            {"u", u},
                            {"j_real", float_text(j.real())},
                            {"j_imag", float_text(j.imag())},
                            {"upsilon", ups.str()},
                            {"deviation", float_text(dev)}});
        }
    }
    const bool ok = worst <= kDftTolerance;
    os << "max_deviation\t" << float_text(worst) << '\n' << "result\t" << (ok ? "pass" : "FAIL") << '\n';
    r.payload = {{"rows", rows}, {"max_deviation", float_text(worst)}, {"passed", ok}};
    r.text = os.str();
    if (!ok) r.code = kVerificationFailed;
    return r;
}

inline std::string render(const Result& r, const std::string& format) {
    if (format != "json") return r.text;
    json envelope = {{"command", r.command}, {"params", r.params}, {"payload", r.payload}, {"format", "json"}};
    return envelope.dump(2) + "\n";
}

inline void emit(const std::string& body, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << body;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw io_error("cannot open " + path + " for writing");
    file << body;
    file.flush();
    if (!file) throw io_error("failed writing " + path);
}

/// Entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts of t-part partitions in Z/mZ and bi-color necklaces", "cycpart"};
    app.require_subcommand(1);

    std::int64_t m = 0;
    std::int64_t t = 0;
    std::int64_t u = 0;
    std::int64_t s = 0;
    std::int64_t max_m = 10;
    std::string suite = "all";
    std::string format = "tsv";
    std::string out_path;
    std::optional<std::int64_t> divides;
    bool list = false;

    const std::vector<std::string> table_formats{"tsv", "json"};
    auto add_common = [&](CLI::App* sub, const std::vector<std::string>& formats) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", out_path, "Write output to PATH instead of stdout");
    };
    auto add_mt = [&](CLI::App* sub) {
        sub->add_option("m", m, "Modulus / bead count")->required();
        sub->add_option("t", t, "Number of parts / black beads")->required();
    };

    auto* qtable = app.add_subcommand("qtable", "Table of Q_{m,t}(n) over residues n");
    add_mt(qtable);
    add_common(qtable, table_formats);

    auto* prob = app.add_subcommand("prob", "Distribution of the sum of t distinct labels mod m");
    add_mt(prob);
    add_common(prob, table_formats);

    auto* max = app.add_subcommand("max", "Residues maximizing Q_{m,t}");
    add_mt(max);
    add_common(max, table_formats);

    auto* neck = app.add_subcommand("necklaces", "Bi-color necklace counts by frequency");
    add_mt(neck);
    auto* div_opt = neck->add_option("--divides", divides, "Count necklaces whose frequency divides n");
    auto* list_opt = neck->add_flag("--list", list, "List canonical words with frequencies");
    div_opt->excludes(list_opt);
    add_common(neck, table_formats);

    auto* audit = app.add_subcommand("audit", "Partition vs necklace totals over all t");
    audit->add_option("m", m, "Modulus / bead count")->required();
    add_common(audit, table_formats);

    auto* ver = app.add_subcommand("verify", "Run invariant sweeps against the oracles");
    ver->add_option("--max-m", max_m, "Largest modulus to sweep");
    ver->add_option("--suite", suite, "Sweep to run")->check(CLI::IsMember({"oracle", "dft", "identities", "all"}));
    add_common(ver, table_formats);

    auto* diag = app.add_subcommand("diagram", "Wall diagram of Q_{m,t}");
    add_mt(diag);
    add_common(diag, {"ascii", "svg", "json"});

    auto* fpoly = app.add_subcommand("fpoly", "Coefficients of F_m(1, lambda^u, z)");
    fpoly->add_option("m", m, "Modulus")->required();
    fpoly->add_option("u", u, "Root-of-unity exponent")->required();
    add_common(fpoly, table_formats);

    auto* dft = app.add_subcommand("dft-check", "Compare the DFT of the congruence sums with the closed form");
    dft->add_option("m", m, "Modulus")->required();
    dft->add_option("s", s, "Congruence step")->required();
    add_common(dft, table_formats);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run 'cycpart --help' for usage\n";
        return kUsage;
    }

    if (diag->parsed() && format == "tsv") format = "ascii";

    try {
        Result r;
        if (qtable->parsed()) r = cmd_qtable(m, t);
        else if (prob->parsed()) r = cmd_prob(m, t);
        else if (max->parsed()) r = cmd_max(m, t);
        else if (neck->parsed()) r = cmd_necklaces(m, t, divides, list);
        else if (audit->parsed()) r = cmd_audit(m);
        else if (ver->parsed()) r = cmd_verify(max_m, suite);
        else if (diag->parsed()) r = cmd_diagram(m, t, format);
        else if (fpoly->parsed()) r = cmd_fpoly(m, u);
        else r = cmd_dft_check(m, s);
        emit(render(r, format), out_path, out);
        return r.code;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const io_error& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const theorem_violation& e) {
        err << "verification failure: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const inexact_division& e) {
        err << "verification failure: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace cycpart::cli
