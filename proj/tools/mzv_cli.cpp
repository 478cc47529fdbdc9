// Command-line driver: relation export, verification sweeps, rank reports,
// and single-value evaluation. Data outputs (relations, eval results) go to
// stdout or --out and are byte-reproducible for identical flags; run reports
// with timings go to stderr for `relations` and to stdout for `verify` and
// `rank`. Exit codes: 0 all checks pass, 1 verification failure, 2 usage.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mzv/export.hpp"
#include "mzv/matrix.hpp"
#include "mzv/numeric.hpp"
#include "mzv/padic.hpp"
#include "mzv/report.hpp"
#include "mzv/suites.hpp"

namespace {

bool is_prime_small(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string echo_command(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) out += ' ';
        out += argv[i];
    }
    return out;
}

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

struct VerifyOptions {
    std::string suite;
    int max_weight = -1;
    int cap = -1;
    long long prime = 0;
    long long prec = 12;
    double tol = 1e-3;
};

// Fills in the per-suite defaults for options the user did not pass and
// expands the suite into its check list.
std::vector<mzv::CheckItem> build_suite(const VerifyOptions& o) {
    using namespace mzv;
    auto mw = [&](int def) { return o.max_weight > 0 ? o.max_weight : def; };
    auto cap = [&](int def) { return o.cap > 0 ? o.cap : def; };
    if (o.suite == "stuffle-series") return stuffle_series_suite(mw(6), cap(25));
    if (o.suite == "shuffle-series") return shuffle_series_suite(mw(6), cap(25));
    if (o.suite == "ode") return ode_suite(mw(5), cap(20));
    if (o.suite == "charts") return charts_suite();
    if (o.suite == "padic") {
        std::vector<long long> primes = o.prime > 0 ? std::vector<long long>{o.prime}
                                                    : std::vector<long long>{3, 5, 7};
        return padic_suite(primes, mw(5), o.prec);
    }
    if (o.suite == "truncated") return truncated_suite(mw(6), cap(30));
    if (o.suite == "numeric") return numeric_suite(cap(100000), o.tol);
    throw std::invalid_argument("unknown suite '" + o.suite + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double shuffle relations for multiple zeta values"};
    app.require_subcommand(1);
    bool json_report = false;
    app.add_flag("--json", json_report, "render reports and eval results as JSON");

    auto* rel = app.add_subcommand("relations", "write all double shuffle relations of a weight");
    int rel_weight = 0;
    std::string rel_format = "jsonl";
    std::string rel_out;
    rel->add_option("--weight", rel_weight, "total weight, at least 4")->required();
    rel->add_option("--format", rel_format, "jsonl (default) or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    rel->add_option("--out", rel_out, "output path; stdout when omitted");

    auto* ver = app.add_subcommand("verify", "run one verification sweep");
    VerifyOptions vo;
    ver->add_option("--suite", vo.suite, "which sweep to run")
        ->required()
        ->check(CLI::IsMember({"stuffle-series", "shuffle-series", "ode", "charts", "padic",
                               "truncated", "numeric"}));
    ver->add_option("--max-weight", vo.max_weight, "total weight bound (suite default)");
    ver->add_option("--cap", vo.cap,
                    "series cap, box truncation bound, or sample count, per suite");
    ver->add_option("--p", vo.prime, "restrict the p-adic sweep to one prime");
    ver->add_option("--prec", vo.prec, "p-adic target precision (default 12)");
    ver->add_option("--tol", vo.tol, "numeric tolerance (default 1e-3)");

    auto* rk = app.add_subcommand("rank", "rank of the double shuffle relation matrix");
    int rank_weight = 0;
    rk->add_option("--weight", rank_weight, "total weight, at least 4")->required();

    auto* ev = app.add_subcommand("eval", "evaluate a single quantity");
    ev->require_subcommand(1);
    auto* ev_mzv = ev->add_subcommand("mzv", "truncated zeta estimate with error bounds");
    std::string ev_index;
    long long ev_n = 100000;
    ev_mzv->add_option("--index", ev_index, "admissible index, e.g. 1,3")->required();
    ev_mzv->add_option("--n", ev_n, "truncation (default 100000)");
    auto* ev_li2 = ev->add_subcommand("li2p", "two-variable polylogarithm on the p-adic disc");
    std::string li2_a, li2_b, li2_x, li2_y;
    long long li2_p = 0, li2_prec = 12;
    ev_li2->add_option("--a", li2_a, "inner index, e.g. 1,2")->required();
    ev_li2->add_option("--b", li2_b, "outer index")->required();
    ev_li2->add_option("--x", li2_x, "inner point, integer or num/den")->required();
    ev_li2->add_option("--y", li2_y, "outer point")->required();
    ev_li2->add_option("--p", li2_p, "prime")->required();
    ev_li2->add_option("--prec", li2_prec, "target precision (default 12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    const std::string cmd = echo_command(argc, argv);

    try {
        if (rel->parsed()) {
            if (rel_weight < 4)
                return usage_error("relations: no admissible pair has total weight below 4");
            auto t0 = std::chrono::steady_clock::now();
            std::vector<std::string> lines = rel_format == "jsonl"
                                                 ? mzv::relations_jsonl(rel_weight)
                                                 : mzv::relations_csv(rel_weight);
            std::ofstream file;
            if (!rel_out.empty()) {
                file.open(rel_out);
                if (!file) return usage_error("relations: cannot open '" + rel_out + "'");
            }
            std::ostream& os = rel_out.empty() ? std::cout : file;
            for (const std::string& line : lines) os << line << "\n";
            os.flush();

            mzv::ReportEntry entry;
            entry.name = "relations";
            entry.checked = lines.size() - (rel_format == "csv" ? 1 : 0);
            entry.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            entry.detail = "weight " + std::to_string(rel_weight) + ", " +
                           std::to_string(entry.checked) + " relations as " + rel_format + " to " +
                           (rel_out.empty() ? "stdout" : rel_out);
            mzv::RunReport report{cmd, {entry}};
            std::cerr << (json_report ? report.json_text() : report.text());
            return 0;
        }

        if (ver->parsed()) {
            if (vo.prime > 0 && !is_prime_small(vo.prime))
                return usage_error("verify: --p must be prime");
            if (vo.prec < 1) return usage_error("verify: --prec must be at least 1");
            std::vector<mzv::CheckItem> items = build_suite(vo);
            mzv::RunReport report{cmd, {mzv::run_suite_entry(vo.suite, items)}};
            std::cout << (json_report ? report.json_text() : report.text());
            return report.ok() ? 0 : 1;
        }

        if (rk->parsed()) {
            if (rank_weight < 4)
                return usage_error("rank: no admissible pair has total weight below 4");
            auto t0 = std::chrono::steady_clock::now();
            mzv::RelationMatrix m = mzv::relation_matrix(rank_weight);
            int r = mzv::rank_exact(m.entries);
            mzv::ReportEntry entry;
            entry.name = "rank";
            entry.checked = m.row_pairs.size();
            entry.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            entry.detail = "weight " + std::to_string(rank_weight) + ": rank " +
                           std::to_string(r) + " of " + std::to_string(m.columns.size()) +
                           " columns";
            mzv::RunReport report{cmd, {entry}};
            std::cout << (json_report ? report.json_text() : report.text());
            return 0;
        }

        if (ev_mzv->parsed()) {
            mzv::Index idx = mzv::parse_index(ev_index);
            mzv::Estimate e = mzv::mzv_estimate(idx, ev_n);
            if (json_report) {
                nlohmann::ordered_json j;
                j["index"] = idx.parts();
                j["n"] = ev_n;
                j["value"] = e.value;
                j["tail_bound"] = e.tail_bound;
                j["rounding_bound"] = e.rounding_bound;
                std::cout << j.dump() << "\n";
            } else {
                std::printf("value %.17g\ntail_bound %.17g\nrounding_bound %.17g\n", e.value,
                            e.tail_bound, e.rounding_bound);
            }
            return 0;
        }

        if (ev_li2->parsed()) {
            if (!is_prime_small(li2_p)) return usage_error("eval li2p: --p must be prime");
            if (li2_prec < 1) return usage_error("eval li2p: --prec must be at least 1");
            mzv::Index a = mzv::parse_index(li2_a);
            mzv::Index b = mzv::parse_index(li2_b);
            mzv::Rational x = mzv::parse_fraction(li2_x);
            mzv::Rational y = mzv::parse_fraction(li2_y);
            auto plan = mzv::detail::padic_eval_plan(li2_p, a.weight() + b.weight(), li2_prec);
            mzv::Padic X = mzv::Padic::from_rational(x, li2_p, plan.rel);
            mzv::Padic Y = mzv::Padic::from_rational(y, li2_p, plan.rel);
            mzv::Padic v = mzv::eval_li2_padic(a, b, X, Y, li2_prec);
            if (json_report) {
                nlohmann::ordered_json j;
                j["a"] = a.parts();
                j["b"] = b.parts();
                j["p"] = li2_p;
                j["prec"] = li2_prec;
                j["value"] = mzv::to_string(v);
                j["digits"] = mzv::to_digit_string(v);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "value " << mzv::to_string(v) << "\n"
                          << "digits " << mzv::to_digit_string(v) << "\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    }
    return usage_error("no subcommand dispatched");
}
