#pragma once

// Verification sweeps shared by the command-line driver and the acceptance
// runner. A suite expands to a list of independent labeled checks. Checks run
// on a small thread pool; results land in a preallocated slot per item and are
// reduced in item order, so identical flags give identical output regardless
// of scheduling.

#include <atomic>
#include <chrono>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mzv/charts.hpp"
#include "mzv/numeric.hpp"
#include "mzv/padic.hpp"
#include "mzv/polylog.hpp"
#include "mzv/report.hpp"
#include "mzv/words.hpp"

namespace mzv {

struct CheckItem {
    std::string label;
    std::function<bool()> run;
};

struct CheckResult {
    std::string label;
    bool ok = false;
};

inline std::vector<CheckResult> run_checks(const std::vector<CheckItem>& items) {
    std::vector<CheckResult> results(items.size());
    auto run_one = [&](size_t i) {
        try {
            results[i] = {items[i].label, items[i].run()};
        } catch (const std::exception& e) {
            results[i] = {items[i].label + " (exception: " + e.what() + ")", false};
        }
    };
    size_t workers = std::thread::hardware_concurrency();
    if (workers > items.size()) workers = items.size();
    if (workers <= 1) {
        for (size_t i = 0; i < items.size(); ++i) run_one(i);
        return results;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < items.size();) run_one(i);
        });
    for (std::thread& t : pool) t.join();
    return results;
}

// Runs a suite and folds the results into a report entry carrying the total,
// the failure count, and the first failing label.
inline ReportEntry run_suite_entry(const std::string& name, const std::vector<CheckItem>& items) {
    ReportEntry entry;
    entry.name = name;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> results = run_checks(items);
    entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    entry.checked = results.size();
    for (const CheckResult& r : results) {
        if (!r.ok) {
            if (entry.failed == 0) entry.detail = "first failure: " + r.label;
            ++entry.failed;
        }
    }
    return entry;
}

// Ordered index pairs with total weight in [2, max_total] and each weight at
// least min_each.
inline std::vector<std::pair<Index, Index>> composition_pairs(int max_total, int min_each = 1) {
    std::vector<std::pair<Index, Index>> out;
    for (int wa = min_each; wa + min_each <= max_total; ++wa)
        for (int wb = min_each; wa + wb <= max_total; ++wb)
            for (const Index& a : enumerate_compositions(wa))
                for (const Index& b : enumerate_compositions(wb)) out.emplace_back(a, b);
    return out;
}

inline std::vector<std::pair<Index, Index>> admissible_pairs(int max_total) {
    std::vector<std::pair<Index, Index>> out;
    for (int wa = 2; wa + 2 <= max_total; ++wa)
        for (int wb = 2; wa + wb <= max_total; ++wb)
            for (const Index& a : enumerate_admissible(wa))
                for (const Index& b : enumerate_admissible(wb)) out.emplace_back(a, b);
    return out;
}

// Exact product identity between one-variable series: every index pair.
inline std::vector<CheckItem> stuffle_series_suite(int max_weight, int cap) {
    std::vector<CheckItem> items;
    for (const auto& [a, b] : composition_pairs(max_weight)) {
        items.push_back({"stuffle series (" + to_string(a) + ")*(" + to_string(b) + ")",
                         [a = a, b = b, cap] { return verify_stuffle_series(a, b, cap); }});
    }
    return items;
}

// Shuffle identity on word series, admissible pairs only, plus the pinned
// weight-5 expansion of the product of zeta(2) and zeta(3).
inline std::vector<CheckItem> shuffle_series_suite(int max_weight, int cap) {
    std::vector<CheckItem> items;
    for (const auto& [a, b] : admissible_pairs(max_weight)) {
        items.push_back({"shuffle series (" + to_string(a) + ")*(" + to_string(b) + ")",
                         [a = a, b = b, cap] {
                             return verify_shuffle_series(word_of_index(a), word_of_index(b), cap);
                         }});
    }
    items.push_back({"shuffle expansion (2)*(3) = 6(1,4) + 3(2,3) + (3,2)", [] {
                         LinComb<Index> expected;
                         expected.add_term(Index({1, 4}), 6);
                         expected.add_term(Index({2, 3}), 3);
                         expected.add_term(Index({3, 2}), 1);
                         return shuffle_on_indices(Index({2}), Index({3})) == expected;
                     }});
    return items;
}

// Every derivative-rule branch of the three series systems.
inline std::vector<CheckItem> ode_suite(int max_weight, int cap) {
    std::vector<CheckItem> items;
    for (const auto& [a, b] : composition_pairs(max_weight))
        for (Var v : {Var::X, Var::Y}) {
            items.push_back({"two-var ODE d/d" + std::string(v == Var::X ? "x" : "y") + " (" +
                                 to_string(a) + ";" + to_string(b) + ")",
                             [v, a = a, b = b, cap] {
                                 return verify_ode_two_var(v, a, b, cap).ok;
                             }});
        }
    for (int w = 1; w <= max_weight; ++w)
        for (const Index& c : enumerate_compositions(w))
            for (Var v : {Var::X, Var::Y}) {
                std::string vn = v == Var::X ? "x" : "y";
                items.push_back({"diagonal ODE d/d" + vn + " (" + to_string(c) + ")",
                                 [v, c = c, cap] { return verify_ode_diagonal(v, c, cap).ok; }});
                items.push_back({"single-var ODE d/d" + vn + " (" + to_string(c) + ")",
                                 [v, c = c, cap] { return verify_ode_single_var(v, c, cap).ok; }});
            }
    return items;
}

// Chart inverses, the order-five rotation, the pinned pullback displays, the
// chart ODE table, the dlog pole bookkeeping, and pullback functoriality.
// The underlying verifiers are cheap, so they run while building the list.
inline std::vector<CheckItem> charts_suite() {
    std::vector<CheckItem> items;
    auto absorb = [&items](const std::vector<ChartCheck>& checks) {
        for (const ChartCheck& c : checks)
            items.push_back({c.label, [ok = c.ok] { return ok; }});
    };
    absorb(verify_chart_inverses());
    ChartCheck cyc = verify_cyclic_order_five();
    items.push_back({cyc.label, [ok = cyc.ok] { return ok; }});
    absorb(verify_pullback_displays());
    absorb(verify_chart_ode_table());
    absorb(verify_log_pole_invariant());
    absorb(verify_pullback_functoriality());
    return items;
}

// Product identity for disc evaluations: every index pair against every point
// pair drawn from {p, 2p, p^2}.
inline std::vector<CheckItem> padic_suite(const std::vector<long long>& primes, int max_weight,
                                          long long prec) {
    std::vector<CheckItem> items;
    for (long long p : primes) {
        const Rational points[3] = {Rational(p), Rational(2 * p), Rational(p * p)};
        for (const auto& [a, b] : composition_pairs(max_weight))
            for (const Rational& x : points)
                for (const Rational& y : points) {
                    std::string label = "p-adic stuffle p=" + std::to_string(p) + " (" +
                                        to_string(a) + ")*(" + to_string(b) + ") at (" +
                                        to_fraction_string(x) + "," + to_fraction_string(y) + ")";
                    items.push_back({std::move(label), [a = a, b = b, p, x, y, prec] {
                                         return verify_stuffle_padic(a, b, p, x, y, prec);
                                     }});
                }
    }
    return items;
}

// Exact finite-box product identity for every pair at every truncation up to
// max_n, plus the pinned 9/4 decomposition.
inline std::vector<CheckItem> truncated_suite(int max_weight, long long max_n) {
    std::vector<CheckItem> items;
    items.push_back({"box decomposition (1)*(1) at N=2 gives 9/4", [] {
                         Rational lhs = mzv_truncated(Index({1}), 2) * mzv_truncated(Index({1}), 2);
                         return lhs == Rational(9, 4) && verify_truncated_stuffle(Index({1}), Index({1}), 2);
                     }});
    for (const auto& [a, b] : composition_pairs(max_weight)) {
        items.push_back({"truncated stuffle (" + to_string(a) + ")*(" + to_string(b) +
                             ") for N=1.." + std::to_string(max_n),
                         [a = a, b = b, max_n] {
                             for (long long n = 1; n <= max_n; ++n)
                                 if (!verify_truncated_stuffle(a, b, n)) return false;
                             return true;
                         }});
    }
    return items;
}

// Floating-point double shuffle checks at large truncation.
inline std::vector<CheckItem> numeric_suite(long long n, double tol) {
    std::vector<CheckItem> items;
    for (auto [a, b] : {std::pair(Index({2}), Index({2})), std::pair(Index({2}), Index({3}))}) {
        items.push_back({"numeric double shuffle (" + to_string(a) + ")*(" + to_string(b) + ")",
                         [a = a, b = b, n, tol] {
                             return verify_double_shuffle_numeric(a, b, n, tol);
                         }});
    }
    items.push_back({"zeta(4) - 4 zeta(1,3) vanishes numerically", [n, tol] {
                         Estimate e = evaluate_relation_numeric(
                             double_shuffle_relation(Index({2}), Index({2})), n);
                         return std::abs(e.value) < tol;
                     }});
    return items;
}

}  // namespace mzv
