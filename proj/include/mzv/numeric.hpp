#pragma once

// Exact truncated MZV partial sums and double-precision estimates with sound
// tail bounds. Partial sums run over chains 0 < n_1 < ... < n_m <= N with the
// first index part attached to the innermost variable.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mzv/lincomb.hpp"
#include "mzv/rational.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/words.hpp"

namespace mzv {

// Exact P_N(idx) = sum over 0 < n_1 < ... < n_m <= N of prod n_i^{-k_i},
// by one prefix-sum pass per chain position.
inline Rational mzv_truncated(const Index& idx, long long N) {
    if (N < 1) throw std::invalid_argument("mzv_truncated: N must be >= 1");
    const int m = idx.depth();
    std::vector<Rational> d(static_cast<size_t>(N) + 1, Rational(0));
    std::vector<Rational> nd(static_cast<size_t>(N) + 1, Rational(0));
    for (int pos = 0; pos < m; ++pos) {
        Rational running = 0;
        for (long long n = 1; n <= N; ++n) {
            Rational base = pos == 0 ? Rational(1) : running;
            if (pos > 0) running += d[static_cast<size_t>(n)];
            Integer pw = 1;
            for (int t = 0; t < idx.part(pos); ++t) pw *= n;
            nd[static_cast<size_t>(n)] = base / Rational(pw);
        }
        d.swap(nd);
    }
    Rational total = 0;
    for (long long n = 1; n <= N; ++n) total += d[static_cast<size_t>(n)];
    return total;
}

// The finite-box stuffle identity: P_N(a) * P_N(b) equals the sum of
// P_N over all quasi-shuffle merges, exactly, at every truncation N.
inline bool verify_truncated_stuffle(const Index& a, const Index& b, long long N) {
    Rational lhs = mzv_truncated(a, N) * mzv_truncated(b, N);
    Rational rhs = 0;
    for (const QuasiShuffle& qs : enumerate_quasi_shuffles(a.depth(), b.depth()))
        rhs += mzv_truncated(merge_index(qs, a, b), N);
    return lhs == rhs;
}

namespace detail {

// Compensated summation; keeps the accumulation error at a few ulps of the
// running total instead of growing with the term count.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace detail

struct Estimate {
    double value;           // truncated partial sum
    double tail_bound;      // bound on the dropped tail (see derivation below)
    double rounding_bound;  // bound on floating-point rounding in `value`
};

// Truncated floating-point partial sum of an admissible MZV with a sound
// tail bound.
//
// Tail bound derivation. Split the tail by the outermost variable n = n_m > N.
// Among the inner positions let j be the number of parts equal to 1 and
// (m-1-j) the parts >= 2. Summing each part->=2 variable freely over all
// integers contributes at most zeta(2) < 2; the j harmonic variables form an
// increasing tuple below n, so their sum is at most H_n^j / j! with
// H_n <= 1 + ln n. Hence
//   tail <= 2^(m-1-j)/j! * sum_{n>N} (1+ln n)^j n^{-k_m}.
// The summand decreases in n, so the sum is at most the integral
// I_j(N,k) = int_N^inf (1+ln t)^j t^{-k} dt, which integrates by parts to
//   I_j = (1+ln N)^j N^{1-k}/(k-1) + j/(k-1) * I_{j-1},
// with I_0 = N^{1-k}/(k-1). When j = 0 this collapses to the simple bound
// 2^(m-1) N^{1-k_m}/(k_m-1).
//
// Rounding bound. Every DP intermediate is positive and bounded by
// B = (2(1+ln N))^m (the product of the per-position factor bounds above);
// each entry costs at most k_max+4 operations, each with relative error eps,
// so the accumulated rounding is below m*N*(k_max+4)*eps*B.
inline Estimate mzv_estimate(const Index& idx, long long N) {
    if (!idx.is_admissible())
        throw std::invalid_argument("mzv_estimate: index is not admissible (divergent series)");
    if (N < 1) throw std::invalid_argument("mzv_estimate: N must be >= 1");
    const int m = idx.depth();

    std::vector<double> d(static_cast<size_t>(N) + 1, 0.0);
    std::vector<double> nd(static_cast<size_t>(N) + 1, 0.0);
    for (int pos = 0; pos < m; ++pos) {
        detail::Kahan running;
        for (long long n = 1; n <= N; ++n) {
            double base = pos == 0 ? 1.0 : running.sum;
            if (pos > 0) running.add(d[static_cast<size_t>(n)]);
            double pw = 1.0;
            for (int t = 0; t < idx.part(pos); ++t) pw *= static_cast<double>(n);
            nd[static_cast<size_t>(n)] = base / pw;
        }
        d.swap(nd);
    }
    detail::Kahan total;
    for (long long n = 1; n <= N; ++n) total.add(d[static_cast<size_t>(n)]);

    int j = 0;
    int k_max = 0;
    for (int i = 0; i < m; ++i) {
        if (i + 1 < m && idx.part(i) == 1) ++j;
        k_max = std::max(k_max, idx.part(i));
    }
    const int k = idx.last();
    const double log_term = 1.0 + std::log(static_cast<double>(N));
    double npow = 1.0;
    for (int t = 0; t < k - 1; ++t) npow *= static_cast<double>(N);
    double integral = 1.0 / npow / (k - 1);  // I_0
    double log_pow = 1.0;
    for (int step = 1; step <= j; ++step) {
        log_pow *= log_term;
        integral = log_pow / npow / (k - 1) + static_cast<double>(step) / (k - 1) * integral;
    }
    double factorial = 1.0;
    for (int step = 2; step <= j; ++step) factorial *= step;
    double two_pow = 1.0;
    for (int t = 0; t < m - 1 - j; ++t) two_pow *= 2.0;
    double tail = two_pow / factorial * integral;

    const double eps = std::numeric_limits<double>::epsilon();
    double intermediate_bound = 1.0;
    for (int t = 0; t < m; ++t) intermediate_bound *= 2.0 * log_term;
    double rounding = static_cast<double>(m) * static_cast<double>(N) * (k_max + 4) * eps *
                      intermediate_bound;

    return {total.sum, tail, rounding};
}

// Sum of coeff * estimate over a rational combination of admissible indices;
// the bound accumulates |coeff| * (tail + rounding) plus the small rounding
// of the final combination itself.
inline Estimate evaluate_relation_numeric(const LinComb<Index>& rel, long long N) {
    detail::Kahan value;
    double bound = 0.0;
    double abs_sum = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (const auto& [idx, coeff] : rel.terms()) {
        Estimate est = mzv_estimate(idx, N);
        double c = static_cast<double>(coeff);
        value.add(c * est.value);
        bound += std::abs(c) * (est.tail_bound + est.rounding_bound);
        abs_sum += std::abs(c) * std::abs(est.value);
    }
    double combination_rounding =
        abs_sum * eps * (static_cast<double>(rel.terms().size()) + 2.0);
    return {value.sum, bound, combination_rounding};
}

// |stuffle(a,b) - shuffle(a,b)| evaluated numerically must vanish within the
// tolerance plus all accumulated error bounds.
inline bool verify_double_shuffle_numeric(const Index& a, const Index& b, long long N,
                                          double tol) {
    Estimate e = evaluate_relation_numeric(double_shuffle_relation(a, b), N);
    return std::abs(e.value) <= tol + e.tail_bound + e.rounding_bound;
}

}  // namespace mzv
