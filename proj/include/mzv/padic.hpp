#pragma once

// Capped-precision p-adic arithmetic, plus direct p-adic summation of the
// polylogarithm series inside the disc |t|_p < 1. A value is either
//   p^val * unit + O(p^(val+rel))   with unit in [1, p^rel) coprime to p,
// or a zero representative 0 + O(p^abs); abs = kExact marks the exact zero
// (valuation +infinity). Every operation carries the minimum justified
// precision of its operands, so a final is_zero()/abs_precision() pair is an
// honest statement about what the computation established.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mzv/rational.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/words.hpp"

namespace mzv {

class Padic {
  public:
    static constexpr long long kExact = std::numeric_limits<long long>::max();

    static Padic zero(long long p) { return zero_to_precision(p, kExact); }
    static Padic zero_to_precision(long long p, long long abs_prec) {
        check_prime(p);
        Padic out;
        out.prime_ = p;
        out.zero_ = true;
        out.abs_ = abs_prec;
        return out;
    }

    static Padic from_parts(long long p, long long val, Integer unit, long long rel_prec) {
        check_prime(p);
        if (rel_prec < 1) throw std::invalid_argument("Padic: precision must be >= 1");
        Integer mod = int_pow(p, rel_prec);
        unit %= mod;
        if (unit < 0) unit += mod;
        if (unit == 0) return zero_to_precision(p, val + rel_prec);
        if (unit % p == 0) throw std::invalid_argument("Padic: unit must be coprime to p");
        Padic out;
        out.prime_ = p;
        out.zero_ = false;
        out.val_ = val;
        out.rel_ = rel_prec;
        out.unit_ = std::move(unit);
        return out;
    }

    static Padic from_integer(const Integer& n, long long p, long long rel_prec) {
        check_prime(p);
        if (n == 0) return zero(p);
        Integer u = n < 0 ? Integer(-n) : n;
        long long v = 0;
        while (u % p == 0) {
            u /= p;
            ++v;
        }
        if (n < 0) u = -u;
        return from_parts(p, v, std::move(u), rel_prec);
    }

    static Padic from_rational(const Rational& q, long long p, long long rel_prec) {
        if (q == 0) return zero(p);
        Padic num = from_integer(numerator(q), p, rel_prec);
        Padic den = from_integer(denominator(q), p, rel_prec);
        return num / den;
    }

    long long prime() const { return prime_; }
    bool is_zero() const { return zero_; }
    bool is_exact_zero() const { return zero_ && abs_ == kExact; }
    // valuation is +infinity (kExact) for a zero representative
    long long valuation() const { return zero_ ? kExact : val_; }
    long long rel_precision() const {
        if (zero_) throw std::logic_error("Padic: zero has no relative precision");
        return rel_;
    }
    long long abs_precision() const { return zero_ ? abs_ : val_ + rel_; }
    const Integer& unit() const {
        if (zero_) throw std::logic_error("Padic: zero has no unit part");
        return unit_;
    }

    friend Padic operator+(const Padic& a, const Padic& b) {
        match(a, b);
        if (a.zero_ && b.zero_)
            return zero_to_precision(a.prime_, std::min(a.abs_, b.abs_));
        if (a.zero_) return b.capped_to_absolute(a.abs_);
        if (b.zero_) return a.capped_to_absolute(b.abs_);
        long long v = std::min(a.val_, b.val_);
        long long abs = std::min(a.abs_precision(), b.abs_precision());
        if (abs <= v) return zero_to_precision(a.prime_, abs);
        long long window = abs - v;
        Integer mod = int_pow(a.prime_, window);
        Integer s = (a.unit_ * int_pow(a.prime_, a.val_ - v) +
                     b.unit_ * int_pow(a.prime_, b.val_ - v)) %
                    mod;
        if (s < 0) s += mod;
        if (s == 0) return zero_to_precision(a.prime_, abs);
        long long t = 0;
        while (s % a.prime_ == 0) {
            s /= a.prime_;
            ++t;
        }
        return from_parts(a.prime_, v + t, std::move(s), window - t);
    }

    Padic operator-() const {
        if (zero_) return *this;
        Padic out = *this;
        out.unit_ = int_pow(prime_, rel_) - unit_;
        return out;
    }
    friend Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }

    friend Padic operator*(const Padic& a, const Padic& b) {
        match(a, b);
        if (a.is_exact_zero() || b.is_exact_zero()) return zero(a.prime_);
        if (a.zero_ || b.zero_) {
            long long lhs = a.zero_ ? a.abs_ : a.val_;
            long long rhs = b.zero_ ? b.abs_ : b.val_;
            return zero_to_precision(a.prime_, sat_add(lhs, rhs));
        }
        long long rel = std::min(a.rel_, b.rel_);
        Integer u = (a.unit_ * b.unit_) % int_pow(a.prime_, rel);
        return from_parts(a.prime_, a.val_ + b.val_, std::move(u), rel);
    }

    Padic inverse() const {
        if (zero_)
            throw std::domain_error("Padic: inverse of zero (or of a value not "
                                    "distinguishable from zero at tracked precision)");
        return from_parts(prime_, -val_, inv_mod(unit_, int_pow(prime_, rel_)), rel_);
    }
    friend Padic operator/(const Padic& a, const Padic& b) { return a * b.inverse(); }

    // Forget precision beyond p^abs_prec. Only ever underclaims.
    Padic capped_to_absolute(long long abs_prec) const {
        if (abs_prec >= abs_precision()) return *this;
        if (zero_) return zero_to_precision(prime_, abs_prec);
        if (abs_prec <= val_) return zero_to_precision(prime_, abs_prec);
        Padic out = *this;
        out.rel_ = abs_prec - val_;
        out.unit_ = unit_ % int_pow(prime_, out.rel_);
        return out;  // unit stays coprime: unchanged mod p
    }

    Padic pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        if (e == 0) {
            if (zero_) throw std::invalid_argument("Padic: 0^0 is undefined");
            return from_parts(prime_, 0, 1, rel_);
        }
        Padic acc = *this;
        Padic result = acc;
        --e;
        while (e > 0) {
            if (e & 1) result = result * acc;
            acc = acc * acc;
            e >>= 1;
        }
        return result;
    }

  private:
    static void check_prime(long long p) {
        if (p < 2) throw std::invalid_argument("Padic: prime must be >= 2");
    }
    static void match(const Padic& a, const Padic& b) {
        if (a.prime_ != b.prime_) throw std::invalid_argument("Padic: prime mismatch");
    }
    static Integer int_pow(long long p, long long e) {
        Integer r = 1, base = p;
        for (long long i = 0; i < e; ++i) r *= base;
        return r;
    }
    // extended Euclid; a must be coprime to m
    static Integer inv_mod(const Integer& a, const Integer& m) {
        Integer old_r = a % m, r = m;
        if (old_r < 0) old_r += m;
        Integer old_s = 1, s = 0;
        while (r != 0) {
            Integer q = old_r / r;
            old_r -= q * r;
            std::swap(old_r, r);
            old_s -= q * s;
            std::swap(old_s, s);
        }
        Integer inv = old_s % m;
        if (inv < 0) inv += m;
        return inv;
    }
    static long long sat_add(long long a, long long b) {
        if (a == kExact || b == kExact) return kExact;
        return a + b;
    }
    long long prime_ = 2;
    bool zero_ = true;
    long long val_ = 0;    // nonzero case
    long long rel_ = 0;    // nonzero case
    Integer unit_ = 0;     // nonzero case
    long long abs_ = kExact;  // zero case
};

inline long long padic_ord(const Integer& n, long long p) {
    if (n == 0) throw std::invalid_argument("padic_ord: ord of zero is infinite");
    Integer u = n < 0 ? Integer(-n) : n;
    long long v = 0;
    while (u % p == 0) {
        u /= p;
        ++v;
    }
    return v;
}

// True when the tracked precisions certify a - b = O(p^prec).
inline bool agree_to_precision(const Padic& a, const Padic& b, long long prec) {
    Padic d = a - b;
    return d.is_zero() && d.abs_precision() >= prec;
}

// Smallest M such that every series term whose outermost summation variable
// exceeds M has valuation >= prec, given points of valuation >= 1: a term at
// outer index n has valuation at least f(n) = n - idx_weight*floor(log_p n).
// f dips at powers of p, so we scan past the last possible failure.
inline long long required_terms(long long p, long long idx_weight, long long prec) {
    if (p < 2) throw std::invalid_argument("required_terms: prime must be >= 2");
    long long cap = 4 * (prec + 32 * idx_weight) + 64;
    long long last_fail = 0;
    long long e = 0;
    Integer next_pow = p;
    for (long long n = 1; n <= cap; ++n) {
        if (next_pow <= n) {
            ++e;
            next_pow *= p;
        }
        if (n - idx_weight * e < prec) last_fail = n;
    }
    return last_fail;
}

namespace detail {

// Sum over strict chains 0 < d_0 < ... < d_{m-1} <= trunc of
// prod_i d_i^{-e_i} times, for each (pos, P) attachment, P^{d_pos}.
// One prefix-sum sweep per chain position: d[n] accumulates the sum over
// chains whose element at the current position equals n.
inline Padic chain_sum_padic(const std::vector<int>& e,
                             const std::vector<std::pair<int, const Padic*>>& attach,
                             long long trunc, long long p, long long rel_prec) {
    const int m = static_cast<int>(e.size());
    const long long N = trunc;
    const Padic zero = Padic::zero(p);
    const Padic one = Padic::from_parts(p, 0, 1, rel_prec);
    if (N < m) return zero;

    std::vector<std::vector<Padic>> powers(attach.size());
    for (size_t t = 0; t < attach.size(); ++t) {
        powers[t].reserve(static_cast<size_t>(N) + 1);
        powers[t].push_back(zero);  // unused slot n = 0
        for (long long n = 1; n <= N; ++n)
            powers[t].push_back(n == 1 ? *attach[t].second : powers[t].back() * *attach[t].second);
    }
    std::vector<Padic> inv(static_cast<size_t>(N) + 1, zero);
    for (long long n = 1; n <= N; ++n)
        inv[static_cast<size_t>(n)] = Padic::from_integer(n, p, rel_prec).inverse();

    std::vector<Padic> d(static_cast<size_t>(N) + 1, zero);
    std::vector<Padic> nd(static_cast<size_t>(N) + 1, zero);
    for (int pos = 0; pos < m; ++pos) {
        Padic running = zero;  // sum of d[n'] over n' < n, empty-chain value for pos 0
        for (long long n = 1; n <= N; ++n) {
            Padic base = pos == 0 ? one : running;
            if (pos > 0) running = running + d[static_cast<size_t>(n)];
            Padic term = base * inv[static_cast<size_t>(n)].pow(e[static_cast<size_t>(pos)]);
            for (size_t t = 0; t < attach.size(); ++t)
                if (attach[t].first == pos) term = term * powers[t][static_cast<size_t>(n)];
            nd[static_cast<size_t>(n)] = std::move(term);
        }
        d.swap(nd);
    }
    Padic total = zero;
    for (long long n = 1; n <= N; ++n) total = total + d[static_cast<size_t>(n)];
    return total;
}

inline void require_in_disc(const Padic& t) {
    if (!t.is_zero() && t.valuation() < 1)
        throw std::domain_error("p-adic evaluation point must have valuation >= 1");
}

// Truncation length and working precision for a target precision: the unit
// denominators 1/n^e cost at most idx_weight*floor(log_p trunc) digits, so
// pad both the tail cutoff and the relative precision by that much.
struct PadicEvalPlan {
    long long trunc;
    long long rel;
    long long pad;
};

inline PadicEvalPlan padic_eval_plan(long long p, long long idx_weight, long long prec) {
    long long m1 = required_terms(p, idx_weight, prec);
    long long e = 0;
    Integer q = 1;
    while (q <= m1) {
        q *= p;
        ++e;
    }
    long long pad = idx_weight * (e + 1) + 4;
    return {required_terms(p, idx_weight, prec + pad), prec + 2 * pad, pad};
}

}  // namespace detail

// Li_c(t) = sum over 0 < m_1 < ... < m_h <= trunc of t^{m_h} / prod m_i^{c_i},
// summed p-adically; correct to prec digits for |t|_p < 1.
inline Padic eval_li1_padic(const Index& c, const Padic& t, long long prec) {
    detail::require_in_disc(t);
    auto plan = detail::padic_eval_plan(t.prime(), c.weight(), prec);
    std::vector<std::pair<int, const Padic*>> attach{{c.depth() - 1, &t}};
    return detail::chain_sum_padic(c.parts(), attach, plan.trunc, t.prime(), plan.rel)
        .capped_to_absolute(prec);
}

// Li_{a,b}(x,y) = sum over 0 < m_1 < ... < m_k < n_1 < ... < n_l of
// x^{m_k} y^{n_l} / (prod m_i^{a_i} prod n_j^{b_j}), summed p-adically.
inline Padic eval_li2_padic(const Index& a, const Index& b, const Padic& x, const Padic& y,
                            long long prec) {
    if (x.prime() != y.prime()) throw std::invalid_argument("eval_li2_padic: prime mismatch");
    detail::require_in_disc(x);
    detail::require_in_disc(y);
    std::vector<int> e = a.parts();
    e.insert(e.end(), b.parts().begin(), b.parts().end());
    auto plan = detail::padic_eval_plan(x.prime(), a.weight() + b.weight(), prec);
    std::vector<std::pair<int, const Padic*>> attach{{a.depth() - 1, &x},
                                                     {a.depth() + b.depth() - 1, &y}};
    return detail::chain_sum_padic(e, attach, plan.trunc, x.prime(), plan.rel)
        .capped_to_absolute(prec);
}

// Region sum attached to a quasi-shuffle, the p-adic counterpart of
// li_sigma_coeffs: chains indexed by the merged image, x and y read off at
// the images of the two block ends.
inline Padic eval_li_sigma_padic(const QuasiShuffle& qs, const Index& a, const Index& b,
                                 const Padic& x, const Padic& y, long long prec) {
    if (x.prime() != y.prime())
        throw std::invalid_argument("eval_li_sigma_padic: prime mismatch");
    detail::require_in_disc(x);
    detail::require_in_disc(y);
    const Index merged = merge_index(qs, a, b);
    const int px = qs.sigma[static_cast<size_t>(qs.k - 1)];
    const int py = qs.sigma[static_cast<size_t>(qs.k + qs.l - 1)];
    auto plan = detail::padic_eval_plan(x.prime(), merged.weight(), prec);
    std::vector<std::pair<int, const Padic*>> attach{{px, &x}, {py, &y}};
    return detail::chain_sum_padic(merged.parts(), attach, plan.trunc, x.prime(), plan.rel)
        .capped_to_absolute(prec);
}

// Li_a(x) * Li_b(y) = sum over quasi-shuffles of the region sums, checked at
// a point of the p-adic disc to prec digits. The two factors are evaluated
// with padded precision so that their product (whose factors can have small
// negative valuation from the 1/n^e units) is still good to prec.
inline bool verify_stuffle_padic(const Index& a, const Index& b, long long p, const Rational& x,
                                 const Rational& y, long long prec) {
    auto plan = detail::padic_eval_plan(p, a.weight() + b.weight(), prec);
    long long internal = prec + plan.pad;
    Padic X = Padic::from_rational(x, p, plan.rel + plan.pad);
    Padic Y = Padic::from_rational(y, p, plan.rel + plan.pad);
    detail::require_in_disc(X);
    detail::require_in_disc(Y);
    Padic lhs = eval_li1_padic(a, X, internal) * eval_li1_padic(b, Y, internal);
    Padic rhs = Padic::zero(p);
    for (const QuasiShuffle& qs : enumerate_quasi_shuffles(a.depth(), b.depth()))
        rhs = rhs + eval_li_sigma_padic(qs, a, b, X, Y, internal);
    return agree_to_precision(lhs, rhs, prec);
}

// ---- text forms ------------------------------------------------------------
//
// Mantissa form:  "5^2 * 63 mod 5^3"   (p^val * unit, unit given mod p^rel)
//                 "0 mod 5^4"          (zero to absolute precision 4)
//                 "0"                  (exact zero)
// Digit form:     "3*5^2 + 2*5^3 + 2*5^4 + O(5^5)", digits ascending;
//                 "O(5^4)" for an inexact zero, "0" exact.
// parse_padic accepts all of the above.

inline std::string to_string(const Padic& v) {
    std::string p = std::to_string(v.prime());
    if (v.is_exact_zero()) return "0";
    if (v.is_zero()) return "0 mod " + p + "^" + std::to_string(v.abs_precision());
    return p + "^" + std::to_string(v.valuation()) + " * " + v.unit().str() + " mod " + p + "^" +
           std::to_string(v.rel_precision());
}

inline std::string to_digit_string(const Padic& v) {
    std::string p = std::to_string(v.prime());
    if (v.is_exact_zero()) return "0";
    if (v.is_zero()) return "O(" + p + "^" + std::to_string(v.abs_precision()) + ")";
    std::string out;
    Integer u = v.unit();
    long long pos = v.valuation();
    while (u != 0) {
        Integer digit = u % v.prime();
        if (digit != 0) {
            if (!out.empty()) out += " + ";
            out += digit.str() + "*" + p + "^" + std::to_string(pos);
        }
        u /= v.prime();
        ++pos;
    }
    if (out.empty()) out = "0";  // cannot happen for a valid unit, kept for safety
    return out + " + O(" + p + "^" + std::to_string(v.abs_precision()) + ")";
}

inline Padic parse_padic(const std::string& text) {
    auto fail = []() -> Padic { throw std::invalid_argument("parse_padic: unrecognized form"); };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "0") throw std::invalid_argument("parse_padic: exact zero carries no prime");
    auto read_ll = [&](size_t& i) {
        size_t start = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (s[start] == '-' && i == start + 1))
            throw std::invalid_argument("parse_padic: expected an integer");
        return std::stoll(s.substr(start, i - start));
    };
    auto read_int = [&](size_t& i) {
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("parse_padic: expected an integer");
        return Integer(s.substr(start, i - start));
    };
    auto expect = [&](size_t& i, const std::string& tok) {
        if (s.compare(i, tok.size(), tok) != 0)
            throw std::invalid_argument("parse_padic: expected '" + tok + "'");
        i += tok.size();
    };

    if (s.rfind("O(", 0) == 0) {  // "O(p^N)"
        size_t i = 2;
        long long p = read_ll(i);
        expect(i, "^");
        long long n = read_ll(i);
        expect(i, ")");
        if (i != s.size()) return fail();
        return Padic::zero_to_precision(p, n);
    }
    if (s.rfind("0mod", 0) == 0) {  // "0 mod p^N"
        size_t i = 4;
        long long p = read_ll(i);
        expect(i, "^");
        long long n = read_ll(i);
        if (i != s.size()) return fail();
        return Padic::zero_to_precision(p, n);
    }
    if (s.find("+O(") != std::string::npos) {  // digit expansion
        size_t tail = s.find("+O(");
        std::string body = s.substr(0, tail);
        size_t i = tail + 3;
        long long p = read_ll(i);
        expect(i, "^");
        long long abs = read_ll(i);
        expect(i, ")");
        if (i != s.size()) return fail();
        Padic acc = Padic::zero_to_precision(p, abs);
        if (body != "0") {
            size_t j = 0;
            while (j < body.size()) {
                if (body[j] == '+') ++j;
                Integer digit = read_int(j);
                size_t k = j;
                expect(k, "*");
                long long pp = read_ll(k);
                if (pp != p) throw std::invalid_argument("parse_padic: prime mismatch in digits");
                expect(k, "^");
                long long e = read_ll(k);
                j = k;
                if (e >= abs) throw std::invalid_argument("parse_padic: digit beyond precision");
                acc = acc + Padic::from_parts(p, e, digit, abs - e);
            }
        }
        return acc;
    }
    // mantissa form "p^v * u mod p^r"
    size_t i = 0;
    long long p = read_ll(i);
    expect(i, "^");
    long long v = read_ll(i);
    expect(i, "*");
    Integer u = read_int(i);
    expect(i, "mod");
    long long p2 = read_ll(i);
    if (p2 != p) throw std::invalid_argument("parse_padic: prime mismatch");
    expect(i, "^");
    long long r = read_ll(i);
    if (i != s.size()) return fail();
    return Padic::from_parts(p, v, std::move(u), r);
}

}  // namespace mzv
