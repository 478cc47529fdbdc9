#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mzv/series.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/words.hpp"

namespace mzv {

namespace detail {

inline Integer ipow(int base, int exp) {
    Integer r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Sum of x^{d_px} y^{d_py} / prod_i d_i^{e_i} over strict chains
// 0 < d_0 < ... < d_{n-1}, pruned by d_px + d_py <= cap. px and py may sit
// anywhere in the chain; the chain maximum is always one of them, so the
// cutoff bounds the whole enumeration.
inline void chain_sum2(const std::vector<int>& e, int px, int py, int cap, PowerSeries2& out) {
    const int n = static_cast<int>(e.size());
    std::vector<int> d(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int pos, int lo, const Rational& running) -> void {
        for (int v = lo;; ++v) {
            const int lbx = pos <= px ? v + (px - pos) : d[static_cast<size_t>(px)];
            const int lby = pos <= py ? v + (py - pos) : d[static_cast<size_t>(py)];
            if (lbx + lby > cap) break;
            d[static_cast<size_t>(pos)] = v;
            Rational r = running / Rational(ipow(v, e[static_cast<size_t>(pos)]));
            if (pos + 1 == n)
                out.add_coeff(d[static_cast<size_t>(px)], d[static_cast<size_t>(py)], r);
            else
                self(self, pos + 1, v + 1, r);
        }
    };
    rec(rec, 0, 1, Rational(1));
}

inline Index with_last_decremented(const Index& idx) {
    std::vector<int> parts = idx.parts();
    --parts.back();
    return Index(std::move(parts));
}
inline Index without_last(const Index& idx) {
    std::vector<int> parts = idx.parts();
    parts.pop_back();
    return Index(std::move(parts));
}
inline Index without_first(const Index& idx) {
    return Index(std::vector<int>(idx.parts().begin() + 1, idx.parts().end()));
}
inline Index with_appended(const Index& idx, int part) {
    std::vector<int> parts = idx.parts();
    parts.push_back(part);
    return Index(std::move(parts));
}

}  // namespace detail

// Coefficients of Li_c(t) = sum over 0 < m_1 < ... < m_h of t^{m_h} / prod m_i^{c_i},
// collected for m_h <= cap by direct chain enumeration.
inline PowerSeries1 li1_coeffs(const Index& c, int cap) {
    const int h = c.depth();
    PowerSeries1 out(cap);
    std::vector<int> d(static_cast<size_t>(h));
    auto rec = [&](auto&& self, int pos, int lo, const Rational& running) -> void {
        for (int v = lo; v + (h - 1 - pos) <= cap; ++v) {
            d[static_cast<size_t>(pos)] = v;
            Rational r = running / Rational(detail::ipow(v, c.part(pos)));
            if (pos + 1 == h)
                out.add_coeff(v, r);
            else
                self(self, pos + 1, v + 1, r);
        }
    };
    rec(rec, 0, 1, Rational(1));
    return out;
}

// Coefficients of Li_{a,b}(x,y) = sum over 0 < m_1 < ... < m_k < n_1 < ... < n_l
// of x^{m_k} y^{n_l} / (prod m_i^{a_i} prod n_j^{b_j}), for m_k + n_l <= cap.
inline PowerSeries2 li2_coeffs(const Index& a, const Index& b, int cap) {
    std::vector<int> e = a.parts();
    e.insert(e.end(), b.parts().begin(), b.parts().end());
    PowerSeries2 out(cap);
    detail::chain_sum2(e, a.depth() - 1, a.depth() + b.depth() - 1, cap, out);
    return out;
}

// Region sum attached to a quasi-shuffle: chains indexed by the merged image,
// with the x and y exponents read off at the images of the two block ends.
inline PowerSeries2 li_sigma_coeffs(const QuasiShuffle& qs, const Index& a, const Index& b,
                                    int cap) {
    const Index merged = merge_index(qs, a, b);
    const int px = qs.sigma[static_cast<size_t>(qs.k - 1)];
    const int py = qs.sigma[static_cast<size_t>(qs.k + qs.l - 1)];
    PowerSeries2 out(cap);
    detail::chain_sum2(merged.parts(), px, py, cap, out);
    return out;
}

// Every quasi-shuffle region sum collapses to a single classical series:
//   Diagonal  -> Li_inner(xy)        (block ends merged)
//   XBeforeY  -> Li_{inner,outer}(x,y)
//   YBeforeX  -> Li_{inner,outer}(y,x)
enum class SigmaKind { Diagonal, XBeforeY, YBeforeX };

struct SigmaTermForm {
    SigmaKind kind = SigmaKind::Diagonal;
    Index inner;
    std::optional<Index> outer;  // absent exactly in the Diagonal case

    bool operator==(const SigmaTermForm&) const = default;
};

inline SigmaTermForm classify_sigma(const QuasiShuffle& qs, const Index& a, const Index& b) {
    const Index merged = merge_index(qs, a, b);
    const int px = qs.sigma[static_cast<size_t>(qs.k - 1)];
    const int py = qs.sigma[static_cast<size_t>(qs.k + qs.l - 1)];
    if (px == py) return SigmaTermForm{SigmaKind::Diagonal, merged, std::nullopt};
    const int split = std::min(px, py) + 1;  // the larger of px, py is the chain top
    std::vector<int> head(merged.parts().begin(), merged.parts().begin() + split);
    std::vector<int> tail(merged.parts().begin() + split, merged.parts().end());
    return SigmaTermForm{px < py ? SigmaKind::XBeforeY : SigmaKind::YBeforeX,
                         Index(std::move(head)), Index(std::move(tail))};
}

inline PowerSeries2 series_of_form(const SigmaTermForm& form, int cap) {
    switch (form.kind) {
        case SigmaKind::Diagonal:
            return substitute_xy(li1_coeffs(form.inner, cap / 2), cap);
        case SigmaKind::XBeforeY:
            return li2_coeffs(form.inner, *form.outer, cap);
        case SigmaKind::YBeforeX:
            return li2_coeffs(form.inner, *form.outer, cap).transpose();
    }
    throw std::logic_error("series_of_form: bad kind");
}

// Li_a(x) Li_b(y) == sum over quasi-shuffles of the classified region series,
// as an exact identity of truncated series.
inline bool verify_stuffle_series(const Index& a, const Index& b, int cap) {
    PowerSeries2 lhs = embed_series(li1_coeffs(a, cap), Var::X, cap) *
                       embed_series(li1_coeffs(b, cap), Var::Y, cap);
    PowerSeries2 rhs(cap);
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, PowerSeries2> cache;
    for (const QuasiShuffle& qs : enumerate_quasi_shuffles(a.depth(), b.depth())) {
        const SigmaTermForm form = classify_sigma(qs, a, b);
        auto key = std::make_tuple(static_cast<int>(form.kind), form.inner.parts(),
                                   form.outer ? form.outer->parts() : std::vector<int>{});
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, series_of_form(form, cap)).first;
        rhs = rhs + it->second;
    }
    return lhs == rhs;
}

// Li of the first word times Li of the second equals the shuffle-expansion
// sum, as one-variable truncated series. Works for any index-encoding words.
inline bool verify_shuffle_series(const Word& w1, const Word& w2, int cap) {
    PowerSeries1 lhs = li1_coeffs(index_of_word(w1), cap) * li1_coeffs(index_of_word(w2), cap);
    PowerSeries1 rhs(cap);
    const LinComb<Word> expansion = shuffle_words(w1, w2);
    for (const auto& [word, c] : expansion.terms()) {
        PowerSeries1 s = li1_coeffs(index_of_word(word), cap);
        for (const auto& [i, q] : s.coeffs()) rhs.add_coeff(i, c * q);
    }
    return lhs == rhs;
}

// Differential systems. TwoVar differentiates Li_{a,b}(x,y); Diagonal
// differentiates Li_c(xy); SingleVar differentiates Li_c(y), which is
// constant in x. Each verifier picks the branch from the index shape, checks
// the stated right-hand side as an exact truncated-series identity at the
// derivative's cap, and reports which branch fired.
enum class OdeSystem { TwoVar, Diagonal, SingleVar };

struct OdeCheck {
    std::string branch;
    bool ok = false;
};

inline OdeCheck verify_ode_two_var(Var v, const Index& a, const Index& b, int cap) {
    using namespace detail;
    const int cc = cap - 1;
    const int k = a.depth(), l = b.depth();
    const PowerSeries2 lhs = li2_coeffs(a, b, cap).partial_derivative(v);
    if (v == Var::X) {
        if (a.last() != 1) {
            PowerSeries2 rhs = li2_coeffs(with_last_decremented(a), b, cap).divide_by_monomial(Var::X);
            return {"x: a_k>1", lhs == rhs};
        }
        const PowerSeries2 gx = geometric(GeomDenom::OneMinusX, cap);
        // first term: 1/(1-x) times the series with a's last part removed
        PowerSeries2 t1 = k != 1 ? li2_coeffs(without_last(a), b, cap)
                                 : embed_series(li1_coeffs(b, cap), Var::Y, cap);
        // second term: (1/x + 1/(1-x)) times the series with b_1 pulled across
        PowerSeries2 t2 = [&] {
            if (l != 1) {
                Index head = k != 1 ? with_appended(without_last(a), b.part(0)) : Index({b.part(0)});
                return li2_coeffs(head, without_first(b), cap);
            }
            Index joined = k != 1 ? with_appended(without_last(a), b.part(0)) : b;
            return substitute_xy(li1_coeffs(joined, cap / 2), cap);
        }();
        PowerSeries2 rhs = (gx * t1).truncated(cc) -
                           (t2.divide_by_monomial(Var::X) + (gx * t2).truncated(cc));
        std::string branch = std::string("x: a_k=1,") + (k != 1 ? "k>1," : "k=1,") +
                             (l != 1 ? "l>1" : "l=1");
        return {branch, lhs == rhs};
    }
    if (b.last() != 1) {
        PowerSeries2 rhs = li2_coeffs(a, with_last_decremented(b), cap).divide_by_monomial(Var::Y);
        return {"y: b_l>1", lhs == rhs};
    }
    const PowerSeries2 gy = geometric(GeomDenom::OneMinusY, cap);
    if (l != 1) {
        PowerSeries2 rhs = (gy * li2_coeffs(a, without_last(b), cap)).truncated(cc);
        return {"y: b_l=1,l>1", lhs == rhs};
    }
    PowerSeries2 rhs = (gy * substitute_xy(li1_coeffs(a, cap / 2), cap)).truncated(cc);
    return {"y: b_l=1,l=1", lhs == rhs};
}

inline OdeCheck verify_ode_diagonal(Var v, const Index& c, int cap) {
    using namespace detail;
    const int h = c.depth();
    const Var other = v == Var::X ? Var::Y : Var::X;
    const PowerSeries2 lhs = substitute_xy(li1_coeffs(c, cap / 2), cap).partial_derivative(v);
    const char vname = v == Var::X ? 'x' : 'y';
    if (c.last() != 1) {
        PowerSeries2 rhs =
            substitute_xy(li1_coeffs(with_last_decremented(c), cap / 2), cap).divide_by_monomial(v);
        return {std::string(1, vname) + ": c_h>1", lhs == rhs};
    }
    // (other variable)/(1-xy) times the series with c's last part removed
    if (h != 1) {
        PowerSeries2 t = substitute_xy(li1_coeffs(without_last(c), cap / 2), cap);
        PowerSeries2 rhs =
            (geometric(GeomDenom::OneMinusXY, cap) * t).truncated(cap - 2).times_monomial(other);
        return {std::string(1, vname) + ": c_h=1,h>1", lhs == rhs};
    }
    PowerSeries2 rhs = geometric(GeomDenom::OneMinusXY, cap - 2).times_monomial(other);
    return {std::string(1, vname) + ": c_h=1,h=1", lhs == rhs};
}

inline OdeCheck verify_ode_single_var(Var v, const Index& c, int cap) {
    using namespace detail;
    const int cc = cap - 1;
    const int h = c.depth();
    const PowerSeries2 lhs =
        embed_series(li1_coeffs(c, cap), Var::Y, cap).partial_derivative(v);
    if (v == Var::X) return {"x: constant", lhs == PowerSeries2(cc)};
    if (c.last() != 1) {
        PowerSeries2 rhs = embed_series(li1_coeffs(with_last_decremented(c), cap), Var::Y, cap)
                               .divide_by_monomial(Var::Y);
        return {"y: c_h>1", lhs == rhs};
    }
    const PowerSeries2 gy = geometric(GeomDenom::OneMinusY, cap);
    if (h != 1) {
        PowerSeries2 rhs = (gy * embed_series(li1_coeffs(without_last(c), cap), Var::Y, cap)).truncated(cc);
        return {"y: c_h=1,h>1", lhs == rhs};
    }
    return {"y: c_h=1,h=1", lhs == geometric(GeomDenom::OneMinusY, cc)};
}

}  // namespace mzv
