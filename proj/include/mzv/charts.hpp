#pragma once

// Five coordinate charts U_1..U_5 on the compactified parameter surface of
// the two-variable polylogarithms. Chart i has coordinates (z_i, w_i); the
// boundary divisor carried by chart i is {w_i = 0}. Chart 1 is (x, y)
// itself. A cyclic automorphism c of order five permutes the divisors.
//
// One-forms are stored per chart as f dz + g dw. pullback() rewrites a form
// between charts through the transition map; residue_along_w0() extracts the
// logarithmic data of a form along {w = 0} and rejects forms with worse than
// logarithmic poles there.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mzv/ratfun.hpp"

namespace mzv {

struct ChartMap {
    RatFun2 first;   // z_i (or x) as a function of the source coordinates
    RatFun2 second;  // w_i (or y)
};

namespace detail {

inline RatFun2 rf_one() { return RatFun2(Rational(1)); }

// Building blocks in the generic coordinate pair (u, v) of a chart.
inline RatFun2 rf_u() { return RatFun2::var_x(); }
inline RatFun2 rf_v() { return RatFun2::var_y(); }
inline RatFun2 rf_one_minus_uv() { return rf_one() - rf_u() * rf_v(); }

}  // namespace detail

// (z_i, w_i) as functions of (x, y).
inline ChartMap chart_coords(int i) {
    using namespace detail;
    RatFun2 x = rf_u(), y = rf_v();
    RatFun2 one = rf_one();
    RatFun2 omxy = rf_one_minus_uv();
    switch (i) {
        case 1: return {x, y};
        case 2: return {y, (one - x) / omxy};
        case 3: return {(one - x) / omxy, omxy};
        case 4: return {omxy, (one - y) / omxy};
        case 5: return {(one - y) / omxy, x};
        default: throw std::invalid_argument("chart index must be 1..5");
    }
}

// (x, y) as functions of (z_i, w_i).
inline ChartMap chart_inverse(int i) {
    using namespace detail;
    RatFun2 z = rf_u(), w = rf_v();
    RatFun2 one = rf_one();
    RatFun2 omzw = rf_one_minus_uv();
    switch (i) {
        case 1: return {z, w};
        case 2: return {(one - w) / omzw, z};
        case 3: return {one - z * w, (one - w) / omzw};
        case 4: return {(one - z) / omzw, one - z * w};
        case 5: return {w, (one - z) / omzw};
        default: throw std::invalid_argument("chart index must be 1..5");
    }
}

// The order-five automorphism (x, y) -> ((1-y)/(1-xy), x).
inline ChartMap cyclic_map() {
    using namespace detail;
    return {(rf_one() - rf_v()) / rf_one_minus_uv(), rf_u()};
}

inline ChartMap compose(const ChartMap& outer, const ChartMap& inner) {
    return {substitute(outer.first, inner.first, inner.second),
            substitute(outer.second, inner.first, inner.second)};
}

struct OneForm {
    RatFun2 f;  // coefficient of dz (dx on chart 1)
    RatFun2 g;  // coefficient of dw (dy on chart 1)
};

// Rewrite a one-form given on chart `source` in the coordinates of chart
// `target`, through the transition map target -> source.
inline OneForm pullback(const OneForm& form, int source, int target) {
    ChartMap transition = compose(chart_coords(source), chart_inverse(target));
    const RatFun2& Z = transition.first;
    const RatFun2& W = transition.second;
    RatFun2 f_t = substitute(form.f, Z, W);
    RatFun2 g_t = substitute(form.g, Z, W);
    return {f_t * Z.derivative_x() + g_t * W.derivative_x(),
            f_t * Z.derivative_y() + g_t * W.derivative_y()};
}

// Logarithmic data of f dz + g dw along {w = 0}: requires f regular there and
// g with at most a first-order pole. The form then restricts to
// regular * dz + dlog * dw/w on the divisor.
struct Residue {
    RatFun1 regular;
    RatFun1 dlog;
    bool operator==(const Residue&) const = default;
};

inline Residue residue_along_w0(const OneForm& form) {
    if (!form.f.regular_along_y_zero())
        throw std::domain_error("one-form: dz part has a pole along w = 0");
    RatFun2 h = form.g * RatFun2::var_y();
    if (!h.regular_along_y_zero())
        throw std::domain_error("one-form: dw part has a pole of order > 1 along w = 0");
    return {form.f.restrict_y_zero(), h.restrict_y_zero()};
}

// dlog of the five divisor equations x, y, 1-x, 1-y, 1-xy, as forms on U_1.
inline std::vector<std::pair<std::string, OneForm>> five_log_forms() {
    using namespace detail;
    RatFun2 x = rf_u(), y = rf_v(), one = rf_one(), omxy = rf_one_minus_uv();
    RatFun2 zero;
    return {
        {"dlog x", {one / x, zero}},
        {"dlog y", {zero, one / y}},
        {"dlog(1-x)", {-(one / (one - x)), zero}},
        {"dlog(1-y)", {zero, -(one / (one - y))}},
        {"dlog(1-xy)", {-(y / omxy), -(x / omxy)}},
    };
}

struct ChartCheck {
    std::string label;
    bool ok;
};

// Both compositions coords o inverse and inverse o coords must be identities.
inline std::vector<ChartCheck> verify_chart_inverses() {
    std::vector<ChartCheck> out;
    ChartMap id{RatFun2::var_x(), RatFun2::var_y()};
    for (int i = 1; i <= 5; ++i) {
        ChartMap fwd_of_inv = compose(chart_coords(i), chart_inverse(i));
        ChartMap inv_of_fwd = compose(chart_inverse(i), chart_coords(i));
        out.push_back({"chart " + std::to_string(i) + ": coords o inverse = id",
                       fwd_of_inv.first == id.first && fwd_of_inv.second == id.second});
        out.push_back({"chart " + std::to_string(i) + ": inverse o coords = id",
                       inv_of_fwd.first == id.first && inv_of_fwd.second == id.second});
    }
    return out;
}

inline ChartCheck verify_cyclic_order_five() {
    ChartMap id{RatFun2::var_x(), RatFun2::var_y()};
    ChartMap c = cyclic_map();
    ChartMap acc = c;
    bool nontrivial = true;
    for (int k = 2; k <= 5; ++k) {
        acc = compose(c, acc);
        if (k < 5 && acc.first == id.first && acc.second == id.second) nontrivial = false;
    }
    bool ok = nontrivial && acc.first == id.first && acc.second == id.second;
    return {"cyclic map has exact order five", ok};
}

// Frozen coordinate differentials of the transition maps into charts 2 and 3.
inline std::vector<ChartCheck> verify_pullback_displays() {
    using namespace detail;
    RatFun2 z = rf_u(), w = rf_v(), one = rf_one();
    RatFun2 zw1 = z * w - one;
    RatFun2 jac_f = w * (one - w) / (zw1 * zw1);  // shared by dx->U2 and dy->U3
    RatFun2 jac_g = (z - one) / (zw1 * zw1);
    OneForm dx{rf_one(), RatFun2()};
    OneForm dy{RatFun2(), rf_one()};
    std::vector<ChartCheck> out;
    {
        OneForm p = pullback(dx, 1, 2);
        out.push_back({"dx on chart 2 is w(1-w)/(zw-1)^2 dz + (z-1)/(zw-1)^2 dw",
                       p.f == jac_f && p.g == jac_g});
    }
    {
        OneForm p = pullback(dy, 1, 2);
        out.push_back({"dy on chart 2 is dz", p.f == one && p.g.is_zero()});
    }
    {
        OneForm p = pullback(dx, 1, 3);
        out.push_back({"dx on chart 3 is -w dz - z dw", p.f == -w && p.g == -z});
    }
    {
        OneForm p = pullback(dy, 1, 3);
        out.push_back({"dy on chart 3 is w(1-w)/(zw-1)^2 dz + (z-1)/(zw-1)^2 dw",
                       p.f == jac_f && p.g == jac_g});
    }
    return out;
}

// One row per differential-system branch and chart: the right-hand-side form
// of the branch, its dz coefficient after pullback, and its residue data
// along {w = 0}.
struct ChartOdeCase {
    std::string label;
    int chart;
    OneForm form;  // on chart 1
    RatFun2 expected_dz;
    Residue expected_res;
};

inline std::vector<ChartOdeCase> chart_ode_cases() {
    using namespace detail;
    RatFun2 x = rf_u(), y = rf_v(), one = rf_one(), omxy = rf_one_minus_uv();
    RatFun2 zero;
    OneForm dlogx{one / x, zero};
    OneForm dlogy{zero, one / y};
    OneForm dy_over_1my{zero, one / (one - y)};
    OneForm diag_logxy{one / x, one / y};
    OneForm diag_1mxy{y / omxy, x / omxy};

    // Expected values are written in the target chart's coordinates (z, w),
    // reusing the (u, v) variable slots.
    RatFun2 z = x, w = y, omzw = omxy;
    RatFun1 zbar = RatFun1::variable();
    RatFun1 one1(Rational(1));
    RatFun1 zero1;
    RatFun1 inv_z = one1 / zbar;
    RatFun1 inv_1mz = one1 / (one1 - zbar);

    std::vector<ChartOdeCase> rows;
    // chart 2: the divisor {w_2 = 0} is {x = 1}.
    rows.push_back({"chart 2, two-var x side, a_k > 1: dx/x", 2, dlogx, w / omzw, {zero1, zero1}});
    rows.push_back({"chart 2, two-var y side, b_l > 1: dy/y", 2, dlogy, one / z, {inv_z, zero1}});
    rows.push_back({"chart 2, two-var y side, b_l = 1, l > 1: dy/(1-y)", 2, dy_over_1my,
                    one / (one - z), {inv_1mz, zero1}});
    rows.push_back({"chart 2, two-var y side, b_l = 1, l = 1: dy/(1-y)", 2, dy_over_1my,
                    one / (one - z), {inv_1mz, zero1}});
    rows.push_back({"chart 2, diagonal c_h > 1: dx/x + dy/y", 2, diag_logxy, w / omzw + one / z,
                    {inv_z, zero1}});
    rows.push_back({"chart 2, diagonal c_h = 1, h > 1: (y dx + x dy)/(1-xy)", 2, diag_1mxy,
                    (one - w) / ((one - z) * omzw), {inv_1mz, zero1}});
    rows.push_back({"chart 2, diagonal c_h = 1, h = 1: (y dx + x dy)/(1-xy)", 2, diag_1mxy,
                    (one - w) / ((one - z) * omzw), {inv_1mz, zero1}});
    rows.push_back({"chart 2, single-var c_h > 1: dy/y", 2, dlogy, one / z, {inv_z, zero1}});
    rows.push_back({"chart 2, single-var c_h = 1: dy/(1-y)", 2, dy_over_1my, one / (one - z),
                    {inv_1mz, zero1}});
    // chart 3: the divisor {w_3 = 0} is {xy = 1}.
    rows.push_back({"chart 3, two-var x side: dx/x", 3, dlogx, w / (z * w - one), {zero1, zero1}});
    rows.push_back({"chart 3, two-var y side: dy/y", 3, dlogy, w / omzw, {zero1, zero1}});
    rows.push_back({"chart 3, diagonal c_h > 1: dx/x + dy/y", 3, diag_logxy, RatFun2(),
                    {zero1, zero1}});
    rows.push_back({"chart 3, single-var: dy/y", 3, dlogy, w / omzw, {zero1, zero1}});
    return rows;
}

inline std::vector<ChartCheck> verify_chart_ode_table() {
    std::vector<ChartCheck> out;
    for (const ChartOdeCase& row : chart_ode_cases()) {
        OneForm p = pullback(row.form, 1, row.chart);
        bool ok = p.f == row.expected_dz;
        Residue res = residue_along_w0(p);
        ok = ok && res == row.expected_res;
        out.push_back({row.label, ok});
    }
    return out;
}

// Every divisor dlog form stays logarithmic along {w = 0} in every chart, so
// residue_along_w0 must accept all 25 combinations.
inline std::vector<ChartCheck> verify_log_pole_invariant() {
    std::vector<ChartCheck> out;
    for (const auto& [name, form] : five_log_forms()) {
        for (int chart = 1; chart <= 5; ++chart) {
            bool ok = true;
            try {
                residue_along_w0(pullback(form, 1, chart));
            } catch (const std::domain_error&) {
                ok = false;
            }
            out.push_back({name + " stays logarithmic on chart " + std::to_string(chart), ok});
        }
    }
    return out;
}

// Pulling back chart 1 -> chart 2 -> chart 3 must agree with chart 1 -> 3.
inline std::vector<ChartCheck> verify_pullback_functoriality() {
    std::vector<ChartCheck> out;
    for (const auto& [name, form] : five_log_forms()) {
        OneForm via2 = pullback(pullback(form, 1, 2), 2, 3);
        OneForm direct = pullback(form, 1, 3);
        out.push_back({name + ": transit through chart 2 matches direct pullback to chart 3",
                       via2.f == direct.f && via2.g == direct.g});
    }
    return out;
}

}  // namespace mzv
