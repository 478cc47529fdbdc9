#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mzv/polylog.hpp"

using namespace mzv;

namespace {

// Oracle: unpruned box enumeration straight from the nested-sum definition.
PowerSeries1 naive_li1(const Index& c, int cap) {
    int h = c.depth();
    PowerSeries1 out(cap);
    std::vector<int> m(static_cast<size_t>(h));
    auto rec = [&](auto&& self, int pos) -> void {
        int lo = pos == 0 ? 1 : m[static_cast<size_t>(pos - 1)] + 1;
        for (int v = lo; v <= cap; ++v) {
            m[static_cast<size_t>(pos)] = v;
            if (pos + 1 == h) {
                Rational term = 1;
                for (int i = 0; i < h; ++i)
                    term /= Rational(detail::ipow(m[static_cast<size_t>(i)], c.part(i)));
                out.add_coeff(v, term);
            } else {
                self(self, pos + 1);
            }
        }
    };
    rec(rec, 0);
    return out;
}

PowerSeries2 naive_li2(const Index& a, const Index& b, int cap) {
    int k = a.depth(), l = b.depth();
    PowerSeries2 out(cap);
    std::vector<int> v(static_cast<size_t>(k + l));
    auto rec = [&](auto&& self, int pos) -> void {
        int lo = pos == 0 ? 1 : v[static_cast<size_t>(pos - 1)] + 1;
        for (int val = lo; val <= cap; ++val) {
            v[static_cast<size_t>(pos)] = val;
            if (pos + 1 == k + l) {
                int mx = v[static_cast<size_t>(k - 1)], ny = v[static_cast<size_t>(k + l - 1)];
                if (mx + ny <= cap) {
                    Rational term = 1;
                    for (int i = 0; i < k; ++i)
                        term /= Rational(detail::ipow(v[static_cast<size_t>(i)], a.part(i)));
                    for (int j = 0; j < l; ++j)
                        term /= Rational(detail::ipow(v[static_cast<size_t>(k + j)], b.part(j)));
                    out.add_coeff(mx, ny, term);
                }
            } else {
                self(self, pos + 1);
            }
        }
    };
    rec(rec, 0);
    return out;
}

// Oracle straight from the region definition: tuples whose comparisons mirror
// the quasi-shuffle's image order, no merged-chain shortcut.
PowerSeries2 naive_li_sigma(const QuasiShuffle& qs, const Index& a, const Index& b, int cap) {
    int n = qs.k + qs.l;
    PowerSeries2 out(cap);
    std::vector<int> v(static_cast<size_t>(n), 1);
    while (true) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (qs.sigma[static_cast<size_t>(i)] < qs.sigma[static_cast<size_t>(j)])
                    ok = v[static_cast<size_t>(i)] < v[static_cast<size_t>(j)];
                else if (qs.sigma[static_cast<size_t>(i)] == qs.sigma[static_cast<size_t>(j)])
                    ok = v[static_cast<size_t>(i)] == v[static_cast<size_t>(j)];
            }
        if (ok) {
            int mx = v[static_cast<size_t>(qs.k - 1)], ny = v[static_cast<size_t>(n - 1)];
            if (mx + ny <= cap) {
                Rational term = 1;
                for (int i = 0; i < qs.k; ++i)
                    term /= Rational(detail::ipow(v[static_cast<size_t>(i)], a.part(i)));
                for (int j = 0; j < qs.l; ++j)
                    term /= Rational(detail::ipow(v[static_cast<size_t>(qs.k + j)], b.part(j)));
                out.add_coeff(mx, ny, term);
            }
        }
        int pos = n - 1;
        while (pos >= 0 && v[static_cast<size_t>(pos)] == cap) {
            v[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++v[static_cast<size_t>(pos)];
    }
    return out;
}

}  // namespace

TEST_CASE("one-variable coefficients, frozen values and oracle") {
    PowerSeries1 li1 = li1_coeffs(Index({1}), 8);
    for (int n = 1; n <= 8; ++n) CHECK(li1.coeff(n) == Rational(1) / n);
    CHECK(li1.coeff(0) == 0);

    PowerSeries1 li12 = li1_coeffs(Index({1, 2}), 8);
    CHECK(li12.coeff(1) == 0);
    CHECK(li12.coeff(2) == Rational(1) / 4);          // chain (1,2): 1/(1*2^2)
    CHECK(li12.coeff(3) == Rational(1) / 9 * (Rational(1) + Rational(1) / 2));

    for (int w = 1; w <= 4; ++w)
        for (const Index& c : enumerate_compositions(w))
            CHECK(li1_coeffs(c, 10) == naive_li1(c, 10));
}

TEST_CASE("two-variable coefficients, frozen values and oracle") {
    PowerSeries2 s = li2_coeffs(Index({1}), Index({1}), 10);
    CHECK(s.coeff(1, 2) == Rational(1) / 2);
    CHECK(s.coeff(1, 3) == Rational(1) / 3);
    CHECK(s.coeff(2, 3) == Rational(1) / 6);
    CHECK(s.coeff(2, 2) == 0);  // region needs m < n
    CHECK(s.coeff(0, 1) == 0);

    CHECK(li2_coeffs(Index({1}), Index({2}), 10).coeff(1, 2) == Rational(1) / 4);

    for (int wa = 1; wa <= 2; ++wa)
        for (int wb = 1; wb <= 2; ++wb)
            for (const Index& a : enumerate_compositions(wa))
                for (const Index& b : enumerate_compositions(wb))
                    CHECK(li2_coeffs(a, b, 10) == naive_li2(a, b, 10));

    CHECK(li2_coeffs(Index({1, 2}), Index({2, 1}), 12) == naive_li2(Index({1, 2}), Index({2, 1}), 12));
    CHECK_FALSE(li2_coeffs(Index({2}), Index({3}), 10) == li2_coeffs(Index({3}), Index({2}), 10));
}

TEST_CASE("sigma classification frozen example") {
    Index a({2}), b({3});
    auto sigmas = enumerate_quasi_shuffles(1, 1);
    REQUIRE(sigmas.size() == 3);
    std::set<std::string> seen;
    for (const auto& qs : sigmas) {
        SigmaTermForm form = classify_sigma(qs, a, b);
        if (form.kind == SigmaKind::Diagonal) {
            CHECK(form.inner == Index({5}));
            CHECK_FALSE(form.outer.has_value());
            seen.insert("diag");
        } else if (form.kind == SigmaKind::XBeforeY) {
            CHECK(form.inner == Index({2}));
            CHECK(*form.outer == Index({3}));
            seen.insert("xy");
        } else {
            CHECK(form.inner == Index({3}));
            CHECK(*form.outer == Index({2}));
            seen.insert("yx");
        }
    }
    CHECK(seen.size() == 3);
}

TEST_CASE("admissibility of split indices") {
    // For admissible inputs, both halves of a non-diagonal split are admissible.
    for (int wa = 2; wa <= 4; ++wa)
        for (int wb = 2; wb <= 6 - wa; ++wb)
            for (const Index& a : enumerate_admissible(wa))
                for (const Index& b : enumerate_admissible(wb))
                    for (const auto& qs : enumerate_quasi_shuffles(a.depth(), b.depth())) {
                        SigmaTermForm form = classify_sigma(qs, a, b);
                        if (form.kind == SigmaKind::Diagonal) {
                            CHECK(form.inner.is_admissible());
                        } else {
                            CHECK(form.inner.is_admissible());
                            CHECK(form.outer->is_admissible());
                        }
                    }
}

TEST_CASE("region sums match their classified forms and the raw region") {
    for (int wa = 1; wa <= 2; ++wa)
        for (int wb = 1; wb <= 3 - wa; ++wb)
            for (const Index& a : enumerate_compositions(wa))
                for (const Index& b : enumerate_compositions(wb))
                    for (const auto& qs : enumerate_quasi_shuffles(a.depth(), b.depth())) {
                        PowerSeries2 direct = li_sigma_coeffs(qs, a, b, 10);
                        CHECK(direct == series_of_form(classify_sigma(qs, a, b), 10));
                        CHECK(direct == naive_li_sigma(qs, a, b, 10));
                    }
    // one deeper spot check
    Index a({1, 2}), b({2});
    for (const auto& qs : enumerate_quasi_shuffles(2, 1)) {
        PowerSeries2 direct = li_sigma_coeffs(qs, a, b, 10);
        CHECK(direct == series_of_form(classify_sigma(qs, a, b), 10));
        CHECK(direct == naive_li_sigma(qs, a, b, 10));
    }
}

TEST_CASE("product decomposition over regions") {
    CHECK(verify_stuffle_series(Index({1}), Index({1}), 10));
    CHECK(verify_stuffle_series(Index({2}), Index({3}), 12));
    CHECK(verify_stuffle_series(Index({1, 1}), Index({2}), 10));
    CHECK(verify_stuffle_series(Index({1, 2}), Index({2, 1}), 10));
}

TEST_CASE("shuffle expansion as one-variable series") {
    CHECK(verify_shuffle_series(Word("AB"), Word("AB"), 14));
    CHECK(verify_shuffle_series(Word("B"), Word("AB"), 14));   // non-admissible factor is fine
    CHECK(verify_shuffle_series(Word("B"), Word("B"), 14));
    CHECK(verify_shuffle_series(Word("AAB"), Word("AB"), 14));
    CHECK(verify_shuffle_series(Word("ABB"), Word("AAB"), 12));
    CHECK_THROWS_AS(verify_shuffle_series(Word("BA"), Word("AB"), 10), std::invalid_argument);
}

TEST_CASE("two-variable system, frozen instances") {
    auto r1 = verify_ode_two_var(Var::X, Index({1, 2}), Index({2}), 16);
    CHECK(r1.branch == "x: a_k>1");
    CHECK(r1.ok);
    auto r2 = verify_ode_two_var(Var::X, Index({2, 1}), Index({2}), 16);
    CHECK(r2.branch == "x: a_k=1,k>1,l=1");
    CHECK(r2.ok);
    auto r3 = verify_ode_two_var(Var::Y, Index({2}), Index({1, 1}), 16);
    CHECK(r3.branch == "y: b_l=1,l>1");
    CHECK(r3.ok);
}

TEST_CASE("all system branches pass for small weights") {
    std::set<std::string> two_var_branches, diag_branches, single_branches;
    const int cap = 12;
    for (int w = 1; w <= 4; ++w) {
        for (int wa = 1; wa < w; ++wa)
            for (const Index& a : enumerate_compositions(wa))
                for (const Index& b : enumerate_compositions(w - wa))
                    for (Var v : {Var::X, Var::Y}) {
                        OdeCheck chk = verify_ode_two_var(v, a, b, cap);
                        INFO("a=" << to_string(a) << " b=" << to_string(b) << " " << chk.branch);
                        CHECK(chk.ok);
                        two_var_branches.insert(chk.branch);
                    }
        for (const Index& c : enumerate_compositions(w))
            for (Var v : {Var::X, Var::Y}) {
                OdeCheck dchk = verify_ode_diagonal(v, c, cap);
                INFO("c=" << to_string(c) << " " << dchk.branch);
                CHECK(dchk.ok);
                diag_branches.insert(dchk.branch);
                OdeCheck schk = verify_ode_single_var(v, c, cap);
                INFO("c=" << to_string(c) << " " << schk.branch);
                CHECK(schk.ok);
                single_branches.insert(schk.branch);
            }
    }
    CHECK(two_var_branches.size() == 8);   // 5 x-branches + 3 y-branches
    CHECK(diag_branches.size() == 6);      // 3 per variable
    CHECK(single_branches.size() == 4);    // constant-in-x + 3 y-branches
}
