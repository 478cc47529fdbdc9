#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mzv/padic.hpp"
#include "mzv/polylog.hpp"
#include "mzv/series.hpp"

using namespace mzv;

namespace {

Padic random_padic(std::mt19937& rng, long long p, long long rel) {
    std::uniform_int_distribution<long long> val(-3, 3);
    Integer mod = 1;
    for (long long i = 0; i < rel; ++i) mod *= p;
    std::uniform_int_distribution<long long> u(1, 1000000);
    Integer unit;
    do {
        unit = Integer(u(rng)) % mod;
    } while (unit == 0 || unit % p == 0);
    return Padic::from_parts(p, val(rng), unit, rel);
}

Rational random_coprime_rational(std::mt19937& rng, long long p) {
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 30);
    int d;
    do {
        d = den(rng);
    } while (d % p == 0);
    return Rational(num(rng), d);
}

}  // namespace

TEST_CASE("p-adic construction and frozen small cases") {
    Padic h = Padic::from_rational(Rational(1, 2), 5, 3);
    REQUIRE(h.prime() == 5);
    REQUIRE(h.valuation() == 0);
    REQUIRE(h.unit() == 63);  // 2 * 63 = 126 = 1 mod 125
    REQUIRE(h.rel_precision() == 3);

    REQUIRE(padic_ord(50, 5) == 2);
    Padic fifty = Padic::from_integer(50, 5, 4);
    REQUIRE(fifty.valuation() == 2);
    REQUIRE(fifty.unit() == 2);

    Padic cancel = h + (-h);
    REQUIRE(cancel.is_zero());
    REQUIRE_FALSE(cancel.is_exact_zero());
    REQUIRE(cancel.abs_precision() == 3);

    Padic neg = Padic::from_rational(Rational(-1, 2), 5, 3);
    REQUIRE(neg.unit() == 62);

    REQUIRE_THROWS_AS(Padic::from_parts(5, 0, 10, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(Padic::from_parts(5, 0, 3, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(Padic::from_parts(1, 0, 1, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(Padic::from_parts(5, 0, 1, 3) + Padic::from_parts(7, 0, 1, 3),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(h / Padic::zero(5), std::domain_error);
    REQUIRE_THROWS_AS(Padic::zero(5).pow(0), std::invalid_argument);
}

TEST_CASE("precision capping and zero bookkeeping") {
    Padic h = Padic::from_parts(5, 0, 63, 3);
    Padic capped = h.capped_to_absolute(2);
    REQUIRE(capped.unit() == 13);
    REQUIRE(capped.rel_precision() == 2);
    REQUIRE(h.capped_to_absolute(0).is_zero());

    // agreement cannot be certified beyond the weaker operand's precision
    Padic z3 = Padic::zero_to_precision(5, 3);
    Padic z8 = Padic::zero_to_precision(5, 8);
    REQUIRE(agree_to_precision(z3, z8, 3));
    REQUIRE_FALSE(agree_to_precision(z3, z8, 5));
}

TEST_CASE("p-adic powers") {
    Padic two = Padic::from_integer(2, 5, 6);
    REQUIRE(agree_to_precision(two.pow(10), Padic::from_integer(1024, 5, 6), 6));
    REQUIRE(agree_to_precision(two.pow(0), Padic::from_integer(1, 5, 6), 6));
    REQUIRE(two.pow(-1).valuation() == 0);
    REQUIRE(agree_to_precision(two.pow(-1) * two, Padic::from_integer(1, 5, 6), 6));
    Padic five = Padic::from_integer(5, 5, 4);
    REQUIRE(five.pow(3).valuation() == 3);
    REQUIRE(Padic::zero(5).pow(3).is_exact_zero());
}

TEST_CASE("ring axioms hold at tracked precision") {
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 60; ++trial) {
        Padic a = random_padic(rng, 5, 6);
        Padic b = random_padic(rng, 5, 6);
        Padic c = random_padic(rng, 5, 6);
        REQUIRE(((a + b) + c - (a + (b + c))).is_zero());
        REQUIRE((a + b - (b + a)).is_zero());
        REQUIRE(((a * b) * c - (a * (b * c))).is_zero());
        REQUIRE((a * b - b * a).is_zero());
        REQUIRE((a * (b + c) - (a * b + a * c)).is_zero());
        REQUIRE(((a / b) * b - a).is_zero());
    }
}

TEST_CASE("from_rational is a ring homomorphism on p-coprime rationals") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Rational q1 = random_coprime_rational(rng, 5);
        Rational q2 = random_coprime_rational(rng, 5);
        Padic a = Padic::from_rational(q1, 5, 8);
        Padic b = Padic::from_rational(q2, 5, 8);
        REQUIRE((a + b - Padic::from_rational(q1 + q2, 5, 8)).is_zero());
        REQUIRE((a * b - Padic::from_rational(q1 * q2, 5, 8)).is_zero());
    }
}

TEST_CASE("required_terms matches a direct scan of the valuation bound") {
    REQUIRE(required_terms(5, 2, 10) == 11);
    REQUIRE(required_terms(5, 2, 10) <= 14);
    // brute recheck: 11 fails the bound, everything later passes it
    auto f = [](long long n, long long p, long long w) {
        long long e = 0;
        Integer q = p;
        while (q <= n) {
            q *= p;
            ++e;
        }
        return n - w * e;
    };
    REQUIRE(f(11, 5, 2) < 10);
    for (long long n = 12; n <= 2000; ++n) REQUIRE(f(n, 5, 2) >= 10);

    REQUIRE(required_terms(3, 5, 12) == 21);
    REQUIRE(required_terms(5, 2, 1) <= 2);
    long long prev = 0;
    for (long long prec = 1; prec <= 15; ++prec) {
        long long m = required_terms(5, 2, prec);
        REQUIRE(m >= prev);
        prev = m;
    }
}

TEST_CASE("one-variable p-adic polylog agrees with exact partial summation") {
    Padic x = Padic::from_integer(5, 5, 20);
    Padic v = eval_li1_padic(Index({1}), x, 8);
    // independent oracle: the same truncated sum in exact rational arithmetic
    Rational exact = 0;
    Rational pw = 1;
    for (int n = 1; n <= 8; ++n) {
        pw *= 5;
        exact += pw / n;
    }
    REQUIRE(agree_to_precision(v, Padic::from_rational(exact, 5, 20), 8));
    REQUIRE((v - Padic::from_integer(5, 5, 20)).valuation() >= 2);

    Padic depth2 = eval_li1_padic(Index({1, 2}), x, 8);
    Rational exact2 = 0;
    for (int n2 = 2; n2 <= 20; ++n2) {
        Rational pw2(1);
        for (int t = 0; t < n2; ++t) pw2 *= 5;
        for (int n1 = 1; n1 < n2; ++n1) exact2 += pw2 / (Rational(n1) * n2 * n2);
    }
    REQUIRE(agree_to_precision(depth2, Padic::from_rational(exact2, 5, 20), 8));
}

TEST_CASE("two-variable p-adic polylog: frozen leading term and zero points") {
    Padic x = Padic::from_integer(5, 5, 20);
    Padic v = eval_li2_padic(Index({1}), Index({1}), x, x, 9);
    Padic lead = Padic::from_rational(Rational(125, 2), 5, 20);
    REQUIRE((v - lead).valuation() == 4);  // next chain (m,n) = (1,3) contributes 5^4/3

    REQUIRE(eval_li2_padic(Index({1}), Index({1}), Padic::zero(5), x, 9).is_zero());
    REQUIRE(eval_li2_padic(Index({1}), Index({1}), x, Padic::zero(5), 9).is_zero());

    Padic bad = Padic::from_rational(Rational(1, 2), 5, 10);
    REQUIRE_THROWS_AS(eval_li2_padic(Index({1}), Index({1}), bad, x, 6), std::domain_error);
}

TEST_CASE("two-variable p-adic polylog matches the series-engine coefficients") {
    // cross-module oracle: evaluate li2_coeffs exactly, then embed into Q_5
    Index a({1}), b({2});
    PowerSeries2 s = li2_coeffs(a, b, 16);
    Rational exact = 0;
    for (int i = 0; i <= 16; ++i)
        for (int j = 0; i + j <= 16; ++j) {
            Rational c = s.coeff(i, j);
            if (c == 0) continue;
            Rational term = c;
            for (int t = 0; t < i + j; ++t) term *= 5;
            exact += term;
        }
    Padic x = Padic::from_integer(5, 5, 25);
    Padic direct = eval_li2_padic(a, b, x, x, 6);
    REQUIRE(agree_to_precision(direct, Padic::from_rational(exact, 5, 25), 6));
}

TEST_CASE("p-adic stuffle identity at frozen points") {
    REQUIRE(verify_stuffle_padic(Index({1}), Index({1}), 5, Rational(5), Rational(5), 10));
    REQUIRE(verify_stuffle_padic(Index({2}), Index({3}), 7, Rational(7), Rational(14), 12));
    REQUIRE(verify_stuffle_padic(Index({1}), Index({1}), 5, Rational(0), Rational(5), 10));
    REQUIRE_THROWS_AS(
        verify_stuffle_padic(Index({1}), Index({1}), 5, Rational(1, 2), Rational(5), 10),
        std::domain_error);

    // negative control: distinct polylogs do not agree
    Padic x = Padic::from_integer(5, 5, 20);
    REQUIRE_FALSE(agree_to_precision(eval_li1_padic(Index({2}), x, 10),
                                     eval_li1_padic(Index({3}), x, 10), 10));
}

TEST_CASE("p-adic stuffle identity on a weight sweep") {
    for (long long p : {3LL, 7LL}) {
        std::vector<std::pair<Rational, Rational>> points = {
            {Rational(p), Rational(p)}, {Rational(p), Rational(2 * p)},
            {Rational(p * p), Rational(p)}};
        for (int wa = 1; wa <= 3; ++wa)
            for (int wb = 1; wb + wa <= 4; ++wb)
                for (const Index& a : enumerate_compositions(wa))
                    for (const Index& b : enumerate_compositions(wb))
                        for (const auto& [x, y] : points) {
                            INFO("p=" << p << " a=" << to_string(a) << " b=" << to_string(b));
                            REQUIRE(verify_stuffle_padic(a, b, p, x, y, 10));
                        }
    }
}

TEST_CASE("p-adic text forms round-trip") {
    Padic h = Padic::from_parts(5, 2, 63, 3);
    REQUIRE(to_string(h) == "5^2 * 63 mod 5^3");
    REQUIRE(to_digit_string(h) == "3*5^2 + 2*5^3 + 2*5^4 + O(5^5)");
    for (const std::string& text : {to_string(h), to_digit_string(h)}) {
        Padic back = parse_padic(text);
        REQUIRE(back.valuation() == h.valuation());
        REQUIRE(back.unit() == h.unit());
        REQUIRE(back.rel_precision() == h.rel_precision());
    }

    Padic fifth = Padic::from_rational(Rational(1, 5), 5, 3);
    REQUIRE(to_string(fifth) == "5^-1 * 1 mod 5^3");
    REQUIRE(to_digit_string(fifth) == "1*5^-1 + O(5^2)");
    REQUIRE(parse_padic(to_digit_string(fifth)).valuation() == -1);

    Padic z = Padic::zero_to_precision(5, 4);
    REQUIRE(to_string(z) == "0 mod 5^4");
    REQUIRE(to_digit_string(z) == "O(5^4)");
    REQUIRE(parse_padic("0 mod 5^4").abs_precision() == 4);
    REQUIRE(parse_padic("O(5^4)").is_zero());

    REQUIRE(to_string(Padic::zero(5)) == "0");
    REQUIRE_THROWS_AS(parse_padic("0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_padic("5^2 + 63"), std::invalid_argument);

    // random round-trips through both forms
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Padic v = random_padic(rng, 7, 5);
        for (const std::string& text : {to_string(v), to_digit_string(v)}) {
            Padic back = parse_padic(text);
            REQUIRE(back.valuation() == v.valuation());
            REQUIRE(back.unit() == v.unit());
        }
    }
}
