#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "mzv/rational.hpp"

namespace mzv {

// Truncated power series in one variable t: coefficients are exact rationals,
// stored sparsely for exponents 0..cap. Binary operations insist on equal caps
// so that a result never silently pretends to more precision than it has.
class PowerSeries1 {
  public:
    explicit PowerSeries1(int cap) : cap_(cap) {
        if (cap < 0) throw std::invalid_argument("PowerSeries1: negative cap");
    }

    int cap() const { return cap_; }
    const std::map<int, Rational>& coeffs() const { return c_; }

    Rational coeff(int i) const {
        auto it = c_.find(i);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void set_coeff(int i, const Rational& q) {
        if (i < 0 || i > cap_) throw std::out_of_range("PowerSeries1: exponent outside cap");
        if (q == 0)
            c_.erase(i);
        else
            c_[i] = q;
    }

    void add_coeff(int i, const Rational& q) { set_coeff(i, coeff(i) + q); }

    PowerSeries1 truncated(int new_cap) const {
        if (new_cap > cap_) throw std::invalid_argument("PowerSeries1: cannot raise cap");
        PowerSeries1 out(new_cap);
        for (const auto& [i, q] : c_)
            if (i <= new_cap) out.c_[i] = q;
        return out;
    }

    friend PowerSeries1 operator+(const PowerSeries1& a, const PowerSeries1& b) {
        require_same_cap(a, b, "+");
        PowerSeries1 out = a;
        for (const auto& [i, q] : b.c_) out.add_coeff(i, q);
        return out;
    }
    friend PowerSeries1 operator-(const PowerSeries1& a, const PowerSeries1& b) {
        require_same_cap(a, b, "-");
        PowerSeries1 out = a;
        for (const auto& [i, q] : b.c_) out.add_coeff(i, -q);
        return out;
    }
    // Product truncated at the shared cap.
    friend PowerSeries1 operator*(const PowerSeries1& a, const PowerSeries1& b) {
        require_same_cap(a, b, "*");
        PowerSeries1 out(a.cap_);
        for (const auto& [i, p] : a.c_)
            for (const auto& [j, q] : b.c_) {
                if (i + j > a.cap_) break;  // b's keys ascend
                out.add_coeff(i + j, p * q);
            }
        return out;
    }

    PowerSeries1 derivative() const {
        if (cap_ < 1) throw std::invalid_argument("PowerSeries1: derivative needs cap >= 1");
        PowerSeries1 out(cap_ - 1);
        for (const auto& [i, q] : c_)
            if (i >= 1) out.c_[i - 1] = q * i;
        return out;
    }

    // Lines "i num/den", exponents ascending.
    std::string dump() const {
        std::string out;
        for (const auto& [i, q] : c_)
            out += std::to_string(i) + " " + to_fraction_string(q) + "\n";
        return out;
    }

    bool operator==(const PowerSeries1&) const = default;

  private:
    static void require_same_cap(const PowerSeries1& a, const PowerSeries1& b, const char* op) {
        if (a.cap_ != b.cap_)
            throw std::invalid_argument(std::string("PowerSeries1: cap mismatch in ") + op);
    }

    int cap_;
    std::map<int, Rational> c_;
};

enum class Var { X, Y };

enum class GeomDenom { OneMinusX, OneMinusY, OneMinusXY };

// Truncated power series in x, y with total-degree cap: all stored monomials
// x^i y^j satisfy i + j <= cap. Same cap discipline as PowerSeries1.
class PowerSeries2 {
  public:
    explicit PowerSeries2(int cap) : cap_(cap) {
        if (cap < 0) throw std::invalid_argument("PowerSeries2: negative cap");
    }

    int cap() const { return cap_; }
    const std::map<std::pair<int, int>, Rational>& coeffs() const { return c_; }

    Rational coeff(int i, int j) const {
        auto it = c_.find({i, j});
        return it == c_.end() ? Rational(0) : it->second;
    }

    void set_coeff(int i, int j, const Rational& q) {
        if (i < 0 || j < 0 || i + j > cap_)
            throw std::out_of_range("PowerSeries2: exponent pair outside cap");
        if (q == 0)
            c_.erase({i, j});
        else
            c_[{i, j}] = q;
    }

    void add_coeff(int i, int j, const Rational& q) { set_coeff(i, j, coeff(i, j) + q); }

    PowerSeries2 truncated(int new_cap) const {
        if (new_cap > cap_) throw std::invalid_argument("PowerSeries2: cannot raise cap");
        PowerSeries2 out(new_cap);
        for (const auto& [ij, q] : c_)
            if (ij.first + ij.second <= new_cap) out.c_[ij] = q;
        return out;
    }

    friend PowerSeries2 operator+(const PowerSeries2& a, const PowerSeries2& b) {
        require_same_cap(a, b, "+");
        PowerSeries2 out = a;
        for (const auto& [ij, q] : b.c_) out.add_coeff(ij.first, ij.second, q);
        return out;
    }
    friend PowerSeries2 operator-(const PowerSeries2& a, const PowerSeries2& b) {
        require_same_cap(a, b, "-");
        PowerSeries2 out = a;
        for (const auto& [ij, q] : b.c_) out.add_coeff(ij.first, ij.second, -q);
        return out;
    }
    friend PowerSeries2 operator*(const PowerSeries2& a, const PowerSeries2& b) {
        require_same_cap(a, b, "*");
        PowerSeries2 out(a.cap_);
        for (const auto& [ij, p] : a.c_)
            for (const auto& [kl, q] : b.c_) {
                if (ij.first + ij.second + kl.first + kl.second > a.cap_) continue;
                out.add_coeff(ij.first + kl.first, ij.second + kl.second, p * q);
            }
        return out;
    }

    PowerSeries2 partial_derivative(Var v) const {
        if (cap_ < 1) throw std::invalid_argument("PowerSeries2: derivative needs cap >= 1");
        PowerSeries2 out(cap_ - 1);
        for (const auto& [ij, q] : c_) {
            auto [i, j] = ij;
            if (v == Var::X && i >= 1) out.c_[{i - 1, j}] = q * i;
            if (v == Var::Y && j >= 1) out.c_[{i, j - 1}] = q * j;
        }
        return out;
    }

    // Exact division by the variable; the cap drops since the top-degree layer
    // of the quotient would need unseen coefficients.
    PowerSeries2 divide_by_monomial(Var v) const {
        if (cap_ < 1) throw std::invalid_argument("PowerSeries2: divide needs cap >= 1");
        PowerSeries2 out(cap_ - 1);
        for (const auto& [ij, q] : c_) {
            auto [i, j] = ij;
            if ((v == Var::X ? i : j) == 0)
                throw std::domain_error("PowerSeries2: not divisible by " +
                                        std::string(v == Var::X ? "x" : "y"));
            if (v == Var::X)
                out.c_[{i - 1, j}] = q;
            else
                out.c_[{i, j - 1}] = q;
        }
        return out;
    }

    PowerSeries2 times_monomial(Var v) const {
        PowerSeries2 out(cap_ + 1);
        for (const auto& [ij, q] : c_)
            out.c_[v == Var::X ? std::pair{ij.first + 1, ij.second}
                               : std::pair{ij.first, ij.second + 1}] = q;
        return out;
    }

    PowerSeries2 transpose() const {
        PowerSeries2 out(cap_);
        for (const auto& [ij, q] : c_) out.c_[{ij.second, ij.first}] = q;
        return out;
    }

    // Lines "i j num/den" in lexicographic (i, j) order.
    std::string dump() const {
        std::string out;
        for (const auto& [ij, q] : c_)
            out += std::to_string(ij.first) + " " + std::to_string(ij.second) + " " +
                   to_fraction_string(q) + "\n";
        return out;
    }

    bool operator==(const PowerSeries2&) const = default;

  private:
    static void require_same_cap(const PowerSeries2& a, const PowerSeries2& b, const char* op) {
        if (a.cap_ != b.cap_)
            throw std::invalid_argument(std::string("PowerSeries2: cap mismatch in ") + op);
    }

    int cap_;
    std::map<std::pair<int, int>, Rational> c_;
};

// t |-> x y. Complete up to out_cap, which requires the input to reach
// floor(out_cap / 2).
inline PowerSeries2 substitute_xy(const PowerSeries1& s, int out_cap) {
    if (s.cap() < out_cap / 2)
        throw std::invalid_argument("substitute_xy: input cap too small for requested output cap");
    PowerSeries2 out(out_cap);
    for (const auto& [n, q] : s.coeffs())
        if (2 * n <= out_cap) out.set_coeff(n, n, q);
    return out;
}

// t |-> x (resp. y), embedding one-variable series into the plane.
inline PowerSeries2 embed_series(const PowerSeries1& s, Var v, int out_cap) {
    if (s.cap() < out_cap)
        throw std::invalid_argument("embed_series: input cap too small for requested output cap");
    PowerSeries2 out(out_cap);
    for (const auto& [n, q] : s.coeffs())
        if (n <= out_cap) out.set_coeff(v == Var::X ? n : 0, v == Var::X ? 0 : n, q);
    return out;
}

// Expansion of 1/(1-x), 1/(1-y) or 1/(1-xy) up to the cap.
inline PowerSeries2 geometric(GeomDenom d, int cap) {
    PowerSeries2 out(cap);
    switch (d) {
        case GeomDenom::OneMinusX:
            for (int i = 0; i <= cap; ++i) out.set_coeff(i, 0, 1);
            break;
        case GeomDenom::OneMinusY:
            for (int j = 0; j <= cap; ++j) out.set_coeff(0, j, 1);
            break;
        case GeomDenom::OneMinusXY:
            for (int n = 0; 2 * n <= cap; ++n) out.set_coeff(n, n, 1);
            break;
    }
    return out;
}

}  // namespace mzv
