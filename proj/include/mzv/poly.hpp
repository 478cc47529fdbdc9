#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

// Dense univariate polynomial over Q, no trailing zero coefficients.
class Poly1 {
  public:
    Poly1() = default;
    explicit Poly1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly1 constant(const Rational& q) { return Poly1({q}); }
    static Poly1 variable() { return Poly1({Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)]
                                                         : Rational(0);
    }
    Rational lc() const { return is_zero() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend Poly1 operator+(const Poly1& a, const Poly1& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly1(std::move(r));
    }
    friend Poly1 operator-(const Poly1& a, const Poly1& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly1(std::move(r));
    }
    Poly1 operator-() const {
        std::vector<Rational> r = c_;
        for (auto& q : r) q = -q;
        return Poly1(std::move(r));
    }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        if (a.is_zero() || b.is_zero()) return Poly1();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly1(std::move(r));
    }
    friend Poly1 operator*(const Poly1& a, const Rational& q) {
        std::vector<Rational> r = a.c_;
        for (auto& v : r) v *= q;
        return Poly1(std::move(r));
    }

    // Field-coefficient long division.
    friend std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
        if (b.is_zero()) throw std::domain_error("Poly1: division by zero");
        Poly1 rem = a;
        std::vector<Rational> quot(
            a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree() + 1) : 0,
            Rational(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            Rational f = rem.lc() / b.lc();
            int shift = rem.degree() - b.degree();
            quot[static_cast<size_t>(shift)] = f;
            std::vector<Rational> sub(static_cast<size_t>(shift), Rational(0));
            sub.insert(sub.end(), b.c_.begin(), b.c_.end());
            Poly1 s(std::move(sub));
            rem = rem - s * f;
        }
        return {Poly1(std::move(quot)), rem};
    }

    friend Poly1 exact_div(const Poly1& a, const Poly1& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("Poly1: division expected to be exact");
        return q;
    }

    Poly1 derivative() const {
        if (c_.size() <= 1) return Poly1();
        std::vector<Rational> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<int>(i);
        return Poly1(std::move(r));
    }

    Rational eval(const Rational& t) const {
        Rational acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    Poly1 monic() const {
        if (is_zero()) return Poly1();
        return *this * (Rational(1) / lc());
    }

    bool operator==(const Poly1&) const = default;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Monic gcd over Q via the Euclidean algorithm; degrees here stay tiny.
inline Poly1 gcd(const Poly1& a, const Poly1& b) {
    Poly1 x = a, y = b;
    while (!y.is_zero()) {
        Poly1 r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

// Bivariate polynomial over Q: coefficient of y^j is a Poly1 in x. The same
// type serves the chart coordinates, where the pair is (z_i, w_i) with w_i in
// the y slot.
class Poly2 {
  public:
    Poly2() = default;
    explicit Poly2(std::vector<Poly1> ycoeffs) : c_(std::move(ycoeffs)) { trim(); }
    static Poly2 constant(const Rational& q) { return Poly2({Poly1::constant(q)}); }
    static Poly2 var_x() { return Poly2({Poly1::variable()}); }
    static Poly2 var_y() { return Poly2({Poly1(), Poly1::constant(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree_y() const { return static_cast<int>(c_.size()) - 1; }
    const Poly1& ycoeff(int j) const {
        static const Poly1 kZero;
        return j >= 0 && j < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(j)] : kZero;
    }
    Rational coeff(int i, int j) const { return ycoeff(j).coeff(i); }
    int total_degree() const {
        int d = -1;
        for (size_t j = 0; j < c_.size(); ++j)
            if (!c_[j].is_zero()) d = std::max(d, c_[j].degree() + static_cast<int>(j));
        return d;
    }

    friend Poly2 operator+(const Poly2& a, const Poly2& b) {
        std::vector<Poly1> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t j = 0; j < r.size(); ++j) r[j] = a.ycoeff(static_cast<int>(j)) + b.ycoeff(static_cast<int>(j));
        return Poly2(std::move(r));
    }
    friend Poly2 operator-(const Poly2& a, const Poly2& b) {
        std::vector<Poly1> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t j = 0; j < r.size(); ++j) r[j] = a.ycoeff(static_cast<int>(j)) - b.ycoeff(static_cast<int>(j));
        return Poly2(std::move(r));
    }
    Poly2 operator-() const {
        std::vector<Poly1> r = c_;
        for (auto& p : r) p = -p;
        return Poly2(std::move(r));
    }
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        if (a.is_zero() || b.is_zero()) return Poly2();
        std::vector<Poly1> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly2(std::move(r));
    }
    friend Poly2 operator*(const Poly2& a, const Rational& q) {
        std::vector<Poly1> r = a.c_;
        for (auto& p : r) p = p * q;
        return Poly2(std::move(r));
    }

    Poly2 derivative_x() const {
        std::vector<Poly1> r = c_;
        for (auto& p : r) p = p.derivative();
        return Poly2(std::move(r));
    }
    Poly2 derivative_y() const {
        if (c_.size() <= 1) return Poly2();
        std::vector<Poly1> r(c_.size() - 1);
        for (size_t j = 1; j < c_.size(); ++j) r[j - 1] = c_[j] * Rational(static_cast<int>(j));
        return Poly2(std::move(r));
    }

    // Restriction to the curve {y = 0}.
    Poly1 eval_y_zero() const { return ycoeff(0); }

    bool divisible_by_y() const { return !is_zero() && ycoeff(0).is_zero(); }

    // Leading coefficient under graded lexicographic order with x < y:
    // highest total degree, ties broken by the higher power of y.
    Rational leading_coeff_grlex() const {
        int best_i = -1, best_j = -1;
        for (int j = 0; j <= degree_y(); ++j) {
            const Poly1& p = ycoeff(j);
            if (p.is_zero()) continue;
            int i = p.degree();
            if (i + j > best_i + best_j || (i + j == best_i + best_j && j > best_j)) {
                best_i = i;
                best_j = j;
            }
        }
        return best_i < 0 ? Rational(0) : coeff(best_i, best_j);
    }

    bool operator==(const Poly2&) const = default;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Poly1> c_;

    friend Poly1 content_y(const Poly2& p);
    friend std::pair<Poly2, Poly2> divmod_y(const Poly2& a, const Poly2& b);
};

inline Poly1 content_y(const Poly2& p) {
    Poly1 g;
    for (const Poly1& c : p.c_) g = gcd(g, c);
    return g;
}

inline Poly2 primitive_part_y(const Poly2& p) {
    if (p.is_zero()) return p;
    Poly1 cont = content_y(p);
    std::vector<Poly1> r;
    for (int j = 0; j <= p.degree_y(); ++j) r.push_back(exact_div(p.ycoeff(j), cont));
    return Poly2(std::move(r));
}

// Long division in ((Q[x])[y]; every leading-coefficient division must be
// exact in Q[x], which holds for the divisions performed during reduction.
inline std::pair<Poly2, Poly2> divmod_y(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw std::domain_error("Poly2: division by zero");
    Poly2 rem = a;
    std::vector<Poly1> quot(
        a.degree_y() >= b.degree_y() ? static_cast<size_t>(a.degree_y() - b.degree_y() + 1) : 0);
    const Poly1& blc = b.ycoeff(b.degree_y());
    while (!rem.is_zero() && rem.degree_y() >= b.degree_y()) {
        Poly1 f = exact_div(rem.ycoeff(rem.degree_y()), blc);
        int shift = rem.degree_y() - b.degree_y();
        quot[static_cast<size_t>(shift)] = f;
        std::vector<Poly1> shifted(static_cast<size_t>(shift));
        for (int j = 0; j <= b.degree_y(); ++j) shifted.push_back(b.ycoeff(j) * f);
        rem = rem - Poly2(std::move(shifted));
    }
    return {Poly2(std::move(quot)), rem};
}

inline Poly2 exact_div(const Poly2& a, const Poly2& b) {
    auto [q, r] = divmod_y(a, b);
    if (!r.is_zero()) throw std::logic_error("Poly2: division expected to be exact");
    return q;
}

// Pseudo-remainder of a by b in the variable y.
inline Poly2 prem_y(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw std::domain_error("Poly2: pseudo-division by zero");
    int d = a.degree_y() - b.degree_y();
    if (d < 0) return a;
    Poly2 lc_b({b.ycoeff(b.degree_y())});
    Poly2 scaled = a;
    for (int i = 0; i <= d; ++i) scaled = scaled * lc_b;
    return divmod_y(scaled, b).second;
}

inline Poly1 pow_poly1(const Poly1& p, int e) {
    Poly1 r = Poly1::constant(1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

// Gcd via content/primitive-part splitting and a subresultant
// pseudo-remainder sequence in y (the g/h bookkeeping keeps every division of
// the remainder exact). Result is primitive up to the shared content; callers
// scale as needed.
inline Poly2 gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree_y() == 0 || b.degree_y() == 0) {
        Poly1 g = gcd(content_y(a), content_y(b));
        return Poly2({g});
    }
    Poly1 cont = gcd(content_y(a), content_y(b));
    Poly2 A = primitive_part_y(a), B = primitive_part_y(b);
    if (A.degree_y() < B.degree_y()) std::swap(A, B);
    Poly1 g = Poly1::constant(1), h = Poly1::constant(1);
    while (true) {
        int delta = A.degree_y() - B.degree_y();
        Poly2 R = prem_y(A, B);
        if (R.is_zero()) break;
        Poly1 divisor = g * pow_poly1(h, delta);
        std::vector<Poly1> coeffs;
        for (int j = 0; j <= R.degree_y(); ++j) coeffs.push_back(exact_div(R.ycoeff(j), divisor));
        A = B;
        B = Poly2(std::move(coeffs));
        g = A.ycoeff(A.degree_y());
        h = delta >= 1 ? exact_div(pow_poly1(g, delta), pow_poly1(h, delta - 1))
                       : h;  // delta == 0 leaves h unchanged
    }
    return Poly2({cont}) * primitive_part_y(B);
}

}  // namespace mzv
