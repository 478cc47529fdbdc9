#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

#include "mzv/poly.hpp"
#include "mzv/rational.hpp"

namespace mzv {

// Univariate rational function, kept reduced with a monic denominator.
class RatFun1 {
  public:
    RatFun1() : num_(), den_(Poly1::constant(1)) {}
    RatFun1(const Rational& q) : num_(Poly1::constant(q)), den_(Poly1::constant(1)) {}
    explicit RatFun1(Poly1 num) : num_(std::move(num)), den_(Poly1::constant(1)) {}
    RatFun1(Poly1 num, Poly1 den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    static RatFun1 variable() { return RatFun1(Poly1::variable()); }

    const Poly1& num() const { return num_; }
    const Poly1& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFun1 operator+(const RatFun1& a, const RatFun1& b) {
        return RatFun1(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun1 operator-(const RatFun1& a, const RatFun1& b) {
        return RatFun1(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFun1 operator-() const { return RatFun1(-num_, den_); }
    friend RatFun1 operator*(const RatFun1& a, const RatFun1& b) {
        return RatFun1(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun1 operator/(const RatFun1& a, const RatFun1& b) {
        if (b.is_zero()) throw std::domain_error("RatFun1: division by zero");
        return RatFun1(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFun1 derivative() const {
        return RatFun1(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    Rational eval(const Rational& t) const {
        Rational d = den_.eval(t);
        if (d == 0) throw std::domain_error("RatFun1: evaluation at a pole");
        return num_.eval(t) / d;
    }

    bool operator==(const RatFun1&) const = default;

  private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RatFun1: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly1::constant(1);
            return;
        }
        Poly1 g = gcd(num_, den_);
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
        Rational lc = den_.lc();
        num_ = num_ * (Rational(1) / lc);
        den_ = den_ * (Rational(1) / lc);
    }
    Poly1 num_, den_;
};

// Bivariate rational function. Reduced by the polynomial gcd; the denominator
// is scaled so its leading coefficient (graded lex, x < y) is 1, which makes
// the representation canonical and operator== a mathematical equality test.
class RatFun2 {
  public:
    RatFun2() : num_(), den_(Poly2::constant(1)) {}
    RatFun2(const Rational& q) : num_(Poly2::constant(q)), den_(Poly2::constant(1)) {}
    explicit RatFun2(Poly2 num) : num_(std::move(num)), den_(Poly2::constant(1)) {}
    RatFun2(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    static RatFun2 var_x() { return RatFun2(Poly2::var_x()); }
    static RatFun2 var_y() { return RatFun2(Poly2::var_y()); }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFun2 operator+(const RatFun2& a, const RatFun2& b) {
        return RatFun2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun2 operator-(const RatFun2& a, const RatFun2& b) {
        return RatFun2(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFun2 operator-() const { return RatFun2(-num_, den_); }
    friend RatFun2 operator*(const RatFun2& a, const RatFun2& b) {
        return RatFun2(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun2 operator/(const RatFun2& a, const RatFun2& b) {
        if (b.is_zero()) throw std::domain_error("RatFun2: division by zero");
        return RatFun2(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFun2 derivative_x() const {
        return RatFun2(num_.derivative_x() * den_ - num_ * den_.derivative_x(), den_ * den_);
    }
    RatFun2 derivative_y() const {
        return RatFun2(num_.derivative_y() * den_ - num_ * den_.derivative_y(), den_ * den_);
    }

    Rational eval(const Rational& x, const Rational& y) const;

    // Restriction to {y = 0}; requires the function to have no pole there.
    RatFun1 restrict_y_zero() const {
        Poly1 d0 = den_.eval_y_zero();
        if (d0.is_zero()) throw std::domain_error("RatFun2: pole along y = 0");
        return RatFun1(num_.eval_y_zero(), d0);
    }

    bool regular_along_y_zero() const { return !den_.eval_y_zero().is_zero(); }

    bool operator==(const RatFun2&) const = default;

  private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RatFun2: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly2::constant(1);
            return;
        }
        Poly2 g = gcd(num_, den_);
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
        Rational lc = den_.leading_coeff_grlex();
        Rational s = Rational(1) / lc;
        num_ = num_ * s;
        den_ = den_ * s;
    }
    Poly2 num_, den_;
};

inline Rational eval_poly2(const Poly2& p, const Rational& x, const Rational& y) {
    Rational acc = 0;
    for (int j = p.degree_y(); j >= 0; --j) acc = acc * y + p.ycoeff(j).eval(x);
    return acc;
}

inline Rational RatFun2::eval(const Rational& x, const Rational& y) const {
    Rational d = eval_poly2(den_, x, y);
    if (d == 0) throw std::domain_error("RatFun2: evaluation at a pole");
    return eval_poly2(num_, x, y) / d;
}

// p with x := fx, y := fy, by Horner in both variables.
inline RatFun2 substitute(const Poly2& p, const RatFun2& fx, const RatFun2& fy) {
    RatFun2 acc;
    for (int j = p.degree_y(); j >= 0; --j) {
        const Poly1& row = p.ycoeff(j);
        RatFun2 row_val;
        for (int i = row.degree(); i >= 0; --i) row_val = row_val * fx + RatFun2(row.coeff(i));
        acc = acc * fy + row_val;
    }
    return acc;
}

inline RatFun2 substitute(const RatFun2& f, const RatFun2& fx, const RatFun2& fy) {
    RatFun2 d = substitute(f.den(), fx, fy);
    if (d.is_zero()) throw std::domain_error("RatFun2: substitution lands in a pole");
    return substitute(f.num(), fx, fy) / d;
}

// ---- text form -------------------------------------------------------------
//
// A rational function prints as "(NUM) / (DEN)" where each part is an
// expanded polynomial, terms in descending graded lex order, e.g.
// "(-z*w + 1) / (z^2*w - z)". Coefficients print as integers or "p/q".
// parse_ratfun2 accepts exactly this shape (polynomials contain no nested
// parentheses, so the split is unambiguous).

namespace detail {

// "3" rather than "3/1"; fractions keep the slash.
inline std::string rational_text(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    std::string out = n.str();
    if (d != 1) out += "/" + d.str();
    return out;
}

inline void append_monomial(std::string& out, const Rational& coeff, int i, int j,
                            const std::string& vx, const std::string& vy, bool first) {
    Rational a = coeff;
    if (first) {
        if (a < 0) {
            out += "-";
            a = -a;
        }
    } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
    }
    bool coeff_one = a == 1;
    bool has_var = i > 0 || j > 0;
    if (!coeff_one || !has_var) out += rational_text(a);
    bool need_star = !coeff_one && has_var;
    if (i > 0) {
        if (need_star) out += "*";
        out += vx;
        if (i > 1) out += "^" + std::to_string(i);
        need_star = true;
    }
    if (j > 0) {
        if (need_star) out += "*";
        out += vy;
        if (j > 1) out += "^" + std::to_string(j);
    }
}

inline std::string poly2_text(const Poly2& p, const std::string& vx, const std::string& vy) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int d = p.total_degree(); d >= 0; --d) {
        for (int j = std::min(d, p.degree_y()); j >= 0; --j) {
            int i = d - j;
            Rational c = p.coeff(i, j);
            if (c == 0) continue;
            append_monomial(out, c, i, j, vx, vy, first);
            first = false;
        }
    }
    return out;
}

inline std::string poly1_text(const Poly1& p, const std::string& v) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        append_monomial(out, c, i, 0, v, "", first);
        first = false;
    }
    return out;
}

class PolyTextParser {
  public:
    PolyTextParser(std::string_view text, std::string vx, std::string vy)
        : s_(text), vx_(std::move(vx)), vy_(std::move(vy)) {}

    Poly2 parse() {
        Poly2 acc = parse_term(read_sign());
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) return acc;
            char c = s_[pos_];
            if (c != '+' && c != '-') throw std::invalid_argument("polynomial text: expected + or -");
            ++pos_;
            acc = acc + parse_term(c == '-' ? -1 : 1);
        }
    }

  private:
    int read_sign() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '-') {
            ++pos_;
            return -1;
        }
        return 1;
    }

    Poly2 parse_term(int sign) {
        Poly2 acc = Poly2::constant(sign);
        acc = acc * parse_factor();
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    Poly2 parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw std::invalid_argument("polynomial text: unexpected end");
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            Integer numer = read_integer();
            Integer denom = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                denom = read_integer();
            }
            return Poly2::constant(Rational(numer, denom));
        }
        Poly2 base;
        if (match(vx_))
            base = Poly2::var_x();
        else if (match(vy_))
            base = Poly2::var_y();
        else
            throw std::invalid_argument("polynomial text: unknown symbol at '" +
                                        std::string(s_.substr(pos_)) + "'");
        int e = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            e = static_cast<int>(read_integer());
        }
        Poly2 acc = Poly2::constant(1);
        for (int i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }

    bool match(const std::string& name) {
        if (name.empty() || s_.substr(pos_, name.size()) != name) return false;
        pos_ += name.size();
        return true;
    }

    Integer read_integer() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw std::invalid_argument("polynomial text: expected a number");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::string_view s_;
    std::string vx_, vy_;
    size_t pos_ = 0;
};

}  // namespace detail

inline std::string to_text(const RatFun2& f, const std::string& vx = "x",
                           const std::string& vy = "y") {
    return "(" + detail::poly2_text(f.num(), vx, vy) + ") / (" +
           detail::poly2_text(f.den(), vx, vy) + ")";
}

inline std::string to_text(const RatFun1& f, const std::string& v = "x") {
    return "(" + detail::poly1_text(f.num(), v) + ") / (" + detail::poly1_text(f.den(), v) + ")";
}

inline Poly2 parse_poly2(std::string_view text, const std::string& vx = "x",
                         const std::string& vy = "y") {
    return detail::PolyTextParser(text, vx, vy).parse();
}

inline RatFun2 parse_ratfun2(std::string_view text, const std::string& vx = "x",
                             const std::string& vy = "y") {
    size_t open1 = text.find('(');
    size_t close1 = text.find(')', open1);
    if (open1 == std::string_view::npos || close1 == std::string_view::npos)
        throw std::invalid_argument("rational function text: expected '(num) / (den)'");
    size_t slash = text.find('/', close1);
    size_t open2 = slash == std::string_view::npos ? std::string_view::npos : text.find('(', slash);
    size_t close2 = text.rfind(')');
    if (slash == std::string_view::npos || open2 == std::string_view::npos ||
        close2 == std::string_view::npos || close2 <= open2)
        throw std::invalid_argument("rational function text: expected '(num) / (den)'");
    Poly2 num = parse_poly2(text.substr(open1 + 1, close1 - open1 - 1), vx, vy);
    Poly2 den = parse_poly2(text.substr(open2 + 1, close2 - open2 - 1), vx, vy);
    return RatFun2(std::move(num), std::move(den));
}

}  // namespace mzv
