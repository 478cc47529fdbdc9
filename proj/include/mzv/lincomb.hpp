#pragma once

#include <map>
#include <string>

#include "mzv/rational.hpp"

namespace mzv {

// Finite formal Q-linear combination of symbols. Zero coefficients are never
// stored, so equality of combinations is equality of the underlying maps.
template <class Sym>
class LinComb {
  public:
    using Terms = std::map<Sym, Rational>;

    LinComb() = default;
    explicit LinComb(const Sym& s, const Rational& c = 1) { add_term(s, c); }

    void add_term(const Sym& s, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Sym& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const Terms& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    LinComb& operator+=(const LinComb& other) {
        for (const auto& [s, c] : other.terms_) add_term(s, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& other) {
        for (const auto& [s, c] : other.terms_) add_term(s, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [s, v] : terms_) v *= c;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }

    bool operator==(const LinComb&) const = default;

  private:
    Terms terms_;
};

// Renders "c1*(s1) + c2*(s2)" using Sym's to_string; for diagnostics only.
template <class Sym>
std::string to_string(const LinComb<Sym>& lc) {
    if (lc.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : lc.terms()) {
        if (!out.empty()) out += " + ";
        out += to_fraction_string(c) + "*(" + to_string(s) + ")";
    }
    return out;
}

}  // namespace mzv
