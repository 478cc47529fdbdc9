#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

inline constexpr int kDefaultMaxWeight = 64;

// Composition (k_1,...,k_m) of positive integers. k_1 is attached to the
// innermost (smallest) summation variable, k_m to the outermost; the index is
// admissible exactly when k_m >= 2, which is the convergence condition for the
// nested sum it names.
class Index {
  public:
    explicit Index(std::vector<int> parts, int max_weight = kDefaultMaxWeight)
        : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("Index: empty part list");
        long w = 0;
        for (int k : parts_) {
            if (k < 1) throw std::invalid_argument("Index: parts must be positive");
            w += k;
        }
        if (w > max_weight)
            throw std::invalid_argument("Index: weight " + std::to_string(w) +
                                        " exceeds cap " + std::to_string(max_weight));
        weight_ = static_cast<int>(w);
    }

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int depth() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_.at(static_cast<size_t>(i)); }
    int last() const { return parts_.back(); }
    bool is_admissible() const { return parts_.back() >= 2; }

    auto operator<=>(const Index&) const = default;

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

inline std::string to_string(const Index& idx) {
    std::string s;
    for (size_t i = 0; i < idx.parts().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx.parts()[i]);
    }
    return s;
}

inline Index parse_index(const std::string& text, int max_weight = kDefaultMaxWeight) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("parse_index: bad part '" + piece + "' in '" + text + "'");
        parts.push_back(std::stoi(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Index(std::move(parts), max_weight);
}

// Column order used throughout for relation matrices: by depth, then
// lexicographically on the part lists.
inline bool canonical_index_less(const Index& a, const Index& b) {
    if (a.depth() != b.depth()) return a.depth() < b.depth();
    return a.parts() < b.parts();
}

// All compositions of w, ascending lexicographically on parts.
inline std::vector<Index> enumerate_compositions(int w, int max_weight = kDefaultMaxWeight) {
    std::vector<Index> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.emplace_back(cur, max_weight);
            return;
        }
        for (int k = 1; k <= rem; ++k) {
            cur.push_back(k);
            self(self, rem - k);
            cur.pop_back();
        }
    };
    if (w >= 1) rec(rec, w);
    return out;
}

// Admissible indices of weight w in canonical (depth, parts) order.
// There are 2^(w-2) of them for w >= 2.
inline std::vector<Index> enumerate_admissible(int w, int max_weight = kDefaultMaxWeight) {
    std::vector<Index> out;
    for (const Index& idx : enumerate_compositions(w, max_weight))
        if (idx.is_admissible()) out.push_back(idx);
    std::sort(out.begin(), out.end(), canonical_index_less);
    return out;
}

enum class Letter : char { A = 'A', B = 'B' };

// Finite word over {A, B}; the empty word is allowed. A word encodes an index
// exactly when it is nonempty and ends in B; it then encodes an admissible
// index exactly when it also starts with A.
class Word {
  public:
    Word() = default;
    explicit Word(std::string letters) : letters_(std::move(letters)) {
        for (char ch : letters_)
            if (ch != 'A' && ch != 'B')
                throw std::invalid_argument("Word: letters must be A or B, got '" +
                                            std::string(1, ch) + "'");
    }

    const std::string& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    char at(size_t i) const { return letters_.at(i); }

    bool is_index_encoding() const { return !letters_.empty() && letters_.back() == 'B'; }
    bool encodes_admissible() const { return is_index_encoding() && letters_.front() == 'A'; }

    Word concat(const Word& other) const { return Word(letters_ + other.letters_); }

    auto operator<=>(const Word&) const = default;

  private:
    std::string letters_;
};

inline std::string to_string(const Word& w) { return w.letters(); }
inline Word parse_word(const std::string& text) { return Word(text); }

// (k_1,...,k_h) -> A^(k_h - 1) B A^(k_{h-1} - 1) B ... A^(k_1 - 1) B.
// The run lengths left to right walk the index from its last part to its first.
inline Word word_of_index(const Index& idx) {
    std::string s;
    for (int i = idx.depth() - 1; i >= 0; --i) {
        s.append(static_cast<size_t>(idx.part(i) - 1), 'A');
        s += 'B';
    }
    return Word(std::move(s));
}

inline Index index_of_word(const Word& w, int max_weight = kDefaultMaxWeight) {
    if (!w.is_index_encoding())
        throw std::invalid_argument("index_of_word: '" + w.letters() +
                                    "' is not an index encoding (empty or does not end in B)");
    std::vector<int> parts;  // collected from last part to first
    int run = 0;
    for (char ch : w.letters()) {
        if (ch == 'A') {
            ++run;
        } else {
            parts.push_back(run + 1);
            run = 0;
        }
    }
    std::reverse(parts.begin(), parts.end());
    return Index(std::move(parts), max_weight);
}

}  // namespace mzv
