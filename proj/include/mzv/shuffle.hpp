#pragma once

#include <stdexcept>
#include <vector>

#include "mzv/lincomb.hpp"
#include "mzv/words.hpp"

namespace mzv {

// A shuffle of block sizes (k, l) is a permutation of {0,...,k+l-1} that is
// increasing on the first k sources and on the last l sources. dest[j] is the
// output position of source letter j.
using Shuffle = std::vector<int>;

// All C(k+l, k) shuffles, ordered by the position set taken by the first block
// (subsets in lexicographic order).
inline std::vector<Shuffle> enumerate_shuffles(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("enumerate_shuffles: negative block size");
    int n = k + l;
    std::vector<Shuffle> out;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        Shuffle dest(n);
        std::vector<bool> taken(n, false);
        for (int i = 0; i < k; ++i) {
            dest[i] = pick[i];
            taken[pick[i]] = true;
        }
        int pos = 0;
        for (int j = 0; j < l; ++j) {
            while (taken[pos]) ++pos;
            dest[k + j] = pos;
            taken[pos] = true;
        }
        out.push_back(std::move(dest));
        // next k-subset of {0..n-1} in lexicographic order
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

inline Word apply_shuffle(const Shuffle& dest, const Word& w1, const Word& w2) {
    if (dest.size() != w1.size() + w2.size())
        throw std::invalid_argument("apply_shuffle: size mismatch");
    std::string out(dest.size(), '?');
    for (size_t j = 0; j < w1.size(); ++j) out[static_cast<size_t>(dest[j])] = w1.at(j);
    for (size_t j = 0; j < w2.size(); ++j) out[static_cast<size_t>(dest[w1.size() + j])] = w2.at(j);
    return Word(std::move(out));
}

inline LinComb<Word> shuffle_words(const Word& w1, const Word& w2) {
    LinComb<Word> out;
    for (const Shuffle& tau : enumerate_shuffles(static_cast<int>(w1.size()),
                                                 static_cast<int>(w2.size())))
        out.add_term(apply_shuffle(tau, w1, w2), 1);
    return out;
}

// Surjection {0..k+l-1} ->> {0..image_size-1}, strictly increasing on the
// first k sources and on the last l sources. Fibers are singletons or pairs
// with one member from each block; pairs are where two parts merge.
struct QuasiShuffle {
    int k = 0;
    int l = 0;
    int image_size = 0;
    std::vector<int> sigma;  // length k + l

    bool operator==(const QuasiShuffle&) const = default;
};

// All quasi-shuffles of block sizes (k, l), generated by walking the merge
// pattern left to right: at each image value take the next part of the first
// block, of the second block, or of both at once. Counts satisfy
// N(k,l) = N(k-1,l) + N(k,l-1) + N(k-1,l-1) with N(k,0) = N(0,l) = 1.
inline std::vector<QuasiShuffle> enumerate_quasi_shuffles(int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("enumerate_quasi_shuffles: negative block size");
    std::vector<QuasiShuffle> out;
    std::vector<int> sigma(static_cast<size_t>(k + l), -1);
    auto rec = [&](auto&& self, int i, int j, int v) -> void {
        if (i == k && j == l) {
            out.push_back(QuasiShuffle{k, l, v, sigma});
            return;
        }
        if (i < k) {
            sigma[static_cast<size_t>(i)] = v;
            self(self, i + 1, j, v + 1);
        }
        if (j < l) {
            sigma[static_cast<size_t>(k + j)] = v;
            self(self, i, j + 1, v + 1);
        }
        if (i < k && j < l) {
            sigma[static_cast<size_t>(i)] = v;
            sigma[static_cast<size_t>(k + j)] = v;
            self(self, i + 1, j + 1, v + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

// The merged index c with c_n = (sum of the parts mapped onto n); singleton
// fibers copy their part, doubleton fibers add the two parts.
inline Index merge_index(const QuasiShuffle& qs, const Index& a, const Index& b,
                         int max_weight = kDefaultMaxWeight) {
    if (a.depth() != qs.k || b.depth() != qs.l)
        throw std::invalid_argument("merge_index: depth mismatch with quasi-shuffle blocks");
    std::vector<int> parts(static_cast<size_t>(qs.image_size), 0);
    for (int i = 0; i < qs.k; ++i) parts[static_cast<size_t>(qs.sigma[static_cast<size_t>(i)])] += a.part(i);
    for (int j = 0; j < qs.l; ++j)
        parts[static_cast<size_t>(qs.sigma[static_cast<size_t>(qs.k + j)])] += b.part(j);
    return Index(std::move(parts), max_weight);
}

// Harmonic (quasi-shuffle) product on indices.
inline LinComb<Index> stuffle(const Index& a, const Index& b,
                              int max_weight = kDefaultMaxWeight) {
    LinComb<Index> out;
    for (const QuasiShuffle& qs : enumerate_quasi_shuffles(a.depth(), b.depth()))
        out.add_term(merge_index(qs, a, b, max_weight), 1);
    return out;
}

// Shuffle product transported through the word encoding. Both inputs must be
// admissible; every shuffled word then starts with A and ends with B, so it
// encodes an admissible index again.
inline LinComb<Index> shuffle_on_indices(const Index& a, const Index& b,
                                         int max_weight = kDefaultMaxWeight) {
    if (!a.is_admissible() || !b.is_admissible())
        throw std::invalid_argument("shuffle_on_indices: inputs must be admissible");
    LinComb<Index> out;
    const LinComb<Word> words = shuffle_words(word_of_index(a), word_of_index(b));
    for (const auto& [word, c] : words.terms()) out.add_term(index_of_word(word, max_weight), c);
    return out;
}

// Difference of the two products; each MZV satisfies "this evaluates to 0".
inline LinComb<Index> double_shuffle_relation(const Index& a, const Index& b,
                                              int max_weight = kDefaultMaxWeight) {
    return stuffle(a, b, max_weight) - shuffle_on_indices(a, b, max_weight);
}

// Bilinear extensions, used by the associativity checks.
inline LinComb<Index> stuffle(const LinComb<Index>& lc, const Index& b,
                              int max_weight = kDefaultMaxWeight) {
    LinComb<Index> out;
    for (const auto& [a, c] : lc.terms()) out += c * stuffle(a, b, max_weight);
    return out;
}
inline LinComb<Index> stuffle(const Index& a, const LinComb<Index>& lc,
                              int max_weight = kDefaultMaxWeight) {
    LinComb<Index> out;
    for (const auto& [b, c] : lc.terms()) out += c * stuffle(a, b, max_weight);
    return out;
}
inline LinComb<Word> shuffle_words(const LinComb<Word>& lc, const Word& w2) {
    LinComb<Word> out;
    for (const auto& [w1, c] : lc.terms()) out += c * shuffle_words(w1, w2);
    return out;
}
inline LinComb<Word> shuffle_words(const Word& w1, const LinComb<Word>& lc) {
    LinComb<Word> out;
    for (const auto& [w2, c] : lc.terms()) out += c * shuffle_words(w1, w2);
    return out;
}

}  // namespace mzv
