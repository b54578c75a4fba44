#pragma once

#include <vector>

#include "braidops/family.hpp"

namespace braidops {

using Word = std::vector<int>;

/// Permutation of {1..n} in one-line notation: perm[k-1] = w(k).
/// Products compose as functions, (u v)(k) = u(v(k)), and the word (a1, .., ak) stands for
/// s_{a1} ... s_{ak}.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    static Permutation longest(int n);
    static Permutation from_word(int n, const Word& word);
    /// All of S_n in lexicographic order of one-line notation.
    static std::vector<Permutation> all(int n);

    int n() const { return static_cast<int>(w_.size()); }
    int operator()(int k) const { return w_.at(static_cast<std::size_t>(k - 1)); }
    const std::vector<int>& one_line() const { return w_; }

    int length() const;
    Permutation inverse() const;
    /// w s_a: swaps positions a and a+1.
    Permutation times_s(int a) const;
    /// s_a w: swaps values a and a+1.
    Permutation s_times(int a) const;
    bool has_right_descent(int a) const { return (*this)(a) > (*this)(a + 1); }
    /// a+1 appears before a.
    bool has_left_descent(int a) const;

    friend Permutation operator*(const Permutation& u, const Permutation& v);
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> w_;
};

inline constexpr int kMaxTableN = 6;

/// Every reduced word of w, lexicographically sorted. Throws SizeLimit for n > 6.
std::vector<Word> reduced_words(const Permutation& w);

/// Lexicographically smallest reduced word.
Word first_reduced_word(const Permutation& w);

/// pi_{w1}(pi_{w2}(...(pi_{wk} f))).
MultiPoly apply_word(const OperatorFamily& fam, const Word& word, const MultiPoly& f);

/// x1^{n-1} x2^{n-2} ... x_{n-1}.
MultiPoly staircase(int n);

struct TableEntry {
    Permutation perm;
    Word word;  // first reduced word of perm^{-1} w0
    MultiPoly poly;
};

/// For each w in S_n (lexicographic order), the word of w^{-1} w0 applied to the seed.
/// Throws BraidFailure if the family fails its braid relations or if two reduced words of
/// some permutation give different polynomials. Length levels are computed in parallel.
std::vector<TableEntry> polynomial_table(const OperatorFamily& fam, const MultiPoly& seed);
std::vector<TableEntry> polynomial_table_serial(const OperatorFamily& fam, const MultiPoly& seed);

}  // namespace braidops
