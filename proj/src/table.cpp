#include "braidops/table.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>

#include "braidops/braid.hpp"
#include "braidops/error.hpp"

namespace braidops {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<int> sorted = w_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != static_cast<int>(k) + 1) throw Error("not a permutation of 1..n in one-line notation");
    }
    if (w_.empty()) throw Error("permutation of an empty set");
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.rbegin(), w.rend(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::from_word(int n, const Word& word) {
    Permutation w = identity(n);
    for (int a : word) w = w.times_s(a);
    return w;
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t j = 0; j < w_.size(); ++j) {
        for (std::size_t k = j + 1; k < w_.size(); ++k) inv += w_[j] > w_[k] ? 1 : 0;
    }
    return inv;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(w_.size());
    for (std::size_t k = 0; k < w_.size(); ++k) inv[static_cast<std::size_t>(w_[k] - 1)] = static_cast<int>(k) + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::times_s(int a) const {
    if (a < 1 || a >= n()) throw IndexError("s_" + std::to_string(a) + " outside S_" + std::to_string(n()));
    std::vector<int> w = w_;
    std::swap(w[static_cast<std::size_t>(a - 1)], w[static_cast<std::size_t>(a)]);
    return Permutation(std::move(w));
}

Permutation Permutation::s_times(int a) const {
    if (a < 1 || a >= n()) throw IndexError("s_" + std::to_string(a) + " outside S_" + std::to_string(n()));
    std::vector<int> w = w_;
    for (int& x : w) {
        if (x == a) {
            x = a + 1;
        } else if (x == a + 1) {
            x = a;
        }
    }
    return Permutation(std::move(w));
}

bool Permutation::has_left_descent(int a) const {
    const auto pos_a = std::find(w_.begin(), w_.end(), a);
    const auto pos_next = std::find(w_.begin(), w_.end(), a + 1);
    return pos_next < pos_a;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw DimensionMismatch("permutations of different sizes");
    std::vector<int> w(u.w_.size());
    for (int k = 1; k <= v.n(); ++k) w[static_cast<std::size_t>(k - 1)] = u(v(k));
    return Permutation(std::move(w));
}

namespace {

void check_size(int n) {
    if (n > kMaxTableN) {
        throw SizeLimit("reduced words and tables are limited to n <= " + std::to_string(kMaxTableN) + ", got " +
                        std::to_string(n));
    }
}

void collect_words(const Permutation& w, std::vector<Word>& out) {
    if (w.length() == 0) {
        out.emplace_back();
        return;
    }
    for (int a = 1; a < w.n(); ++a) {
        if (!w.has_right_descent(a)) continue;
        std::vector<Word> shorter;
        collect_words(w.times_s(a), shorter);
        for (auto& u : shorter) {
            u.push_back(a);
            out.push_back(std::move(u));
        }
    }
}

}  // namespace

std::vector<Word> reduced_words(const Permutation& w) {
    check_size(w.n());
    std::vector<Word> out;
    collect_words(w, out);
    std::sort(out.begin(), out.end());
    return out;
}

Word first_reduced_word(const Permutation& w) {
    Word word;
    Permutation rest = w;
    while (rest.length() > 0) {
        int a = 1;
        while (!rest.has_left_descent(a)) ++a;
        word.push_back(a);
        rest = rest.s_times(a);
    }
    return word;
}

MultiPoly apply_word(const OperatorFamily& fam, const Word& word, const MultiPoly& f) {
    validate_shape(fam);
    if (f.n_vars() != fam.n) throw DimensionMismatch("polynomial and family have different n");
    MultiPoly out = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 1 || *it >= fam.n) throw IndexError("word letter " + std::to_string(*it) + " outside 1..n-1");
        out = fam.op(*it).apply(*it, out);
    }
    return out;
}

MultiPoly staircase(int n) {
    Exponent e(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k)] = n - 1 - k;
    return MultiPoly::monomial(std::move(e));
}

namespace {

using Values = std::map<Permutation, MultiPoly>;

std::string bracketed(const std::vector<int>& xs) {
    std::string s = "[";
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
    return s + "]";
}

// F(v) = pi_a F(s_a v) for every left descent a of v; all of them must agree.
MultiPoly level_value(const OperatorFamily& fam, const Values& known, const Permutation& v) {
    std::optional<MultiPoly> value;
    int first = 0;
    for (int a = 1; a < v.n(); ++a) {
        if (!v.has_left_descent(a)) continue;
        MultiPoly candidate = fam.op(a).apply(a, known.at(v.s_times(a)));
        if (!value) {
            value = std::move(candidate);
            first = a;
        } else if (candidate != *value) {
            throw BraidFailure("reduced words of " + bracketed(v.one_line()) + " starting with " +
                               std::to_string(first) + " and " + std::to_string(a) + " give " +
                               value->to_string() + " and " + candidate.to_string());
        }
    }
    return *value;
}

std::vector<std::vector<Permutation>> by_length(int n) {
    std::vector<std::vector<Permutation>> levels(static_cast<std::size_t>(n * (n - 1) / 2 + 1));
    for (auto& p : Permutation::all(n)) levels[static_cast<std::size_t>(p.length())].push_back(p);
    return levels;
}

void check_family(const OperatorFamily& fam, const MultiPoly& seed) {
    validate_shape(fam);
    check_size(fam.n);
    if (seed.n_vars() != fam.n) throw DimensionMismatch("seed and family have different n");
    if (fam.size() >= 2) {
        const FamilyReport report = family_braid_check_serial(fam);
        if (!report.pass) {
            std::string what = "family fails its braid relations";
            if (auto i = report.first_cubic_failure()) {
                what += " (cubic relation at i = " + std::to_string(*i) + ")";
            } else {
                what += " (a quadratic relation)";
            }
            throw BraidFailure(what);
        }
    }
}

std::vector<TableEntry> assemble(const OperatorFamily& fam, const Values& values) {
    const Permutation w0 = Permutation::longest(fam.n);
    std::vector<TableEntry> out;
    for (auto& w : Permutation::all(fam.n)) {
        const Permutation v = w.inverse() * w0;
        out.push_back({w, first_reduced_word(v), values.at(v)});
    }
    return out;
}

}  // namespace

std::vector<TableEntry> polynomial_table(const OperatorFamily& fam, const MultiPoly& seed) {
    check_family(fam, seed);
    Values values;
    const auto levels = by_length(fam.n);
    values.emplace(levels[0][0], seed);
    for (std::size_t len = 1; len < levels.size(); ++len) {
        const auto& level = levels[len];
        std::vector<std::optional<MultiPoly>> results(level.size());
        std::exception_ptr failure;
        std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic)
        for (long j = 0; j < static_cast<long>(level.size()); ++j) {
            try {
                results[static_cast<std::size_t>(j)] = level_value(fam, values, level[static_cast<std::size_t>(j)]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        for (std::size_t j = 0; j < level.size(); ++j) values.emplace(level[j], std::move(*results[j]));
    }
    return assemble(fam, values);
}

std::vector<TableEntry> polynomial_table_serial(const OperatorFamily& fam, const MultiPoly& seed) {
    check_family(fam, seed);
    Values values;
    const auto levels = by_length(fam.n);
    values.emplace(levels[0][0], seed);
    for (std::size_t len = 1; len < levels.size(); ++len) {
        for (const auto& v : levels[len]) values.emplace(v, level_value(fam, values, v));
    }
    return assemble(fam, values);
}

}  // namespace braidops
