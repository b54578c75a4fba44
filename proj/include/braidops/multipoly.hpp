#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "braidops/field.hpp"

namespace braidops {

using Exponent = std::vector<int>;

// Graded lexicographic order, largest monomial first.
struct GrlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

int total_degree(const Exponent& e);

/// Sparse polynomial in x_1..x_n over Q(z).
///
/// Terms are kept in a map ordered by descending graded-lex order with no zero
/// coefficients, so two polynomials are equal exactly when their term maps are.
/// Variable indices in the public API are 1-based, matching x_1..x_n.
class MultiPoly {
public:
    using TermMap = std::map<Exponent, FieldElement, GrlexDescending>;

    explicit MultiPoly(int n_vars);

    static MultiPoly constant(int n_vars, const FieldElement& c);
    static MultiPoly variable(int n_vars, int index);
    static MultiPoly monomial(Exponent exponent, const FieldElement& c = 1);

    int n_vars() const { return n_vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the monomial 1.
    FieldElement constant_term() const;
    FieldElement coefficient(const Exponent& e) const;
    int total_degree() const;
    int degree_in(int index) const;

    /// Adds c * x^e, dropping the term if the coefficient cancels.
    void add_term(const Exponent& e, const FieldElement& c);

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const FieldElement& scalar);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const FieldElement& s) { return a *= s; }
    friend MultiPoly operator*(const FieldElement& s, MultiPoly a) { return a *= s; }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
    }

    FieldElement evaluate(std::span<const FieldElement> point) const;

    /// Human-readable form such as "x1^2*x2 - 1/2*x3 + (1+1z)".
    std::string to_string() const;
    std::string to_string(std::span<const std::string> names) const;

private:
    void check_same_dims(const MultiPoly& other) const;

    int n_vars_;
    TermMap terms_;
};

/// s_i: exchanges x_i and x_{i+1}. Requires 1 <= i <= n_vars - 1.
MultiPoly swap_vars(const MultiPoly& f, int i);

/// Exchanges x_i and x_j for arbitrary distinct indices.
MultiPoly transpose_vars(const MultiPoly& f, int i, int j);

/// Quotient of f by (x_i - x_j); throws InexactDivision if there is a remainder.
MultiPoly divide_by_difference(const MultiPoly& f, int i, int j);

/// Exact quotient f / g. Divisors of the form x_i - x_j take the substitution route,
/// anything else goes through graded-lex long division. Throws InexactDivision when g does
/// not divide f and DivisionByZero when g = 0.
MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g);

/// Polynomial in the two abstract slots (u, v) used for operator coefficients.
///
/// Instantiating at an ordered pair of variables (x_i, x_j) substitutes u -> x_i, v -> x_j.
class SlotPoly {
public:
    SlotPoly() : poly_(2) {}
    explicit SlotPoly(MultiPoly poly);
    SlotPoly(const FieldElement& c) : poly_(MultiPoly::constant(2, c)) {}  // NOLINT
    SlotPoly(long c) : SlotPoly(FieldElement(c)) {}                         // NOLINT

    static SlotPoly u();
    static SlotPoly v();
    static SlotPoly monomial(int r, int s, const FieldElement& c = 1);

    const MultiPoly& poly() const { return poly_; }
    const MultiPoly::TermMap& terms() const { return poly_.terms(); }
    bool is_zero() const { return poly_.is_zero(); }
    bool is_constant() const { return poly_.is_constant(); }
    FieldElement constant_term() const { return poly_.constant_term(); }
    FieldElement coefficient(int r, int s) const { return poly_.coefficient({r, s}); }
    int total_degree() const { return poly_.total_degree(); }
    int degree_in_u() const { return poly_.degree_in(1); }
    int degree_in_v() const { return poly_.degree_in(2); }

    /// The polynomial with u and v exchanged.
    SlotPoly swapped() const;
    bool is_symmetric() const { return swapped() == *this; }

    /// Substitutes u -> x_i, v -> x_j in a polynomial ring with n variables.
    MultiPoly instantiate(int i, int j, int n) const;

    SlotPoly& operator+=(const SlotPoly& o) { poly_ += o.poly_; return *this; }
    SlotPoly& operator-=(const SlotPoly& o) { poly_ -= o.poly_; return *this; }
    friend SlotPoly operator+(SlotPoly a, const SlotPoly& b) { return a += b; }
    friend SlotPoly operator-(SlotPoly a, const SlotPoly& b) { return a -= b; }
    friend SlotPoly operator*(const SlotPoly& a, const SlotPoly& b) { return SlotPoly(a.poly_ * b.poly_); }
    SlotPoly operator-() const { return SlotPoly(-poly_); }

    friend bool operator==(const SlotPoly& a, const SlotPoly& b) { return a.poly_ == b.poly_; }

    std::string to_string() const;

private:
    MultiPoly poly_;
};

}  // namespace braidops
