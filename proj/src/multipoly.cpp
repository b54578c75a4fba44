#include "braidops/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "braidops/error.hpp"

namespace braidops {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(int n_vars) : n_vars_(n_vars) {
    if (n_vars <= 0) throw DimensionMismatch("polynomial ring needs at least one variable");
}

MultiPoly MultiPoly::constant(int n_vars, const FieldElement& c) {
    MultiPoly p(n_vars);
    p.add_term(Exponent(n_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int n_vars, int index) {
    if (index < 1 || index > n_vars) {
        throw IndexError("variable x" + std::to_string(index) + " outside x1..x" + std::to_string(n_vars));
    }
    Exponent e(n_vars, 0);
    e[index - 1] = 1;
    return monomial(std::move(e));
}

MultiPoly MultiPoly::monomial(Exponent exponent, const FieldElement& c) {
    MultiPoly p(static_cast<int>(exponent.size()));
    for (int k : exponent) {
        if (k < 0) throw Error("negative exponent in monomial");
    }
    p.add_term(exponent, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && braidops::total_degree(terms_.begin()->first) == 0);
}

FieldElement MultiPoly::constant_term() const { return coefficient(Exponent(n_vars_, 0)); }

FieldElement MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement() : it->second;
}

int MultiPoly::total_degree() const {
    return terms_.empty() ? -1 : braidops::total_degree(terms_.begin()->first);
}

int MultiPoly::degree_in(int index) const {
    if (index < 1 || index > n_vars_) throw IndexError("degree_in: variable index out of range");
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[index - 1]);
    return d;
}

void MultiPoly::add_term(const Exponent& e, const FieldElement& c) {
    if (static_cast<int>(e.size()) != n_vars_) throw DimensionMismatch("exponent length differs from n_vars");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_same_dims(const MultiPoly& other) const {
    if (n_vars_ != other.n_vars_) {
        throw DimensionMismatch("polynomials in " + std::to_string(n_vars_) + " and " +
                                std::to_string(other.n_vars_) + " variables");
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    check_same_dims(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    check_same_dims(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const FieldElement& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_dims(b);
    MultiPoly out(a.n_vars_);
    Exponent e(a.n_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int k = 0; k < a.n_vars_; ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

FieldElement MultiPoly::evaluate(std::span<const FieldElement> point) const {
    if (static_cast<int>(point.size()) != n_vars_) throw DimensionMismatch("evaluation point has wrong length");
    FieldElement total;
    for (const auto& [e, c] : terms_) {
        FieldElement term = c;
        for (int k = 0; k < n_vars_; ++k) {
            for (int p = 0; p < e[k]; ++p) term *= point[k];
        }
        total += term;
    }
    return total;
}

std::string MultiPoly::to_string() const {
    std::vector<std::string> names;
    for (int k = 1; k <= n_vars_; ++k) names.push_back("x" + std::to_string(k));
    return to_string(names);
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int k = 0; k < n_vars_; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        FieldElement coeff = c;
        bool negative = false;
        if (c.is_rational() && sgn(c.rat_part()) < 0) {
            negative = true;
            coeff = -c;
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::string coeff_text = coeff.is_rational() ? coeff.to_string() : "(" + coeff.to_string() + ")";
        if (mono.empty()) {
            os << coeff_text;
        } else if (coeff.is_one()) {
            os << mono;
        } else {
            os << coeff_text << "*" << mono;
        }
    }
    return os.str();
}

MultiPoly transpose_vars(const MultiPoly& f, int i, int j) {
    const int n = f.n_vars();
    if (i < 1 || i > n || j < 1 || j > n) throw IndexError("transposition index out of range");
    MultiPoly out(n);
    for (const auto& [e, c] : f.terms()) {
        Exponent swapped = e;
        std::swap(swapped[i - 1], swapped[j - 1]);
        out.add_term(swapped, c);
    }
    return out;
}

MultiPoly swap_vars(const MultiPoly& f, int i) {
    if (i < 1 || i >= f.n_vars()) {
        throw IndexError("s_" + std::to_string(i) + " needs 1 <= i <= " + std::to_string(f.n_vars() - 1));
    }
    return transpose_vars(f, i, i + 1);
}

MultiPoly divide_by_difference(const MultiPoly& f, int i, int j) {
    const int n = f.n_vars();
    if (i < 1 || i > n || j < 1 || j > n) throw IndexError("divisor variable out of range");
    if (i == j) throw DivisionByZero("x_i - x_i is zero");
    // x_i^a * m = (x_i - x_j) * m * sum_{k<a} x_i^k x_j^(a-1-k) + x_j^a * m
    MultiPoly quotient(n);
    MultiPoly remainder(n);
    for (const auto& [e, c] : f.terms()) {
        const int a = e[i - 1];
        Exponent rest = e;
        rest[i - 1] = 0;
        for (int k = 0; k < a; ++k) {
            Exponent q = rest;
            q[i - 1] = k;
            q[j - 1] += a - 1 - k;
            quotient.add_term(q, c);
        }
        rest[j - 1] += a;
        remainder.add_term(rest, c);
    }
    if (!remainder.is_zero()) {
        throw InexactDivision("x" + std::to_string(i) + " - x" + std::to_string(j) + " does not divide " +
                              f.to_string());
    }
    return quotient;
}

namespace {

// Recognizes g = x_i - x_j, returning (i, j) or (0, 0).
std::pair<int, int> as_difference(const MultiPoly& g) {
    if (g.size() != 2 || g.total_degree() != 1) return {0, 0};
    int plus = 0;
    int minus = 0;
    for (const auto& [e, c] : g.terms()) {
        auto it = std::find(e.begin(), e.end(), 1);
        if (it == e.end()) return {0, 0};
        const int idx = static_cast<int>(it - e.begin()) + 1;
        if (c == FieldElement(1)) {
            plus = idx;
        } else if (c == FieldElement(-1)) {
            minus = idx;
        } else {
            return {0, 0};
        }
    }
    return plus && minus ? std::pair{plus, minus} : std::pair{0, 0};
}

}  // namespace

MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g) {
    if (f.n_vars() != g.n_vars()) throw DimensionMismatch("exact_div operands have different n_vars");
    if (g.is_zero()) throw DivisionByZero("exact_div by the zero polynomial");
    if (auto [i, j] = as_difference(g); i != 0) return divide_by_difference(f, i, j);

    const int n = f.n_vars();
    const auto& [lead_e, lead_c] = *g.terms().begin();
    const FieldElement lead_inv = lead_c.inverse();
    MultiPoly remainder = f;
    MultiPoly quotient(n);
    while (!remainder.is_zero()) {
        const auto& [re, rc] = *remainder.terms().begin();
        Exponent q(n);
        for (int k = 0; k < n; ++k) {
            q[k] = re[k] - lead_e[k];
            if (q[k] < 0) throw InexactDivision(g.to_string() + " does not divide " + f.to_string());
        }
        MultiPoly step = MultiPoly::monomial(q, rc * lead_inv);
        quotient += step;
        remainder -= step * g;
    }
    return quotient;
}

SlotPoly::SlotPoly(MultiPoly poly) : poly_(std::move(poly)) {
    if (poly_.n_vars() != 2) throw DimensionMismatch("slot polynomial must have exactly two variables");
}

SlotPoly SlotPoly::u() { return SlotPoly(MultiPoly::variable(2, 1)); }

SlotPoly SlotPoly::v() { return SlotPoly(MultiPoly::variable(2, 2)); }

SlotPoly SlotPoly::monomial(int r, int s, const FieldElement& c) { return SlotPoly(MultiPoly::monomial({r, s}, c)); }

SlotPoly SlotPoly::swapped() const { return SlotPoly(transpose_vars(poly_, 1, 2)); }

MultiPoly SlotPoly::instantiate(int i, int j, int n) const {
    if (i < 1 || i > n || j < 1 || j > n) throw IndexError("slot instantiation index out of range");
    if (i == j) throw IndexError("slots must be instantiated at distinct variables");
    MultiPoly out(n);
    Exponent e(n, 0);
    for (const auto& [se, c] : poly_.terms()) {
        std::fill(e.begin(), e.end(), 0);
        e[i - 1] = se[0];
        e[j - 1] = se[1];
        out.add_term(e, c);
    }
    return out;
}

std::string SlotPoly::to_string() const {
    static const std::vector<std::string> names{"u", "v"};
    return poly_.to_string(names);
}

}  // namespace braidops
