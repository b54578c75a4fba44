#include "braidops/pddo.hpp"

#include <cassert>

#include "braidops/divdiff.hpp"
#include "braidops/error.hpp"

namespace braidops {

namespace {

const SlotPoly& u_minus_v() {
    static const SlotPoly d = SlotPoly::u() - SlotPoly::v();
    return d;
}

Degeneracy classify(const SlotPoly& t, const SlotPoly& q0) {
    if (t.is_zero() && q0.is_zero()) return Degeneracy::Zero;
    if (q0.is_zero()) return Degeneracy::QZero;
    if (t.is_zero()) return Degeneracy::TZero;
    return Degeneracy::NonDegenerate;
}

}  // namespace

std::string_view to_string(Degeneracy d) {
    switch (d) {
        case Degeneracy::NonDegenerate: return "non-degenerate";
        case Degeneracy::QZero: return "Q0 = 0";
        case Degeneracy::TZero: return "T = 0";
        case Degeneracy::Zero: return "zero";
    }
    return "?";
}

Pddo::Pddo() : degeneracy_(Degeneracy::Zero) {}

Pddo::Pddo(SlotPoly t, SlotPoly q0, SlotPoly r0)
    : t_(std::move(t)), q0_(std::move(q0)), r0_(std::move(r0)), degeneracy_(classify(t_, q0_)) {
    assert(t_ == q0_ + u_minus_v() * r0_);
}

Pddo Pddo::from_pqrs(const SlotPoly& P, const SlotPoly& Q, const SlotPoly& R, const SlotPoly& S) {
    SlotPoly t = P + u_minus_v() * R + Q;
    SlotPoly q0 = P.swapped() + Q - u_minus_v() * S;
    SlotPoly r0 = R + S + ddiff(P);
    return Pddo(std::move(t), std::move(q0), std::move(r0));
}

Pddo Pddo::from_q0_r0(const SlotPoly& Q0, const SlotPoly& R0) {
    return Pddo(Q0 + u_minus_v() * R0, Q0, R0);
}

Pddo Pddo::from_t_q0(const SlotPoly& T, const SlotPoly& Q0) {
    SlotPoly r0(divide_by_difference((T - Q0).poly(), 1, 2));
    return Pddo(T, Q0, std::move(r0));
}

Pddo Pddo::identity(const FieldElement& mu) { return from_q0_r0(SlotPoly(), SlotPoly(mu)); }

Pddo Pddo::times_swap(const SlotPoly& R) { return from_pqrs(SlotPoly(), SlotPoly(), SlotPoly(), R); }

Pddo Pddo::phi_ddiff_psi(const SlotPoly& phi, const SlotPoly& psi) {
    // phi d(psi f) = phi s(psi) d f + phi d(psi) f
    return from_q0_r0(phi * psi.swapped(), phi * ddiff(psi));
}

MultiPoly Pddo::apply(int i, const MultiPoly& f) const {
    const int n = f.n_vars();
    if (i < 1 || i >= n) {
        throw IndexError("operator index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
    }
    if (is_zero() || f.is_zero()) return MultiPoly(n);
    MultiPoly numerator = t_.instantiate(i, i + 1, n) * f - q0_.instantiate(i, i + 1, n) * swap_vars(f, i);
    return divide_by_difference(numerator, i, i + 1);
}

Pddo operator+(const Pddo& a, const Pddo& b) { return Pddo(a.t_ + b.t_, a.q0_ + b.q0_, a.r0_ + b.r0_); }

Pddo operator-(const Pddo& a, const Pddo& b) { return Pddo(a.t_ - b.t_, a.q0_ - b.q0_, a.r0_ - b.r0_); }

Pddo operator*(const FieldElement& s, const Pddo& op) {
    const SlotPoly k(s);
    return Pddo(k * op.t_, k * op.q0_, k * op.r0_);
}

std::string Pddo::to_string() const {
    return "T = " + t_.to_string() + ", Q0 = " + q0_.to_string() + ", R0 = " + r0_.to_string();
}

CanonicalForms canonical_forms(const Pddo& op) {
    CanonicalForms forms;
    forms.Q0 = op.Q0();
    forms.R0 = op.R0();
    // pi(1) = R0: its d-positive part is R_plus, its symmetric part is d(P_plus).
    auto [r_sym, r_pos] = dpositive_split(op.R0());
    forms.R_plus = r_pos;
    forms.P_plus = dpositive_lift(r_sym);
    forms.Q_sup = op.Q0() - forms.P_plus.swapped();
    // Symmetric parts commute with d, so they move freely between P and Q.
    auto [q_sym, q_pos] = dpositive_split(forms.Q_sup);
    forms.Q_plus = q_pos;
    forms.P_sup = forms.P_plus + q_sym;
    return forms;
}

Probe probe(const Pddo& op, int i, int n) {
    return {op.apply(i, MultiPoly::constant(n, 1)), op.apply(i, MultiPoly::variable(n, i))};
}

Pddo compose_same_index(const Pddo& op1, const Pddo& op2) {
    const SlotPoly& q = op1.Q0();
    const SlotPoly& r = op1.R0();
    const SlotPoly& qh = op2.Q0();
    const SlotPoly& rh = op2.R0();
    SlotPoly q0 = q * ddiff(qh) + r * qh + q * rh.swapped();
    SlotPoly r0 = q * ddiff(rh) + r * rh;
    return Pddo::from_pqrs(SlotPoly(), q0, r0, SlotPoly());
}

std::optional<HeckeParams> hecke_params(const Pddo& op) {
    const SlotPoly& r0 = op.R0();
    switch (op.degeneracy()) {
        case Degeneracy::Zero:
            return std::nullopt;
        case Degeneracy::QZero:
            // pi = R0 * Id
            if (!r0.is_constant()) return std::nullopt;
            return HeckeParams{r0.constant_term(), FieldElement()};
        case Degeneracy::TZero: {
            // pi = R0 * s, pi^2 = R0 * s(R0)
            if (!r0.is_constant()) return std::nullopt;
            const FieldElement lambda = r0.constant_term();
            return HeckeParams{FieldElement(), lambda * lambda};
        }
        case Degeneracy::NonDegenerate: {
            const SlotPoly mu = ddiff(op.T());
            if (!mu.is_constant()) return std::nullopt;
            const SlotPoly nu = ddiff(r0 * op.T().swapped()) + r0 * r0.swapped();
            if (!nu.is_constant()) return std::nullopt;
            return HeckeParams{mu.constant_term(), nu.constant_term()};
        }
    }
    return std::nullopt;
}

bool scalar_multiples(const Pddo& a, const Pddo& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const SlotPoly& ref_b = b.T().is_zero() ? b.Q0() : b.T();
    const SlotPoly& ref_a = b.T().is_zero() ? a.Q0() : a.T();
    const auto& [e, cb] = *ref_b.terms().begin();
    const FieldElement ca = ref_a.poly().coefficient(e);
    if (ca.is_zero()) return false;
    return a == (ca / cb) * b;
}

}  // namespace braidops
