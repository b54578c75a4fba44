#pragma once

#include <optional>
#include <string_view>

#include "braidops/multipoly.hpp"

namespace braidops {

enum class Degeneracy { NonDegenerate, QZero, TZero, Zero };

std::string_view to_string(Degeneracy d);

/// The three unique presentations of an operator.
///   first:  Q0 d f + R0 f
///   second: d(P_plus f) + Q_sup d f + R_plus f   with P_plus, R_plus d-positive
///   third:  d(P_sup f) + Q_plus d f + R_plus f   with Q_plus, R_plus d-positive
struct CanonicalForms {
    SlotPoly Q0, R0;
    SlotPoly P_plus, Q_sup, R_plus;
    SlotPoly P_sup, Q_plus;
};

struct HeckeParams {
    FieldElement mu;
    FieldElement nu;
    friend bool operator==(const HeckeParams&, const HeckeParams&) = default;
};

/// Polynomial divided difference operator
///     f -> d_i(P f) + Q d_i f + R f + S s_i f,
/// with coefficients in the slots (u, v) = (x_i, x_{i+1}).
///
/// Stored through the presentation invariants T = P + (u - v) R + Q and
/// Q0 = P(v,u) + Q - (u - v) S; R0 is cached with T = Q0 + (u - v) R0. The action is
///     pi_i f = (T(x_i, x_{i+1}) f - Q0(x_i, x_{i+1}) s_i f) / (x_i - x_{i+1}).
/// Two operators are equal iff their (T, Q0) pairs are.
class Pddo {
public:
    /// The zero operator.
    Pddo();

    static Pddo from_pqrs(const SlotPoly& P, const SlotPoly& Q, const SlotPoly& R, const SlotPoly& S);
    /// First canonical form f -> Q0 d f + R0 f.
    static Pddo from_q0_r0(const SlotPoly& Q0, const SlotPoly& R0);
    /// Throws InexactDivision unless (u - v) divides T - Q0.
    static Pddo from_t_q0(const SlotPoly& T, const SlotPoly& Q0);
    /// mu * Id.
    static Pddo identity(const FieldElement& mu = 1);
    /// f -> R s_i f.
    static Pddo times_swap(const SlotPoly& R);
    /// f -> phi d_i(psi f).
    static Pddo phi_ddiff_psi(const SlotPoly& phi, const SlotPoly& psi);

    const SlotPoly& T() const { return t_; }
    const SlotPoly& Q0() const { return q0_; }
    const SlotPoly& R0() const { return r0_; }
    Degeneracy degeneracy() const { return degeneracy_; }
    bool is_zero() const { return degeneracy_ == Degeneracy::Zero; }

    /// pi_i f in a ring with f.n_vars() variables.
    MultiPoly apply(int i, const MultiPoly& f) const;

    friend Pddo operator+(const Pddo& a, const Pddo& b);
    friend Pddo operator-(const Pddo& a, const Pddo& b);
    friend Pddo operator*(const FieldElement& s, const Pddo& op);

    friend bool operator==(const Pddo& a, const Pddo& b) { return a.t_ == b.t_ && a.q0_ == b.q0_; }

    std::string to_string() const;

private:
    Pddo(SlotPoly t, SlotPoly q0, SlotPoly r0);

    SlotPoly t_;
    SlotPoly q0_;
    SlotPoly r0_;
    Degeneracy degeneracy_;
};

CanonicalForms canonical_forms(const Pddo& op);

struct Probe {
    MultiPoly pi_1;
    MultiPoly pi_x;
};

/// (pi_i(1), pi_i(x_i)) in n variables.
Probe probe(const Pddo& op, int i, int n);

/// The operator op1 o op2 acting on the same pair of variables.
Pddo compose_same_index(const Pddo& op1, const Pddo& op2);

/// (mu, nu) with op^2 = mu op + nu Id, when the operator admits such a relation of the
/// classified shape; empty otherwise (including for the zero operator).
std::optional<HeckeParams> hecke_params(const Pddo& op);

/// True when a = lambda * b for some nonzero scalar lambda.
bool scalar_multiples(const Pddo& a, const Pddo& b);

}  // namespace braidops
