#pragma once

// Q(z) realized as 2x2 rational matrices: p + q z -> p I + q M, where M is the companion
// matrix of t^2 - t + 1 acting on the basis (1, z).

#include <gmpxx.h>

#include <array>

#include <braidops/field.hpp>

namespace oracle {

using Mat2 = std::array<mpq_class, 4>;  // row-major

inline Mat2 to_matrix(const braidops::FieldElement& x) {
    const mpq_class& p = x.rat_part();
    const mpq_class& q = x.zeta_part();
    // M = [[0, -1], [1, 1]]
    return {p, -q, q, p + q};
}

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline braidops::FieldElement from_matrix(const Mat2& m) { return braidops::FieldElement(m[0], m[2]); }

inline braidops::FieldElement mul(const braidops::FieldElement& a, const braidops::FieldElement& b) {
    return from_matrix(mat_mul(to_matrix(a), to_matrix(b)));
}

}  // namespace oracle
