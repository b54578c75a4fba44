#pragma once

#include <braidops/multipoly.hpp>

namespace support {

inline braidops::FieldElement q(long num, long den = 1) { return braidops::FieldElement::rational(num, den); }
inline braidops::MultiPoly x(int n, int i) { return braidops::MultiPoly::variable(n, i); }
inline braidops::MultiPoly k(int n, const braidops::FieldElement& c) { return braidops::MultiPoly::constant(n, c); }
inline const braidops::SlotPoly U = braidops::SlotPoly::u();
inline const braidops::SlotPoly V = braidops::SlotPoly::v();

}  // namespace support
