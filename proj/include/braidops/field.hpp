#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace braidops {

/// Exact element p + q*z of Q(z), where z is a primitive sixth root of unity (z^2 = z - 1).
///
/// Both parts are GMP rationals kept in lowest terms, so the pair (p, q) is a canonical
/// representation and equality is structural. The rationals are the elements with q = 0.
///
/// Text form: "p/q" for rationals, "r/sz" for pure z multiples and "p/q+r/sz" otherwise,
/// e.g. "3", "-1/2", "1z", "2-1/3z". `parse(to_string(x)) == x` and printing a parsed
/// canonical string reproduces it byte for byte.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(long value) : rat_(value) {}  // NOLINT: implicit from integers is intended
    explicit FieldElement(mpq_class rat, mpq_class zeta = 0);

    static FieldElement zeta();
    static FieldElement zeta_bar();  // 1 - z, the other root of t^2 - t + 1
    static FieldElement rational(long num, long den);
    static FieldElement parse(std::string_view text);

    const mpq_class& rat_part() const { return rat_; }
    const mpq_class& zeta_part() const { return zeta_; }

    bool is_zero() const { return sgn(rat_) == 0 && sgn(zeta_) == 0; }
    bool is_one() const { return rat_ == 1 && sgn(zeta_) == 0; }
    bool is_rational() const { return sgn(zeta_) == 0; }

    /// Throws DivisionByZero on zero.
    FieldElement inverse() const;

    std::string to_string() const;

    FieldElement& operator+=(const FieldElement& other);
    FieldElement& operator-=(const FieldElement& other);
    FieldElement& operator*=(const FieldElement& other);
    FieldElement& operator/=(const FieldElement& other);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.rat_ == b.rat_ && a.zeta_ == b.zeta_;
    }

private:
    void canonicalize();

    mpq_class rat_{0};
    mpq_class zeta_{0};
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace braidops
