#include "braidops/field.hpp"

#include <ostream>
#include <regex>

#include "braidops/error.hpp"

namespace braidops {

namespace {

mpq_class parse_rational(std::string_view text) {
    static const std::regex pattern(R"(-?[0-9]+(/[0-9]+)?)");
    std::string s(text);
    if (!std::regex_match(s, pattern)) {
        throw ParseError("malformed rational '" + s + "'");
    }
    auto slash = s.find('/');
    if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0) {
        throw ParseError("zero denominator in '" + s + "'");
    }
    mpq_class q(s);
    q.canonicalize();
    return q;
}

}  // namespace

FieldElement::FieldElement(mpq_class rat, mpq_class zeta) : rat_(std::move(rat)), zeta_(std::move(zeta)) {
    canonicalize();
}

FieldElement FieldElement::zeta() { return FieldElement(mpq_class(0), mpq_class(1)); }

FieldElement FieldElement::zeta_bar() { return FieldElement(mpq_class(1), mpq_class(-1)); }

FieldElement FieldElement::rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    return FieldElement(mpq_class(num, den));
}

void FieldElement::canonicalize() {
    rat_.canonicalize();
    zeta_.canonicalize();
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
    rat_ += other.rat_;
    zeta_ += other.zeta_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
    rat_ -= other.rat_;
    zeta_ -= other.zeta_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
    if (is_rational() && other.is_rational()) {
        rat_ *= other.rat_;
        return *this;
    }
    // (p1 + q1 z)(p2 + q2 z) with z^2 = z - 1
    const mpq_class qq = zeta_ * other.zeta_;
    mpq_class rat = rat_ * other.rat_ - qq;
    mpq_class zeta = rat_ * other.zeta_ + zeta_ * other.rat_ + qq;
    rat_ = std::move(rat);
    zeta_ = std::move(zeta);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) { return *this *= other.inverse(); }

FieldElement FieldElement::operator-() const {
    FieldElement r(*this);
    r.rat_ = -r.rat_;
    r.zeta_ = -r.zeta_;
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    if (is_rational()) return FieldElement(1 / rat_);
    // N(p + qz) = p^2 + pq + q^2, conjugate (p + q) - qz
    const mpq_class norm = rat_ * rat_ + rat_ * zeta_ + zeta_ * zeta_;
    return FieldElement((rat_ + zeta_) / norm, -zeta_ / norm);
}

std::string FieldElement::to_string() const {
    if (sgn(zeta_) == 0) return rat_.get_str();
    if (sgn(rat_) == 0) return zeta_.get_str() + "z";
    return rat_.get_str() + (sgn(zeta_) > 0 ? "+" : "") + zeta_.get_str() + "z";
}

FieldElement FieldElement::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s.push_back(c);
    }
    if (s.empty()) throw ParseError("empty field element");
    if (s.back() != 'z') return FieldElement(parse_rational(s));

    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    std::string rat_text = split == std::string::npos ? "" : body.substr(0, split);
    std::string zeta_text = split == std::string::npos ? body : body.substr(split);
    if (!zeta_text.empty() && zeta_text.front() == '+') zeta_text.erase(0, 1);

    mpq_class zeta_coeff;
    if (zeta_text.empty()) {
        zeta_coeff = 1;
    } else if (zeta_text == "-") {
        zeta_coeff = -1;
    } else {
        zeta_coeff = parse_rational(zeta_text);
    }
    mpq_class rat = rat_text.empty() ? mpq_class(0) : parse_rational(rat_text);
    return FieldElement(std::move(rat), std::move(zeta_coeff));
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace braidops
