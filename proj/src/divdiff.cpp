#include "braidops/divdiff.hpp"

#include "braidops/error.hpp"

namespace braidops {

MultiPoly ddiff(const MultiPoly& f, int i) {
    MultiPoly numerator = f - swap_vars(f, i);
    // The numerator is antisymmetric, so a remainder here means corrupted arithmetic.
    return divide_by_difference(numerator, i, i + 1);
}

SlotPoly ddiff(const SlotPoly& p) { return SlotPoly(ddiff(p.poly(), 1)); }

DPositiveSplit dpositive_split(const SlotPoly& p) {
    MultiPoly sym(2);
    MultiPoly pos(2);
    for (const auto& [e, c] : p.terms()) {
        const int r = e[0];
        const int s = e[1];
        if (r > s) {
            pos.add_term(e, c);
        } else if (r == s) {
            sym.add_term(e, c);
        } else {
            // u^r v^s = (u^r v^s + u^s v^r) - u^s v^r
            sym.add_term({r, s}, c);
            sym.add_term({s, r}, c);
            pos.add_term({s, r}, -c);
        }
    }
    return {SlotPoly(std::move(sym)), SlotPoly(std::move(pos))};
}

bool is_dpositive(const SlotPoly& p) {
    for (const auto& [e, c] : p.terms()) {
        if (e[0] <= e[1]) return false;
    }
    return true;
}

SlotPoly dpositive_lift(const SlotPoly& phi) {
    if (!phi.is_symmetric()) throw Error("dpositive_lift: input " + phi.to_string() + " is not symmetric");
    MultiPoly rest = phi.poly();
    MultiPoly lift(2);
    while (!rest.is_zero()) {
        // Leading grlex term has the largest u-exponent r in the top degree d = r + s, and r >= s.
        const Exponent lead = rest.terms().begin()->first;
        const FieldElement a = rest.terms().begin()->second;
        const int r = lead[0];
        const int d = lead[0] + lead[1];
        // d(u^{r+1} v^{d-r}) = sum_{s=d-r}^{r} u^s v^{d-s}
        lift.add_term({r + 1, d - r}, a);
        for (int s = d - r; s <= r; ++s) rest.add_term({s, d - s}, -a);
    }
    return SlotPoly(std::move(lift));
}

}  // namespace braidops
