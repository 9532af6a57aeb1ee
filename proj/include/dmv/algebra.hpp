#ifndef DMV_ALGEBRA_HPP
#define DMV_ALGEBRA_HPP

#include <stdexcept>

#include "dmv/rational.hpp"

// Standard DMV-algebra operations on [0,1] ∩ ℚ.

namespace dmv {

/// x ⊕ y = min(x + y, 1)
inline UnitRational mv_add(const UnitRational& x, const UnitRational& y) {
    Rational s = x.value() + y.value();
    if (s > 1) s = 1;
    return UnitRational(std::move(s));
}

/// x* = 1 - x
inline UnitRational mv_neg(const UnitRational& x) {
    return UnitRational(1 - x.value());
}

/// x ⊙ y = (x* ⊕ y*)* = max(x + y - 1, 0)
inline UnitRational mv_mul_trunc(const UnitRational& x, const UnitRational& y) {
    return mv_neg(mv_add(mv_neg(x), mv_neg(y)));
}

/// x ∨ y = (x ⊙ y*) ⊕ y
inline UnitRational mv_join(const UnitRational& x, const UnitRational& y) {
    return mv_add(mv_mul_trunc(x, mv_neg(y)), y);
}

/// x ∧ y = (x ⊕ y*) ⊙ y
inline UnitRational mv_meet(const UnitRational& x, const UnitRational& y) {
    return mv_mul_trunc(mv_add(x, mv_neg(y)), y);
}

/// δ_n x = x / n, n ≥ 1
inline UnitRational delta(unsigned long n, const UnitRational& x) {
    if (n == 0) throw std::domain_error("delta subscript must be >= 1");
    return UnitRational(x.value() / Int(n));
}

/// Scalar action r · x of [0,1]_Q on itself: the rational product.
inline UnitRational scalar(const UnitRational& r, const UnitRational& x) {
    return UnitRational(r.value() * x.value());
}

/// n-fold truncated sum x ⊕ ... ⊕ x.
inline UnitRational mv_nfold_add(unsigned long n, const UnitRational& x) {
    Rational s = x.value() * Int(n);
    if (s > 1) s = 1;
    return UnitRational(std::move(s));
}

}  // namespace dmv

#endif
