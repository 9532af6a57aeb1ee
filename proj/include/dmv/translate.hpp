#ifndef DMV_TRANSLATE_HPP
#define DMV_TRANSLATE_HPP

#include "dmv/formula.hpp"

// The two faithful translations between the scalar-connective language and
// Rational Lukasiewicz: δ_n ↦ Δ_{1/n}, and Δ_{m/n} ↦ m-fold ⊕ of δ_n.

namespace dmv {

/// Homomorphic on ¬, →, Var; replaces δ_n with Δ_{1/n} = ¬∇_{1/n}¬.
inline Formula::Ptr translate_i1(const DFormula::Ptr& phi) {
    switch (phi->kind()) {
        case NodeKind::Var: return Formula::var(phi->var_index());
        case NodeKind::Neg: return Formula::neg(translate_i1(phi->child()));
        case NodeKind::Implies:
            return Formula::implies(translate_i1(phi->lhs()), translate_i1(phi->rhs()));
        case NodeKind::DeltaN:
            return Formula::delta_r(UnitRational(Rational(1, Int(phi->delta_divisor()))),
                                    translate_i1(phi->child()));
        case NodeKind::Nabla: break;
    }
    throw std::logic_error("invalid node in ratluk formula");
}

namespace detail {

// Δ_{m/n} φ (lowest terms) ↦ the m-fold ⊕ of δ_n φ. The m = 0 case is the
// empty sum, rendered as the constant-zero term φ ⊙ ¬φ; m = n = 1 is φ.
inline DFormula::Ptr i2_delta(const UnitRational& r, DFormula::Ptr phi) {
    unsigned long m = static_cast<unsigned long>(r.num());
    unsigned long n = static_cast<unsigned long>(r.den());
    if (m == 0) return DFormula::plus_fold(0, std::move(phi));
    if (m == 1 && n == 1) return phi;
    return DFormula::plus_fold(m, DFormula::delta_n(n, std::move(phi)));
}

}  // namespace detail

/// Rewrites ∇_r as ¬Δ_r¬ and expands Δ_{m/n}; homomorphic elsewhere.
inline DFormula::Ptr translate_i2(const Formula::Ptr& phi) {
    switch (phi->kind()) {
        case NodeKind::Var: return DFormula::var(phi->var_index());
        case NodeKind::Neg: return DFormula::neg(translate_i2(phi->child()));
        case NodeKind::Implies:
            return DFormula::implies(translate_i2(phi->lhs()), translate_i2(phi->rhs()));
        case NodeKind::Nabla:
            return DFormula::neg(detail::i2_delta(phi->nabla_scalar(),
                                                  DFormula::neg(translate_i2(phi->child()))));
        case NodeKind::DeltaN: break;
    }
    throw std::logic_error("invalid node in ql formula");
}

}  // namespace dmv

#endif
