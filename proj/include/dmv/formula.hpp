#ifndef DMV_FORMULA_HPP
#define DMV_FORMULA_HPP

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dmv/rational.hpp"

// ASTs for the two languages. Formula is the scalar-connective language
// (primitive nodes: Var, Neg, Implies, Nabla_r); DFormula is Rational
// Lukasiewicz (primitive nodes: Var, Neg, Implies, DeltaN). Derived
// connectives desugar to primitive trees at construction time.

namespace dmv {

enum class NodeKind { Var, Neg, Implies, Nabla, DeltaN };

namespace detail {

template <class Derived>
struct FormulaNode {
    NodeKind kind;
    std::size_t var = 0;                      // Var
    std::shared_ptr<const Derived> left;      // Neg/Nabla/DeltaN child, Implies lhs
    std::shared_ptr<const Derived> right;     // Implies rhs
    UnitRational scalar;                      // Nabla subscript
    unsigned long divisor = 0;                // DeltaN subscript
};

}  // namespace detail

template <class Derived>
class FormulaBase {
public:
    using Ptr = std::shared_ptr<const Derived>;

    NodeKind kind() const { return node_.kind; }
    std::size_t var_index() const { return node_.var; }
    const Ptr& child() const { return node_.left; }
    const Ptr& lhs() const { return node_.left; }
    const Ptr& rhs() const { return node_.right; }
    const UnitRational& nabla_scalar() const { return node_.scalar; }
    unsigned long delta_divisor() const { return node_.divisor; }

    static Ptr var(std::size_t i) {
        auto n = make();
        n->node_.kind = NodeKind::Var;
        n->node_.var = i;
        return n;
    }
    static Ptr neg(Ptr phi) {
        auto n = make();
        n->node_.kind = NodeKind::Neg;
        n->node_.left = std::move(phi);
        return n;
    }
    static Ptr implies(Ptr phi, Ptr psi) {
        auto n = make();
        n->node_.kind = NodeKind::Implies;
        n->node_.left = std::move(phi);
        n->node_.right = std::move(psi);
        return n;
    }

    // Derived connectives (primitive trees).
    static Ptr plus(Ptr phi, Ptr psi) {          // φ ⊕ ψ := ¬φ → ψ
        return implies(neg(std::move(phi)), std::move(psi));
    }
    static Ptr times(Ptr phi, Ptr psi) {         // φ ⊙ ψ := ¬(¬φ ⊕ ¬ψ)
        return neg(plus(neg(std::move(phi)), neg(std::move(psi))));
    }
    static Ptr join(Ptr phi, Ptr psi) {          // φ ∨ ψ := (φ → ψ) → ψ
        auto i = implies(std::move(phi), psi);
        return implies(std::move(i), std::move(psi));
    }
    static Ptr meet(Ptr phi, Ptr psi) {          // φ ∧ ψ := ¬(¬φ ∨ ¬ψ)
        return neg(join(neg(std::move(phi)), neg(std::move(psi))));
    }
    static Ptr iff(Ptr phi, Ptr psi) {           // φ ↔ ψ := (φ→ψ) ∧ (ψ→φ)
        return meet(implies(phi, psi), implies(psi, phi));
    }

    /// 1 + max variable index (0 for closed-free formulas with no variables).
    std::size_t dimension() const {
        switch (node_.kind) {
            case NodeKind::Var: return node_.var + 1;
            case NodeKind::Neg:
            case NodeKind::Nabla:
            case NodeKind::DeltaN: return node_.left->dimension();
            case NodeKind::Implies:
                return std::max(node_.left->dimension(), node_.right->dimension());
        }
        return 0;
    }

protected:
    detail::FormulaNode<Derived> node_;
    static std::shared_ptr<Derived> make() { return std::make_shared<Derived>(); }
};

/// Language with scalar connectives ∇_r (r ∈ [0,1] ∩ ℚ); Δ_r := ¬∇_r¬.
class Formula : public FormulaBase<Formula> {
public:
    static Ptr nabla(UnitRational r, Ptr phi) {
        auto n = make();
        n->node_.kind = NodeKind::Nabla;
        n->node_.scalar = std::move(r);
        n->node_.left = std::move(phi);
        return n;
    }
    static Ptr delta_r(UnitRational r, Ptr phi) {   // Δ_r φ := ¬∇_r¬φ
        return neg(nabla(std::move(r), neg(std::move(phi))));
    }
};

/// Rational Lukasiewicz language with division connectives δ_n (n ≥ 1).
class DFormula : public FormulaBase<DFormula> {
public:
    static Ptr delta_n(unsigned long n, Ptr phi) {
        if (n == 0) throw std::domain_error("delta subscript must be >= 1");
        auto node = make();
        node->node_.kind = NodeKind::DeltaN;
        node->node_.divisor = n;
        node->node_.left = std::move(phi);
        return node;
    }
    /// m-fold truncated sum φ ⊕ ... ⊕ φ; the 0-fold sum is φ ⊙ ¬φ (constant 0).
    static Ptr plus_fold(unsigned long m, Ptr phi) {
        if (m == 0) return times(phi, neg(phi));
        Ptr acc = phi;
        for (unsigned long i = 1; i < m; ++i) acc = plus(std::move(acc), phi);
        return acc;
    }
};

namespace detail {

// Printing uses only primitive nodes; precedence: unary > -> (right assoc).
template <class F>
void print_rec(std::ostream& os, const F& phi, bool parenthesize_implies) {
    switch (phi.kind()) {
        case NodeKind::Var:
            os << 'x' << phi.var_index();
            return;
        case NodeKind::Neg:
            os << '~';
            print_rec(os, *phi.child(), true);
            return;
        case NodeKind::Nabla:
            os << "nabla(" << phi.nabla_scalar() << ") ";
            print_rec(os, *phi.child(), true);
            return;
        case NodeKind::DeltaN:
            os << "delta(" << phi.delta_divisor() << ") ";
            print_rec(os, *phi.child(), true);
            return;
        case NodeKind::Implies:
            if (parenthesize_implies) os << '(';
            print_rec(os, *phi.lhs(), true);
            os << " -> ";
            print_rec(os, *phi.rhs(), false);
            if (parenthesize_implies) os << ')';
            return;
    }
}

}  // namespace detail

template <class F>
std::string print(const std::shared_ptr<const F>& phi) {
    std::ostringstream os;
    detail::print_rec(os, *phi, false);
    return os.str();
}

/// Structural equality of primitive ASTs.
template <class F>
bool ast_equal(const std::shared_ptr<const F>& a, const std::shared_ptr<const F>& b) {
    if (a.get() == b.get()) return true;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case NodeKind::Var: return a->var_index() == b->var_index();
        case NodeKind::Neg: return ast_equal(a->child(), b->child());
        case NodeKind::Nabla:
            return a->nabla_scalar() == b->nabla_scalar() && ast_equal(a->child(), b->child());
        case NodeKind::DeltaN:
            return a->delta_divisor() == b->delta_divisor() && ast_equal(a->child(), b->child());
        case NodeKind::Implies:
            return ast_equal(a->lhs(), b->lhs()) && ast_equal(a->rhs(), b->rhs());
    }
    return false;
}

}  // namespace dmv

#endif
