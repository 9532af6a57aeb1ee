#ifndef DMV_EVAL_HPP
#define DMV_EVAL_HPP

#include <random>
#include <stdexcept>
#include <vector>

#include "dmv/algebra.hpp"
#include "dmv/formula.hpp"

namespace dmv {

/// A rational point of the cube; one coordinate per variable index.
using Valuation = std::vector<UnitRational>;

namespace detail {

template <class F>
const UnitRational& coord(const F& phi, const Valuation& v) {
    if (phi.var_index() >= v.size())
        throw std::out_of_range("valuation does not cover variable x" +
                                std::to_string(phi.var_index()));
    return v[phi.var_index()];
}

}  // namespace detail

/// e(φ→ψ) = e(φ)* ⊕ e(ψ); e(¬φ) = e(φ)*; e(∇_r φ) = (r · e(φ)*)*.
inline UnitRational eval_ql(const Formula& phi, const Valuation& v) {
    switch (phi.kind()) {
        case NodeKind::Var: return detail::coord(phi, v);
        case NodeKind::Neg: return mv_neg(eval_ql(*phi.child(), v));
        case NodeKind::Implies:
            return mv_add(mv_neg(eval_ql(*phi.lhs(), v)), eval_ql(*phi.rhs(), v));
        case NodeKind::Nabla:
            return mv_neg(scalar(phi.nabla_scalar(), mv_neg(eval_ql(*phi.child(), v))));
        case NodeKind::DeltaN: break;
    }
    throw std::logic_error("invalid node in ql formula");
}

/// As above with e(δ_n φ) = e(φ) / n.
inline UnitRational eval_ratluk(const DFormula& phi, const Valuation& v) {
    switch (phi.kind()) {
        case NodeKind::Var: return detail::coord(phi, v);
        case NodeKind::Neg: return mv_neg(eval_ratluk(*phi.child(), v));
        case NodeKind::Implies:
            return mv_add(mv_neg(eval_ratluk(*phi.lhs(), v)), eval_ratluk(*phi.rhs(), v));
        case NodeKind::DeltaN:
            return delta(phi.delta_divisor(), eval_ratluk(*phi.child(), v));
        case NodeKind::Nabla: break;
    }
    throw std::logic_error("invalid node in ratluk formula");
}

inline UnitRational eval_ql(const Formula::Ptr& phi, const Valuation& v) { return eval_ql(*phi, v); }
inline UnitRational eval_ratluk(const DFormula::Ptr& phi, const Valuation& v) { return eval_ratluk(*phi, v); }

/// Deterministic seeded rational generator, denominator <= max_den.
/// Raw mt19937_64 output is reduced by hand so results are portable.
class RationalRng {
public:
    explicit RationalRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_index(std::uint64_t bound) {  // uniform-ish in [0, bound)
        return gen_() % bound;
    }

    UnitRational unit_rational(unsigned long max_den) {
        if (max_den == 0) throw std::domain_error("max_den must be >= 1");
        unsigned long d = 1 + static_cast<unsigned long>(next_index(max_den));
        unsigned long p = static_cast<unsigned long>(next_index(d + 1));
        return UnitRational(Rational(p, d));
    }

    Valuation point(std::size_t dim, unsigned long max_den) {
        Valuation v;
        v.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) v.push_back(unit_rational(max_den));
        return v;
    }

private:
    std::mt19937_64 gen_;
};

inline Valuation random_rational_point(std::size_t dim, unsigned long max_den, std::uint64_t seed) {
    return RationalRng(seed).point(dim, max_den);
}

}  // namespace dmv

#endif
