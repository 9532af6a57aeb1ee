#ifndef DMV_DECISION_HPP
#define DMV_DECISION_HPP

#include <optional>

#include "dmv/eval.hpp"
#include "dmv/pwl.hpp"

// Exact decision procedures over [0,1] ∩ ℚ by PWL compilation. The compiled
// function is continuous with rational breakpoints, so validity over the
// rational points and over the whole cube coincide, and extrema are
// attained at rational vertices.

namespace dmv {

struct Verdict {
    bool answer;
    std::optional<Valuation> witness;  // countermodel, or satisfying point

    explicit operator bool() const { return answer; }
};

namespace detail {

inline Verdict tautology_verdict(const PwlFunc& f) {
    auto [lo, at] = pwl_min(f);
    if (lo == UnitRational::one()) return {true, std::nullopt};
    return {false, std::move(at)};
}

inline Verdict satisfiable_verdict(const PwlFunc& f) {
    auto [hi, at] = pwl_max(f);
    if (hi == UnitRational::one()) return {true, std::move(at)};
    return {false, std::nullopt};
}

}  // namespace detail

inline Verdict is_tautology(const Formula::Ptr& phi) {
    return detail::tautology_verdict(compile_ql(phi));
}
inline Verdict is_tautology(const DFormula::Ptr& phi) {
    return detail::tautology_verdict(compile_ratluk(phi));
}

inline Verdict is_satisfiable(const Formula::Ptr& phi) {
    return detail::satisfiable_verdict(compile_ql(phi));
}
inline Verdict is_satisfiable(const DFormula::Ptr& phi) {
    return detail::satisfiable_verdict(compile_ratluk(phi));
}

namespace detail {

// Lindenbaum-Tarski equality [φ] = [ψ]; a witness point separates the two.
inline Verdict equivalence_verdict(PwlFunc f, PwlFunc g) {
    PwlFunc sym = pwl_plus(pwl_minus_trunc(f, g), pwl_minus_trunc(g, f));
    auto [hi, at] = pwl_max(sym);
    if (hi == UnitRational::zero()) return {true, std::nullopt};
    return {false, std::move(at)};
}

inline std::size_t common_dim(std::size_t a, std::size_t b) {
    std::size_t d = std::max(a, b);
    return d ? d : 1;
}

}  // namespace detail

inline Verdict equivalent(const Formula::Ptr& phi, const Formula::Ptr& psi) {
    std::size_t d = detail::common_dim(phi->dimension(), psi->dimension());
    return detail::equivalence_verdict(compile_ql(*phi, d), compile_ql(*psi, d));
}
inline Verdict equivalent(const DFormula::Ptr& phi, const DFormula::Ptr& psi) {
    std::size_t d = detail::common_dim(phi->dimension(), psi->dimension());
    return detail::equivalence_verdict(compile_ratluk(*phi, d), compile_ratluk(*psi, d));
}

}  // namespace dmv

#endif
