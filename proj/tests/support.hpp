#ifndef DMV_TESTS_SUPPORT_HPP
#define DMV_TESTS_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include <dmv/dmv.hpp>

// Seeded generators and axiom-schema builders shared by the unit and
// acceptance suites.

namespace dmvtest {

using namespace dmv;

// ---- random formulas -------------------------------------------------

struct GenConfig {
    std::size_t dim = 2;
    std::size_t max_depth = 4;
    unsigned long max_den = 6;      // nabla subscripts
    unsigned long max_divisor = 4;  // delta subscripts
};

inline Formula::Ptr random_ql(RationalRng& rng, const GenConfig& cfg, std::size_t depth = 0) {
    auto var = [&] { return Formula::var(rng.next_index(cfg.dim)); };
    if (depth >= cfg.max_depth) return var();
    switch (rng.next_index(10)) {
        case 0:
        case 1: return var();
        case 2:
        case 3: return Formula::neg(random_ql(rng, cfg, depth + 1));
        case 4:
        case 5:
            return Formula::implies(random_ql(rng, cfg, depth + 1), random_ql(rng, cfg, depth + 1));
        case 6:
        case 7: return Formula::nabla(rng.unit_rational(cfg.max_den), random_ql(rng, cfg, depth + 1));
        case 8: return Formula::plus(random_ql(rng, cfg, depth + 1), random_ql(rng, cfg, depth + 1));
        default:
            return Formula::times(random_ql(rng, cfg, depth + 1), random_ql(rng, cfg, depth + 1));
    }
}

inline DFormula::Ptr random_ratluk(RationalRng& rng, const GenConfig& cfg, std::size_t depth = 0) {
    auto var = [&] { return DFormula::var(rng.next_index(cfg.dim)); };
    if (depth >= cfg.max_depth) return var();
    switch (rng.next_index(10)) {
        case 0:
        case 1: return var();
        case 2:
        case 3: return DFormula::neg(random_ratluk(rng, cfg, depth + 1));
        case 4:
        case 5:
            return DFormula::implies(random_ratluk(rng, cfg, depth + 1),
                                     random_ratluk(rng, cfg, depth + 1));
        case 6:
        case 7:
            return DFormula::delta_n(1 + rng.next_index(cfg.max_divisor),
                                     random_ratluk(rng, cfg, depth + 1));
        case 8:
            return DFormula::plus(random_ratluk(rng, cfg, depth + 1),
                                  random_ratluk(rng, cfg, depth + 1));
        default:
            return DFormula::times(random_ratluk(rng, cfg, depth + 1),
                                   random_ratluk(rng, cfg, depth + 1));
    }
}

// ---- axiom schemata ---------------------------------------------------

// (L1) φ → (ψ → φ)
template <class F>
typename F::Ptr axiom_l1(typename F::Ptr phi, typename F::Ptr psi) {
    return F::implies(phi, F::implies(psi, phi));
}
// (L2) (φ → ψ) → ((ψ → χ) → (φ → χ))
template <class F>
typename F::Ptr axiom_l2(typename F::Ptr phi, typename F::Ptr psi, typename F::Ptr chi) {
    return F::implies(F::implies(phi, psi), F::implies(F::implies(psi, chi), F::implies(phi, chi)));
}
// (L3) (φ ∨ ψ) → (ψ ∨ φ)
template <class F>
typename F::Ptr axiom_l3(typename F::Ptr phi, typename F::Ptr psi) {
    return F::implies(F::join(phi, psi), F::join(psi, phi));
}
// (L4) (¬ψ → ¬φ) → (φ → ψ)
template <class F>
typename F::Ptr axiom_l4(typename F::Ptr phi, typename F::Ptr psi) {
    return F::implies(F::implies(F::neg(psi), F::neg(phi)), F::implies(phi, psi));
}

// (Q1) ∇_r(φ → ψ) ↔ (∇_r φ → ∇_r ψ)
inline Formula::Ptr axiom_q1(const UnitRational& r, Formula::Ptr phi, Formula::Ptr psi) {
    return Formula::iff(Formula::nabla(r, Formula::implies(phi, psi)),
                        Formula::implies(Formula::nabla(r, phi), Formula::nabla(r, psi)));
}
// (Q2) ∇_{r⊙q*} φ ↔ (∇_q φ → ∇_r φ); the subscript is computed exactly.
inline Formula::Ptr axiom_q2(const UnitRational& r, const UnitRational& q, Formula::Ptr phi) {
    return Formula::iff(Formula::nabla(mv_mul_trunc(r, mv_neg(q)), phi),
                        Formula::implies(Formula::nabla(q, phi), Formula::nabla(r, phi)));
}
// (Q3) ∇_r(∇_q φ) ↔ ∇_{r·q} φ
inline Formula::Ptr axiom_q3(const UnitRational& r, const UnitRational& q, Formula::Ptr phi) {
    return Formula::iff(Formula::nabla(r, Formula::nabla(q, phi)),
                        Formula::nabla(scalar(r, q), phi));
}
// (Q4) ∇_1 φ ↔ φ
inline Formula::Ptr axiom_q4(Formula::Ptr phi) {
    return Formula::iff(Formula::nabla(UnitRational::one(), phi), phi);
}

// (D1) δ_n φ ⊕ ... ⊕ δ_n φ (n times) → φ
inline DFormula::Ptr axiom_d1(unsigned long n, DFormula::Ptr phi) {
    return DFormula::implies(DFormula::plus_fold(n, DFormula::delta_n(n, phi)), phi);
}
// (D2) φ → δ_n φ ⊕ ... ⊕ δ_n φ (n times)
inline DFormula::Ptr axiom_d2(unsigned long n, DFormula::Ptr phi) {
    return DFormula::implies(phi, DFormula::plus_fold(n, DFormula::delta_n(n, phi)));
}
// (D3) ¬δ_n φ ⊕ ¬(δ_n φ ⊕ ... ⊕ δ_n φ) ((n-1)-fold)
inline DFormula::Ptr axiom_d3(unsigned long n, DFormula::Ptr phi) {
    auto d = DFormula::delta_n(n, phi);
    return DFormula::plus(DFormula::neg(d), DFormula::neg(DFormula::plus_fold(n - 1, d)));
}

// ---- pwl invariant checks ----------------------------------------------

/// Coverage (sampled points + vertices), pairwise interior disjointness,
/// continuity on shared boundaries, and vertex range bounds.
inline bool check_pwl_invariants(const PwlFunc& f, std::uint64_t seed = 1, int sample_points = 50) {
    const std::size_t n = f.dim();
    // range at vertices
    for (const auto& c : f.cells())
        for (const auto& v : c.vertices()) {
            Rational val = c.piece.eval(v);
            if (val < 0 || val > 1) return false;
        }
    // disjoint interiors: pairwise intersections must not be full-dimensional
    for (std::size_t i = 0; i < f.cells().size(); ++i)
        for (std::size_t j = i + 1; j < f.cells().size(); ++j) {
            auto overlap = intersect(f.cells()[i].poly, f.cells()[j].poly, n);
            if (!overlap) continue;
            if (overlap->dim() == static_cast<long>(n)) return false;
            // continuity: pieces agree on the shared boundary's vertices
            for (const auto& v : overlap->vertices)
                if (f.cells()[i].piece.eval(v) != f.cells()[j].piece.eval(v)) return false;
        }
    // coverage at sampled rational points and at every vertex
    RationalRng rng(seed);
    std::vector<Vec> probes;
    for (int k = 0; k < sample_points; ++k) probes.push_back(to_vec(rng.point(n, 12)));
    for (const auto& c : f.cells())
        for (const auto& v : c.vertices()) probes.push_back(v);
    for (const auto& x : probes) {
        bool covered = false;
        for (const auto& c : f.cells())
            if (c.poly.contains(x)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

}  // namespace dmvtest

#endif
