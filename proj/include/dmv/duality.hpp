#ifndef DMV_DUALITY_HPP
#define DMV_DUALITY_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "dmv/polyhedron.hpp"
#include "dmv/polytope.hpp"
#include "dmv/pwl.hpp"

// The V/I Galois machinery: zerosets, vanishing ideals, principal-ideal
// membership via zeroset inclusion, the zeroset-realizing element of a
// polyhedron, quotients-as-restrictions, and the integer-coefficient
// generator replacement.

namespace dmv {

/// V(f) = f^{-1}(0), always a rational polyhedron. Pieces cut out of cells
/// by the affine equation are kept even when lower-dimensional.
inline RatPolyhedron zeroset(const PwlFunc& f) {
    const std::size_t n = f.dim();
    std::vector<Polytope> pieces;
    for (const auto& c : f.cells()) {
        bool all_zero = true, any_zero = false;
        for (const auto& v : c.vertices()) {
            if (c.piece.eval(v) == 0) any_zero = true;
            else all_zero = false;
        }
        if (!any_zero) continue;  // affine piece nonnegative, so > 0 throughout
        if (all_zero) {
            pieces.push_back(c.poly);
            continue;
        }
        HRep h = c.h_rep();
        Vec neg;
        neg.reserve(n);
        for (const auto& a : c.piece.coeffs) neg.push_back(-a);
        h.push_back({c.piece.coeffs, -c.piece.constant});   // piece <= 0
        h.push_back({std::move(neg), c.piece.constant});    // piece >= 0
        if (auto p = make_polytope(std::move(h), n)) pieces.push_back(std::move(*p));
    }
    return RatPolyhedron(n, std::move(pieces));
}

namespace detail {

// Exact maximum of f over one convex polytope: refine against f's cells and
// take vertex maxima. Degenerate overlaps count; they carry the extrema of
// lower-dimensional pieces.
inline std::optional<std::pair<Rational, Vec>> max_over_polytope(const PwlFunc& f,
                                                                 const Polytope& piece) {
    const std::size_t n = f.dim();
    std::optional<std::pair<Rational, Vec>> best;
    for (const auto& c : f.cells()) {
        auto overlap = intersect(c.poly, piece, n);
        if (!overlap) continue;
        for (const auto& v : overlap->vertices) {
            Rational val = c.piece.eval(v);
            if (!best || val > best->first) best = {std::move(val), v};
        }
    }
    return best;
}

}  // namespace detail

/// f ∈ I(C): f vanishes identically on C.
inline bool vanishing_ideal_member(const PwlFunc& f, const RatPolyhedron& c) {
    if (f.dim() != c.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    for (const auto& piece : c.pieces()) {
        auto m = detail::max_over_polytope(f, piece);
        if (m && m->first != 0) return false;
    }
    return true;
}

/// g ∈ (f] iff V(f) ⊆ V(g).
inline bool ideal_member(const PwlFunc& g, const PwlFunc& f) {
    if (f.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
    return vanishing_ideal_member(g, zeroset(f));
}

/// min(max(a·x - b, 0), 1) as a PwlFunc on [0,1]^n.
inline PwlFunc truncated_affine(std::size_t n, const Vec& a, const Rational& b) {
    AffinePiece lin{a, -b};
    auto cube = *make_polytope(cube_hrep(n), n);
    std::vector<Cell> low;
    // split at lin = 0, then the upper part again at lin = 1
    detail::emit_split(low, cube, lin, Rational(0), constant_piece(n, Rational(0)), lin, n);
    std::vector<Cell> out;
    for (auto& cell : low) {
        if (cell.piece == constant_piece(n, Rational(0))) {
            out.push_back(std::move(cell));
            continue;
        }
        detail::emit_split(out, cell.poly, cell.piece, Rational(1), cell.piece,
                           constant_piece(n, Rational(1)), n);
    }
    return PwlFunc(n, std::move(out));
}

/// An element whose zeroset is exactly C: per convex piece, the truncated
/// sum of the constraint violations; across pieces, the pointwise meet.
/// distance_formula(∅) = constant 1, so V stays total.
inline PwlFunc distance_formula(const RatPolyhedron& c) {
    const std::size_t n = c.ambient_dim();
    if (c.is_empty()) return pwl_constant(n, UnitRational::one());
    std::optional<PwlFunc> acc;
    for (const auto& piece : c.pieces()) {
        std::optional<PwlFunc> g;
        for (const auto& hs : piece.h_rep) {
            PwlFunc t = truncated_affine(n, hs.a, hs.b);
            g = g ? pwl_plus(*g, t) : std::move(t);
        }
        if (!g) g = pwl_constant(n, UnitRational::zero());  // piece with empty H-rep: whole cube
        acc = acc ? pwl_meet(*acc, *g) : std::move(*g);
    }
    return std::move(*acc);
}

/// V(I(C)) realized through a single element with zeroset C.
inline RatPolyhedron v_of_i_closure(const RatPolyhedron& c) {
    return zeroset(distance_formula(c));
}

/// Generator replacement: b = min(m·f, 1) with m the lcm of all coefficient
/// denominators. b has integer coefficients, dominates f, and V(b) = V(f),
/// so (f] = (b].
inline PwlFunc mv_approximant(const PwlFunc& f) {
    Int m = 1;
    for (const auto& c : f.cells()) {
        for (const auto& a : c.piece.coeffs) m = lcm(m, denominator(a));
        m = lcm(m, denominator(c.piece.constant));
    }
    if (m == 1) return f;
    return pwl_nfold_plus(m.convert_to<unsigned long>(), f);
}

inline bool has_integer_coefficients(const PwlFunc& f) {
    for (const auto& c : f.cells()) {
        for (const auto& a : c.piece.coeffs)
            if (denominator(a) != 1) return false;
        if (denominator(c.piece.constant) != 1) return false;
    }
    return true;
}

/// Finitely presented algebra DMV_n/(f], elements realized as restrictions
/// of free-algebra elements to V(f).
struct Presentation {
    std::size_t generators;
    PwlFunc generator;

    RatPolyhedron support() const { return zeroset(generator); }
};

struct QuotientElement {
    PwlFunc rep;
    const Presentation* presentation;
};

/// Equality mod the ideal: the symmetric difference vanishes on the
/// generator's zeroset.
inline bool quotient_equal(const QuotientElement& a, const QuotientElement& b) {
    if (a.presentation != b.presentation) throw std::invalid_argument("presentation mismatch");
    PwlFunc sym = pwl_plus(pwl_minus_trunc(a.rep, b.rep), pwl_minus_trunc(b.rep, a.rep));
    return vanishing_ideal_member(sym, a.presentation->support());
}

/// The divisible hull of MV_n/(f] is DMV_n/(f] over the same generator;
/// only the signature grows (δ_n and rational scalars become available).
inline Presentation divisible_hull(const Presentation& mv_presentation) {
    if (!has_integer_coefficients(mv_presentation.generator))
        throw std::invalid_argument("divisible hull expects an integer-coefficient generator; "
                                    "apply mv_approximant first");
    return mv_presentation;
}

}  // namespace dmv

#endif
