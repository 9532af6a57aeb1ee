#ifndef DMV_PWL_HPP
#define DMV_PWL_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dmv/eval.hpp"
#include "dmv/formula.hpp"
#include "dmv/polytope.hpp"
#include "dmv/rational.hpp"

// Elements of the free algebra DMV_n as continuous piecewise-linear
// functions [0,1]^n -> [0,1] with rational coefficients: a finite complex
// of closed full-dimensional rational polytopes covering the cube, each
// carrying one affine piece.

namespace dmv {

struct CellBudgetExceeded : std::runtime_error {
    CellBudgetExceeded(std::size_t cells, std::size_t budget)
        : std::runtime_error("cell budget exceeded: " + std::to_string(cells) + " > " +
                             std::to_string(budget)) {}
};

namespace detail {
inline std::atomic<std::size_t>& cell_budget_storage() {
    static std::atomic<std::size_t> budget{100000};
    return budget;
}
}  // namespace detail

inline std::size_t cell_budget() { return detail::cell_budget_storage().load(); }
inline void set_cell_budget(std::size_t b) { detail::cell_budget_storage().store(b); }

/// x ↦ coeffs·x + constant.
struct AffinePiece {
    Vec coeffs;
    Rational constant;

    Rational eval(const Vec& x) const { return dot(coeffs, x) + constant; }

    AffinePiece negated() const {
        AffinePiece p;
        p.coeffs.reserve(coeffs.size());
        for (const auto& c : coeffs) p.coeffs.push_back(-c);
        p.constant = 1 - constant;
        return p;
    }
    AffinePiece scaled(const Rational& r) const {
        AffinePiece p;
        p.coeffs.reserve(coeffs.size());
        for (const auto& c : coeffs) p.coeffs.push_back(c * r);
        p.constant = constant * r;
        return p;
    }
    friend AffinePiece operator+(const AffinePiece& a, const AffinePiece& b) {
        AffinePiece p;
        p.coeffs.reserve(a.coeffs.size());
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) p.coeffs.push_back(a.coeffs[i] + b.coeffs[i]);
        p.constant = a.constant + b.constant;
        return p;
    }
    friend AffinePiece operator-(const AffinePiece& a, const AffinePiece& b) {
        AffinePiece p;
        p.coeffs.reserve(a.coeffs.size());
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) p.coeffs.push_back(a.coeffs[i] - b.coeffs[i]);
        p.constant = a.constant - b.constant;
        return p;
    }
    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

inline AffinePiece constant_piece(std::size_t n, Rational c) {
    return AffinePiece{Vec(n, Rational(0)), std::move(c)};
}

struct Cell {
    Polytope poly;
    AffinePiece piece;

    const HRep& h_rep() const { return poly.h_rep; }
    const std::vector<Vec>& vertices() const { return poly.vertices; }
};

class PwlFunc {
public:
    PwlFunc(std::size_t dim, std::vector<Cell> cells) : dim_(dim), cells_(std::move(cells)) {
        if (cells_.size() > cell_budget()) throw CellBudgetExceeded(cells_.size(), cell_budget());
    }

    std::size_t dim() const { return dim_; }
    const std::vector<Cell>& cells() const { return cells_; }

private:
    std::size_t dim_;
    std::vector<Cell> cells_;
};

inline PwlFunc pwl_constant(std::size_t n, const UnitRational& c) {
    auto poly = make_polytope(cube_hrep(n), n);
    return PwlFunc(n, {Cell{std::move(*poly), constant_piece(n, c.value())}});
}

inline PwlFunc pwl_projection(std::size_t n, std::size_t i) {
    if (i >= n) throw std::out_of_range("projection index out of range");
    auto poly = make_polytope(cube_hrep(n), n);
    AffinePiece p = constant_piece(n, Rational(0));
    p.coeffs[i] = 1;
    return PwlFunc(n, {Cell{std::move(*poly), std::move(p)}});
}

namespace detail {

inline void require_same_dim(const PwlFunc& f, const PwlFunc& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("pwl dimension mismatch");
}

// Adds {h <= t} resp. {h >= t} to the cell's constraints and keeps the
// half when it is full-dimensional.
inline void emit_split(std::vector<Cell>& out, const Polytope& base, const AffinePiece& h,
                       const Rational& threshold, const AffinePiece& below_piece,
                       const AffinePiece& above_piece, std::size_t n) {
    // Fast path: the splitting hyperplane misses the cell interior.
    bool any_below = false, any_above = false;
    for (const auto& v : base.vertices) {
        Rational hv = h.eval(v);
        if (hv < threshold) any_below = true;
        if (hv > threshold) any_above = true;
    }
    if (!any_above) {
        out.push_back(Cell{base, below_piece});
        return;
    }
    if (!any_below) {
        out.push_back(Cell{base, above_piece});
        return;
    }
    Vec neg_coeffs;
    neg_coeffs.reserve(h.coeffs.size());
    for (const auto& c : h.coeffs) neg_coeffs.push_back(-c);

    HRep below = base.h_rep;
    below.push_back(Halfspace{h.coeffs, threshold - h.constant});
    if (auto p = make_polytope(std::move(below), n); p && p->dim() == static_cast<long>(n))
        out.push_back(Cell{std::move(*p), below_piece});

    HRep above = base.h_rep;
    above.push_back(Halfspace{std::move(neg_coeffs), h.constant - threshold});
    if (auto p = make_polytope(std::move(above), n); p && p->dim() == static_cast<long>(n))
        out.push_back(Cell{std::move(*p), above_piece});
}

// Common refinement of two complexes; `split` receives the overlap polytope
// and the two affine pieces valid on it.
template <class Split>
PwlFunc combine(const PwlFunc& f, const PwlFunc& g, Split split) {
    require_same_dim(f, g);
    const std::size_t n = f.dim();
    std::vector<Cell> out;
    for (const auto& cf : f.cells()) {
        for (const auto& cg : g.cells()) {
            auto overlap = intersect(cf.poly, cg.poly, n);
            if (!overlap || overlap->dim() != static_cast<long>(n)) continue;
            split(out, *overlap, cf.piece, cg.piece, n);
            if (out.size() > cell_budget()) throw CellBudgetExceeded(out.size(), cell_budget());
        }
    }
    return PwlFunc(n, std::move(out));
}

template <class PerCell>
PwlFunc map_cells(const PwlFunc& f, PerCell per_cell) {
    std::vector<Cell> out;
    out.reserve(f.cells().size());
    for (const auto& c : f.cells()) out.push_back(Cell{c.poly, per_cell(c.piece)});
    return PwlFunc(f.dim(), std::move(out));
}

}  // namespace detail

/// f*(x) = 1 - f(x)
inline PwlFunc pwl_neg(const PwlFunc& f) {
    return detail::map_cells(f, [](const AffinePiece& p) { return p.negated(); });
}

/// (δ_n f)(x) = f(x)/n
inline PwlFunc pwl_delta(unsigned long n, const PwlFunc& f) {
    if (n == 0) throw std::domain_error("delta subscript must be >= 1");
    Rational r(1, Int(n));
    return detail::map_cells(f, [&](const AffinePiece& p) { return p.scaled(r); });
}

/// (r f)(x) = r · f(x)
inline PwlFunc pwl_scalar(const UnitRational& r, const PwlFunc& f) {
    return detail::map_cells(f, [&](const AffinePiece& p) { return p.scaled(r.value()); });
}

/// (f ⊕ g)(x) = min(f(x)+g(x), 1): cells split along f + g = 1.
inline PwlFunc pwl_plus(const PwlFunc& f, const PwlFunc& g) {
    return detail::combine(f, g,
                           [](std::vector<Cell>& out, const Polytope& base, const AffinePiece& a,
                              const AffinePiece& b, std::size_t n) {
                               AffinePiece sum = a + b;
                               detail::emit_split(out, base, sum, Rational(1), sum,
                                                  constant_piece(n, Rational(1)), n);
                           });
}

/// (f ⊙ g)(x) = max(f(x)+g(x)-1, 0): cells split along f + g = 1.
inline PwlFunc pwl_times(const PwlFunc& f, const PwlFunc& g) {
    return detail::combine(f, g,
                           [](std::vector<Cell>& out, const Polytope& base, const AffinePiece& a,
                              const AffinePiece& b, std::size_t n) {
                               AffinePiece sum = a + b;
                               AffinePiece shifted = sum;
                               shifted.constant -= 1;
                               detail::emit_split(out, base, sum, Rational(1),
                                                  constant_piece(n, Rational(0)), shifted, n);
                           });
}

/// (f → g)(x) = min(1 - f(x) + g(x), 1): split along f = g.
inline PwlFunc pwl_implies(const PwlFunc& f, const PwlFunc& g) {
    return detail::combine(f, g,
                           [](std::vector<Cell>& out, const Polytope& base, const AffinePiece& a,
                              const AffinePiece& b, std::size_t n) {
                               AffinePiece diff = a - b;  // f - g
                               AffinePiece residue = diff.negated();  // 1 - f + g
                               detail::emit_split(out, base, diff, Rational(0),
                                                  constant_piece(n, Rational(1)), residue, n);
                           });
}

/// (f ∨ g)(x) = max(f(x), g(x)): split along f = g.
inline PwlFunc pwl_join(const PwlFunc& f, const PwlFunc& g) {
    return detail::combine(f, g,
                           [](std::vector<Cell>& out, const Polytope& base, const AffinePiece& a,
                              const AffinePiece& b, std::size_t n) {
                               detail::emit_split(out, base, a - b, Rational(0), b, a, n);
                           });
}

/// (f ∧ g)(x) = min(f(x), g(x)): split along f = g.
inline PwlFunc pwl_meet(const PwlFunc& f, const PwlFunc& g) {
    return detail::combine(f, g,
                           [](std::vector<Cell>& out, const Polytope& base, const AffinePiece& a,
                              const AffinePiece& b, std::size_t n) {
                               detail::emit_split(out, base, a - b, Rational(0), a, b, n);
                           });
}

/// min(m·f, 1), the m-fold truncated sum of f with itself.
inline PwlFunc pwl_nfold_plus(unsigned long m, const PwlFunc& f) {
    if (m == 0) return pwl_constant(f.dim(), UnitRational::zero());
    const std::size_t n = f.dim();
    std::vector<Cell> out;
    Rational scale{Int(m)};
    for (const auto& c : f.cells()) {
        detail::emit_split(out, c.poly, c.piece.scaled(scale), Rational(1),
                           c.piece.scaled(scale), constant_piece(n, Rational(1)), n);
    }
    return PwlFunc(n, std::move(out));
}

inline Vec to_vec(const Valuation& v) {
    Vec x;
    x.reserve(v.size());
    for (const auto& c : v) x.push_back(c.value());
    return x;
}

/// Evaluates at a rational point of the cube; continuity makes the answer
/// independent of which containing cell is found.
inline UnitRational pwl_eval(const PwlFunc& f, const Valuation& v) {
    if (v.size() < f.dim()) throw std::out_of_range("valuation too short for pwl function");
    Vec x = to_vec(v);
    x.resize(f.dim());
    for (const auto& c : f.cells())
        if (c.poly.contains(x)) return UnitRational(c.piece.eval(x));
    throw std::domain_error("point outside the unit cube");
}

/// Exact global minimum over the cube with a rational witness vertex.
inline std::pair<UnitRational, Valuation> pwl_min(const PwlFunc& f) {
    std::optional<Rational> best;
    Vec where;
    for (const auto& c : f.cells()) {
        for (const auto& v : c.vertices()) {
            Rational val = c.piece.eval(v);
            if (!best || val < *best) {
                best = val;
                where = v;
            }
        }
    }
    Valuation w;
    for (auto& coord : where) w.emplace_back(std::move(coord));
    return {UnitRational(std::move(*best)), std::move(w)};
}

/// Exact global maximum over the cube with a rational witness vertex.
inline std::pair<UnitRational, Valuation> pwl_max(const PwlFunc& f) {
    std::optional<Rational> best;
    Vec where;
    for (const auto& c : f.cells()) {
        for (const auto& v : c.vertices()) {
            Rational val = c.piece.eval(v);
            if (!best || val > *best) {
                best = val;
                where = v;
            }
        }
    }
    Valuation w;
    for (auto& coord : where) w.emplace_back(std::move(coord));
    return {UnitRational(std::move(*best)), std::move(w)};
}

/// f ⊖ g := f ⊙ ¬g, pointwise max(f-g, 0).
inline PwlFunc pwl_minus_trunc(const PwlFunc& f, const PwlFunc& g) {
    return pwl_times(f, pwl_neg(g));
}

/// Semantic equality, decided exactly: the symmetric difference
/// (f⊖g) ⊕ (g⊖f) has maximum 0 iff f = g everywhere.
inline bool pwl_equal(const PwlFunc& f, const PwlFunc& g) {
    detail::require_same_dim(f, g);
    PwlFunc sym = pwl_plus(pwl_minus_trunc(f, g), pwl_minus_trunc(g, f));
    return pwl_max(sym).first == UnitRational::zero();
}

/// Structural recursion through the pwl operations.
inline PwlFunc compile_ql(const Formula& phi, std::size_t dim) {
    switch (phi.kind()) {
        case NodeKind::Var:
            return pwl_projection(dim, phi.var_index());
        case NodeKind::Neg:
            return pwl_neg(compile_ql(*phi.child(), dim));
        case NodeKind::Implies:
            return pwl_implies(compile_ql(*phi.lhs(), dim), compile_ql(*phi.rhs(), dim));
        case NodeKind::Nabla: {
            // (r·f*)* = 1 - r + r·f, affine per cell: no refinement needed.
            PwlFunc f = compile_ql(*phi.child(), dim);
            const Rational& r = phi.nabla_scalar().value();
            return detail::map_cells(f, [&](const AffinePiece& p) {
                AffinePiece q = p.scaled(r);
                q.constant += 1 - r;
                return q;
            });
        }
        case NodeKind::DeltaN: break;
    }
    throw std::logic_error("invalid node in ql formula");
}

inline PwlFunc compile_ratluk(const DFormula& phi, std::size_t dim) {
    switch (phi.kind()) {
        case NodeKind::Var:
            return pwl_projection(dim, phi.var_index());
        case NodeKind::Neg:
            return pwl_neg(compile_ratluk(*phi.child(), dim));
        case NodeKind::Implies:
            return pwl_implies(compile_ratluk(*phi.lhs(), dim), compile_ratluk(*phi.rhs(), dim));
        case NodeKind::DeltaN:
            return pwl_delta(phi.delta_divisor(), compile_ratluk(*phi.child(), dim));
        case NodeKind::Nabla: break;
    }
    throw std::logic_error("invalid node in ratluk formula");
}

inline PwlFunc compile_ql(const Formula::Ptr& phi) {
    std::size_t d = phi->dimension();
    return compile_ql(*phi, d ? d : 1);
}
inline PwlFunc compile_ratluk(const DFormula::Ptr& phi) {
    std::size_t d = phi->dimension();
    return compile_ratluk(*phi, d ? d : 1);
}

}  // namespace dmv

#endif
