#ifndef DMV_QMAP_HPP
#define DMV_QMAP_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "dmv/duality.hpp"
#include "dmv/polyhedron.hpp"
#include "dmv/pwl.hpp"

// Piecewise-linear maps with rational coefficients between rational
// polyhedra, their composition, and the contravariant duality action
// f ↦ f ∘ λ on restriction algebras.

namespace dmv {

namespace detail {

// Region of the cube on which every component is one affine map.
struct LinearRegion {
    Polytope poly;
    std::vector<AffinePiece> maps;  // one per component
};

inline std::vector<LinearRegion> common_refinement(const std::vector<PwlFunc>& components,
                                                   std::size_t n) {
    std::vector<LinearRegion> regions{{*make_polytope(cube_hrep(n), n), {}}};
    for (const auto& comp : components) {
        std::vector<LinearRegion> next;
        for (const auto& region : regions) {
            for (const auto& cell : comp.cells()) {
                auto overlap = intersect(region.poly, cell.poly, n);
                if (!overlap || overlap->dim() != static_cast<long>(n)) continue;
                LinearRegion r{std::move(*overlap), region.maps};
                r.maps.push_back(cell.piece);
                next.push_back(std::move(r));
            }
        }
        regions = std::move(next);
    }
    return regions;
}

inline Vec apply_affine(const std::vector<AffinePiece>& maps, const Vec& x) {
    Vec y;
    y.reserve(maps.size());
    for (const auto& m : maps) y.push_back(m.eval(x));
    return y;
}

// p ∘ A, where A is the affine map with the given components.
inline AffinePiece pull_piece(const AffinePiece& p, const std::vector<AffinePiece>& maps,
                              std::size_t n) {
    AffinePiece out = constant_piece(n, p.constant);
    for (std::size_t j = 0; j < maps.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) out.coeffs[i] += p.coeffs[j] * maps[j].coeffs[i];
        out.constant += p.coeffs[j] * maps[j].constant;
    }
    return out;
}

// Half-space g·y <= h pulled back through y = A(x).
inline Halfspace pull_halfspace(const Halfspace& hs, const std::vector<AffinePiece>& maps,
                                std::size_t n) {
    Vec a(n, Rational(0));
    Rational shift = 0;
    for (std::size_t j = 0; j < maps.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) a[i] += hs.a[j] * maps[j].coeffs[i];
        shift += hs.a[j] * maps[j].constant;
    }
    return Halfspace{std::move(a), hs.b - shift};
}

}  // namespace detail

/// f ∘ λ for f of dimension m and λ with m components of dimension n,
/// built by pulling f's cells back through λ's affine pieces.
inline PwlFunc pwl_compose(const PwlFunc& f, const std::vector<PwlFunc>& components) {
    if (components.size() != f.dim())
        throw std::invalid_argument("component count does not match function dimension");
    const std::size_t n = components.empty() ? 0 : components[0].dim();
    for (const auto& c : components)
        if (c.dim() != n) throw std::invalid_argument("mixed component dimensions");
    std::vector<Cell> out;
    for (const auto& region : detail::common_refinement(components, n)) {
        for (const auto& cell : f.cells()) {
            HRep h = region.poly.h_rep;
            for (const auto& hs : cell.h_rep())
                h.push_back(detail::pull_halfspace(hs, region.maps, n));
            auto poly = make_polytope(std::move(h), n);
            if (!poly || poly->dim() != static_cast<long>(n)) continue;
            out.push_back(Cell{std::move(*poly), detail::pull_piece(cell.piece, region.maps, n)});
            if (out.size() > cell_budget()) throw CellBudgetExceeded(out.size(), cell_budget());
        }
    }
    return PwlFunc(n, std::move(out));
}

/// Convex hull of a rational point set as a polytope (ambient dim <= 2),
/// degenerate hulls included.
inline Polytope convex_hull_polytope(std::vector<Vec> points, std::size_t dim) {
    if (points.empty()) throw std::invalid_argument("hull of empty point set");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    HRep h = cube_hrep(dim);
    auto with_equality = [&](const Vec& a, const Rational& b) {
        Vec neg;
        for (const auto& c : a) neg.push_back(-c);
        h.push_back({a, b});
        h.push_back({std::move(neg), -b});
    };

    long adim = affine_dim(points);
    if (adim == 0) {  // single point
        for (std::size_t i = 0; i < dim; ++i) {
            Vec e(dim, Rational(0));
            e[i] = 1;
            with_equality(e, points[0][i]);
        }
        return Polytope{std::move(h), {points[0]}};
    }
    if (dim == 1) {  // interval [min, max]
        h.push_back({{Rational(-1)}, -points.front()[0]});
        h.push_back({{Rational(1)}, points.back()[0]});
        return *make_polytope(std::move(h), 1);
    }
    if (dim != 2) throw std::invalid_argument("convex hull implemented for ambient dim <= 2");

    auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    if (adim == 1) {  // collinear: a segment
        const Vec& p0 = points.front();
        const Vec& p1 = points.back();
        Vec d{p1[0] - p0[0], p1[1] - p0[1]};
        with_equality({d[1], -d[0]}, d[1] * p0[0] - d[0] * p0[1]);   // on the line
        h.push_back({{-d[0], -d[1]}, -(d[0] * p0[0] + d[1] * p0[1])});
        h.push_back({{d[0], d[1]}, d[0] * p1[0] + d[1] * p1[1]});
        return Polytope{std::move(h), {p0, p1}};
    }
    // Andrew's monotone chain, counter-clockwise hull.
    std::vector<Vec> hull;
    auto build = [&](auto begin, auto end) {
        std::size_t base = hull.size();
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= base + 2 &&
                   cross(hull[hull.size() - 2], hull[hull.size() - 1], *it) <= 0)
                hull.pop_back();
            hull.push_back(*it);
        }
        hull.pop_back();
    };
    build(points.begin(), points.end());
    build(points.rbegin(), points.rend());
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Vec& p = hull[i];
        const Vec& q = hull[(i + 1) % hull.size()];
        // inward normal for CCW edge p -> q: (q-p) rotated, interior on the left
        Vec a{q[1] - p[1], p[0] - q[0]};
        h.push_back({a, a[0] * p[0] + a[1] * p[1]});
    }
    return *make_polytope(std::move(h), 2);
}

struct QMap {
    RatPolyhedron domain;
    RatPolyhedron codomain;
    std::vector<PwlFunc> components;

    std::size_t source_dim() const { return domain.ambient_dim(); }
    std::size_t target_dim() const { return codomain.ambient_dim(); }

    static QMap identity(const RatPolyhedron& p) {
        std::vector<PwlFunc> comps;
        for (std::size_t i = 0; i < p.ambient_dim(); ++i)
            comps.push_back(pwl_projection(p.ambient_dim(), i));
        return QMap{p, p, std::move(comps)};
    }

    Vec apply(const Vec& x) const {
        Vec y;
        y.reserve(components.size());
        for (const auto& c : components) {
            for (const auto& cell : c.cells())
                if (cell.poly.contains(x)) {
                    y.push_back(cell.piece.eval(x));
                    break;
                }
        }
        if (y.size() != components.size()) throw std::domain_error("point outside the unit cube");
        return y;
    }
};

/// λ(P): union over linear regions of the hulls of vertex images (exact,
/// since the affine image of a polytope is the hull of its vertex images).
inline RatPolyhedron qmap_image(const QMap& map) {
    const std::size_t n = map.source_dim();
    std::vector<Polytope> pieces;
    for (const auto& piece : map.domain.pieces()) {
        for (const auto& region : detail::common_refinement(map.components, n)) {
            auto overlap = intersect(region.poly, piece, n);
            if (!overlap) continue;
            std::vector<Vec> images;
            images.reserve(overlap->vertices.size());
            for (const auto& v : overlap->vertices)
                images.push_back(detail::apply_affine(region.maps, v));
            pieces.push_back(convex_hull_polytope(std::move(images), map.target_dim()));
        }
    }
    return RatPolyhedron(map.target_dim(), std::move(pieces));
}

/// Verifies λ(P) ⊆ Q: on every linear region of the components restricted
/// to P, the image polytope's vertices must lie in Q. Returns the first
/// offending image vertex, or nullopt when the check passes.
inline std::optional<Vec> qmap_check_witness(const QMap& map) {
    const std::size_t n = map.source_dim();
    if (map.components.size() != map.target_dim())
        throw std::invalid_argument("component count does not match codomain dimension");
    for (const auto& piece : map.domain.pieces()) {
        for (const auto& region : detail::common_refinement(map.components, n)) {
            auto overlap = intersect(region.poly, piece, n);
            if (!overlap) continue;
            for (const auto& v : overlap->vertices) {
                Vec y = detail::apply_affine(region.maps, v);
                if (!map.codomain.contains(y)) return y;
            }
        }
    }
    return std::nullopt;
}

inline bool qmap_check(const QMap& map) { return !qmap_check_witness(map).has_value(); }

/// Exact polyhedron inclusion: P ⊆ Q iff the zeroset-realizing element of Q
/// vanishes on P.
inline bool polyhedron_subset(const RatPolyhedron& p, const RatPolyhedron& q) {
    if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    if (p.is_empty()) return true;
    return vanishing_ideal_member(distance_formula(q), p);
}

inline bool polyhedron_equal(const RatPolyhedron& p, const RatPolyhedron& q) {
    return polyhedron_subset(p, q) && polyhedron_subset(q, p);
}

/// σ ∘ λ; requires codomain(λ) = domain(σ) as sets.
inline QMap qmap_compose(const QMap& sigma, const QMap& lambda) {
    if (!polyhedron_equal(lambda.codomain, sigma.domain))
        throw std::invalid_argument("qmap composition: codomain/domain mismatch");
    std::vector<PwlFunc> comps;
    comps.reserve(sigma.components.size());
    for (const auto& s : sigma.components) comps.push_back(pwl_compose(s, lambda.components));
    return QMap{lambda.domain, sigma.codomain, std::move(comps)};
}

/// The duality functor on arrows: 𝒟(λ) maps elements over the codomain to
/// elements over the domain by precomposition.
class DualHom {
public:
    DualHom(const QMap& map, const Presentation* source, const Presentation* target)
        : map_(&map), source_(source), target_(target) {}

    QuotientElement operator()(const QuotientElement& f) const {
        if (f.presentation != source_) throw std::invalid_argument("presentation mismatch");
        return QuotientElement{pwl_compose(f.rep, map_->components), target_};
    }

private:
    const QMap* map_;
    const Presentation* source_;  // algebra over the codomain polyhedron
    const Presentation* target_;  // algebra over the domain polyhedron
};

inline DualHom dual_hom(const QMap& map, const Presentation& over_codomain,
                        const Presentation& over_domain) {
    return DualHom(map, &over_codomain, &over_domain);
}

}  // namespace dmv

#endif
