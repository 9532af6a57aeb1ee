#ifndef DMV_POLYTOPE_HPP
#define DMV_POLYTOPE_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "dmv/linalg.hpp"
#include "dmv/rational.hpp"

// Convex rational polytopes inside a unit cube: H-rep primary, vertices
// cached. Enumeration solves every n-subset of constraints exactly and
// filters for feasibility; dimensions are small by design.

namespace dmv {

/// Closed half-space a·x <= b.
struct Halfspace {
    Vec a;
    Rational b;

    friend bool operator==(const Halfspace& l, const Halfspace& r) {
        return l.a == r.a && l.b == r.b;
    }
    friend bool operator<(const Halfspace& l, const Halfspace& r) {
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    }

    bool satisfied_by(const Vec& x) const { return dot(a, x) <= b; }
    bool tight_at(const Vec& x) const { return dot(a, x) == b; }

    /// Scales by a positive rational so the coefficient data is coprime integers.
    Halfspace normalized() const {
        Int g = 0, l = 1;
        auto fold = [&](const Rational& r) {
            g = gcd(g, numerator(r));
            l = lcm(l, denominator(r));
        };
        for (const auto& c : a) fold(c);
        fold(b);
        if (g == 0) g = 1;
        Rational scale(l, g);
        Halfspace h;
        h.a.reserve(a.size());
        for (const auto& c : a) h.a.push_back(c * scale);
        h.b = b * scale;
        return h;
    }
};

using HRep = std::vector<Halfspace>;

/// x_i >= 0 and x_i <= 1 for every coordinate.
inline HRep cube_hrep(std::size_t n) {
    HRep h;
    for (std::size_t i = 0; i < n; ++i) {
        Vec lo(n, Rational(0)), hi(n, Rational(0));
        lo[i] = -1;
        hi[i] = 1;
        h.push_back({std::move(lo), Rational(0)});
        h.push_back({std::move(hi), Rational(1)});
    }
    return h;
}

inline bool contains_point(const HRep& h, const Vec& x) {
    return std::all_of(h.begin(), h.end(), [&](const Halfspace& c) { return c.satisfied_by(x); });
}

/// Exact vertex set of the polytope {x | h}: feasible solutions of every
/// nonsingular n-subset of tight constraints. Empty iff the polytope has no
/// vertices, which for bounded polytopes means it is empty.
inline std::vector<Vec> vertex_enumerate(const HRep& h, std::size_t n) {
    std::set<Vec> verts;
    if (n == 0) return {};
    const std::size_t m = h.size();
    if (m < n) return {};
    std::vector<std::size_t> idx(n);
    // iterate over all n-subsets of constraint indices
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        Mat a;
        Vec b;
        for (std::size_t i : idx) {
            a.push_back(h[i].a);
            b.push_back(h[i].b);
        }
        if (auto x = solve(std::move(a), std::move(b))) {
            if (contains_point(h, *x)) verts.insert(std::move(*x));
        }
        // next combination
        std::size_t k = n;
        while (k > 0 && idx[k - 1] == m - n + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t i = k; i < n; ++i) idx[i] = idx[i - 1] + 1;
    }
    return {verts.begin(), verts.end()};
}

/// Drops duplicate constraints, then constraints not tight on a facet
/// ((n-1)-dimensional tight vertex set). Only valid for full-dimensional
/// polytopes; callers keep degenerate H-reps as-is.
inline HRep prune_hrep(const HRep& h, const std::vector<Vec>& verts, std::size_t n) {
    std::set<Halfspace> seen;
    HRep out;
    for (const auto& raw : h) {
        Halfspace c = raw.normalized();
        if (!seen.insert(c).second) continue;
        std::vector<Vec> tight;
        for (const auto& v : verts)
            if (c.tight_at(v)) tight.push_back(v);
        if (tight.size() < n) continue;
        if (affine_dim(tight) != static_cast<long>(n) - 1) continue;
        out.push_back(std::move(c));
    }
    return out;
}

/// Convex polytope with cached vertices; may be lower-dimensional.
struct Polytope {
    HRep h_rep;
    std::vector<Vec> vertices;

    bool empty() const { return vertices.empty(); }
    bool contains(const Vec& x) const { return contains_point(h_rep, x); }
    long dim() const { return affine_dim(vertices); }
};

/// Builds a polytope from an H-rep; nullopt when empty. Prunes the H-rep
/// when the result is full-dimensional.
inline std::optional<Polytope> make_polytope(HRep h, std::size_t n) {
    auto verts = vertex_enumerate(h, n);
    if (verts.empty()) return std::nullopt;
    if (affine_dim(verts) == static_cast<long>(n)) h = prune_hrep(h, verts, n);
    return Polytope{std::move(h), std::move(verts)};
}

inline std::optional<Polytope> intersect(const Polytope& p, const Polytope& q, std::size_t n) {
    HRep h = p.h_rep;
    h.insert(h.end(), q.h_rep.begin(), q.h_rep.end());
    return make_polytope(std::move(h), n);
}

}  // namespace dmv

#endif
