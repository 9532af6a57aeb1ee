#ifndef DMV_POLYHEDRON_HPP
#define DMV_POLYHEDRON_HPP

#include <stdexcept>
#include <vector>

#include "dmv/polytope.hpp"
#include "dmv/pwl.hpp"

namespace dmv {

/// Finite union of convex rational polytopes inside [0,1]^n. Pieces may be
/// lower-dimensional (zerosets frequently are); the empty polyhedron is the
/// empty union.
class RatPolyhedron {
public:
    explicit RatPolyhedron(std::size_t ambient_dim, std::vector<Polytope> pieces = {})
        : dim_(ambient_dim), pieces_(std::move(pieces)) {
        for (const auto& p : pieces_)
            if (p.empty()) throw std::invalid_argument("empty piece in polyhedron");
    }

    static RatPolyhedron cube(std::size_t n) {
        return RatPolyhedron(n, {*make_polytope(cube_hrep(n), n)});
    }
    static RatPolyhedron empty(std::size_t n) { return RatPolyhedron(n); }

    /// Singleton {x}.
    static RatPolyhedron point(const Valuation& x) {
        const std::size_t n = x.size();
        HRep h = cube_hrep(n);
        Vec v = to_vec(x);
        for (std::size_t i = 0; i < n; ++i) {
            Vec lo(n, Rational(0)), hi(n, Rational(0));
            lo[i] = -1;
            hi[i] = 1;
            h.push_back({std::move(hi), v[i]});
            h.push_back({std::move(lo), -v[i]});
        }
        return RatPolyhedron(n, {Polytope{std::move(h), {std::move(v)}}});
    }

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<Polytope>& pieces() const { return pieces_; }
    bool is_empty() const { return pieces_.empty(); }

    bool contains(const Vec& x) const {
        for (const auto& p : pieces_)
            if (p.contains(x)) return true;
        return false;
    }
    bool contains(const Valuation& x) const { return contains(to_vec(x)); }

private:
    std::size_t dim_;
    std::vector<Polytope> pieces_;
};

}  // namespace dmv

#endif
