#pragma once

// Affine slices of cones, as point tables for external plotting.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "cone.hpp"
#include "distance.hpp"

namespace stabcone {

struct SlicePoint {
    IntVector ray;
    RatVector point;             // level * ray / <f, ray>
    std::vector<Rational> coords; // in the slice basis
};

struct CrossSection {
    IntVector functional;
    std::vector<IntVector> basis; // directions inside { <f, x> = 0 } and the span of the cone
    std::vector<SlicePoint> points; // cyclic order when the slice is two-dimensional
    std::vector<IntVector> unbounded; // rays on which f is negative
};

namespace detail {

// Coordinates of the orthogonal projection of x onto span(basis), exact.
inline std::vector<Rational> basis_coordinates(const std::vector<IntVector>& basis, const RatVector& x) {
    const std::size_t k = basis.size();
    std::vector<RatVector> gram_rows;
    for (std::size_t i = 0; i < k; ++i) {
        RatVector row;
        for (std::size_t j = 0; j < k; ++j) row.push_back(Rational(dot(basis[i], basis[j])));
        row.push_back(dot(basis[i], x));
        gram_rows.push_back(std::move(row));
    }
    const Echelon e = rref(std::move(gram_rows), k + 1);
    std::vector<Rational> c(k, Rational(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) c[e.pivots[r]] = e.rows[r][k];
    return c;
}

} // namespace detail

inline CrossSection emit_cross_section(const RationalCone& cone, const IntVector& f,
                                       std::optional<std::vector<IntVector>> basis = std::nullopt,
                                       const Rational& level = Rational(1)) {
    const RationalCone c = convert(cone);
    require_same_size(f.size(), c.ambient_dim);
    if (level <= 0) throw DomainError("slice level must be positive");
    if (!c.lineality.empty()) throw DomainError("slice is not transverse: the cone contains a line");
    CrossSection s;
    s.functional = f;
    if (basis) {
        for (const auto& b : *basis) {
            require_same_size(b.size(), c.ambient_dim);
            if (dot(f, b) != 0) throw DomainError("basis vector not parallel to the slice");
        }
        s.basis = *basis;
    } else {
        std::vector<IntVector> rows = c.equalities;
        rows.push_back(f);
        s.basis = nullspace(rows, c.ambient_dim);
    }
    for (const auto& r : c.rays) {
        const Integer h = dot(f, r);
        if (h == 0) throw DomainError("slice is not transverse: a ray is annihilated by the functional");
        if (h < 0) {
            s.unbounded.push_back(r);
            continue;
        }
        SlicePoint p;
        p.ray = r;
        for (const auto& x : r) p.point.push_back(level * Rational(x) / Rational(h));
        p.coords = detail::basis_coordinates(s.basis, p.point);
        s.points.push_back(std::move(p));
    }
    if (s.basis.size() == 2 && s.points.size() > 2) {
        double cx = 0, cy = 0;
        for (const auto& p : s.points) {
            cx += to_double(p.coords[0]);
            cy += to_double(p.coords[1]);
        }
        cx /= static_cast<double>(s.points.size());
        cy /= static_cast<double>(s.points.size());
        std::stable_sort(s.points.begin(), s.points.end(), [&](const SlicePoint& a, const SlicePoint& b) {
            return std::atan2(to_double(a.coords[1]) - cy, to_double(a.coords[0]) - cx) <
                   std::atan2(to_double(b.coords[1]) - cy, to_double(b.coords[0]) - cx);
        });
    }
    return s;
}

inline double euclidean(const RatVector& a, const RatVector& b) {
    require_same_size(a.size(), b.size());
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = to_double(a[i] - b[i]);
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace stabcone
