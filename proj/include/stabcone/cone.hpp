#pragma once

// Polyhedral cones over the rationals in both Minkowski-Weyl forms.
//
//   H-form: { x : <a,x> = 0 for a in equalities, <a,x> <= 0 for a in inequalities }
//   V-form: nonnegative span of rays plus the linear span of lineality
//
// convert() runs the double description method in both directions and leaves the
// cone in canonical form, so equality of synced cones is operator==.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "error.hpp"
#include "linalg.hpp"

namespace stabcone {

struct RationalCone {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> equalities;
    std::vector<IntVector> inequalities;
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
    bool has_halfspaces = false;
    bool has_generators = false;
    bool reps_synced = false;

    static RationalCone from_halfspaces(std::size_t n, std::vector<IntVector> eqs, std::vector<IntVector> ineqs) {
        RationalCone c;
        c.ambient_dim = n;
        c.equalities = std::move(eqs);
        c.inequalities = std::move(ineqs);
        c.has_halfspaces = true;
        c.check_dims();
        return c;
    }

    static RationalCone from_generators(std::size_t n, std::vector<IntVector> rays, std::vector<IntVector> lin = {}) {
        RationalCone c;
        c.ambient_dim = n;
        c.rays = std::move(rays);
        c.lineality = std::move(lin);
        c.has_generators = true;
        c.check_dims();
        return c;
    }

    static RationalCone whole_space(std::size_t n) { return from_halfspaces(n, {}, {}); }
    static RationalCone origin(std::size_t n) { return from_generators(n, {}, {}); }

    void check_dims() const {
        for (const auto* list : {&equalities, &inequalities, &rays, &lineality})
            for (const auto& v : *list) require_same_size(v.size(), ambient_dim);
    }

    bool contains(const RatVector& x) const {
        require_halfspaces();
        require_same_size(x.size(), ambient_dim);
        for (const auto& a : equalities)
            if (dot(a, x) != 0) return false;
        for (const auto& a : inequalities)
            if (dot(a, x) > 0) return false;
        return true;
    }

    bool contains(const IntVector& x) const {
        require_halfspaces();
        require_same_size(x.size(), ambient_dim);
        for (const auto& a : equalities)
            if (dot(a, x) != 0) return false;
        for (const auto& a : inequalities)
            if (dot(a, x) > 0) return false;
        return true;
    }

    // Dimension of the linear hull. Needs generators.
    std::size_t dimension() const {
        if (!has_generators) throw DomainError("cone dimension needs generators");
        std::vector<IntVector> all = rays;
        all.insert(all.end(), lineality.begin(), lineality.end());
        return rank(std::move(all));
    }

    bool is_pointed() const { return lineality.empty(); }

    friend bool operator==(const RationalCone&, const RationalCone&) = default;

private:
    void require_halfspaces() const {
        if (!has_halfspaces) throw DomainError("cone membership needs halfspaces; convert first");
    }
};

namespace detail {

struct Generators {
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
};

struct Halfspaces {
    std::vector<IntVector> equalities;
    std::vector<IntVector> inequalities;
};

// H -> V. Constraints are inserted in input order, equalities first. Lineality is
// eliminated before any ray pairing; ray pairs are combined only when adjacent by
// the rank test on their common tight constraints.
inline Generators double_description(std::size_t n, const std::vector<IntVector>& eqs,
                                     const std::vector<IntVector>& ineqs) {
    Generators g;
    for (std::size_t i = 0; i < n; ++i) g.lineality.push_back(unit_vector(n, i));
    std::vector<IntVector> seen;

    auto insert = [&](const IntVector& a, bool equality) {
        if (is_zero(a)) return;
        auto& lin = g.lineality;
        auto& rays = g.rays;

        std::size_t k = 0;
        while (k < lin.size() && dot(a, lin[k]) == 0) ++k;
        if (k < lin.size()) {
            IntVector l0 = lin[k];
            Integer c = dot(a, l0);
            if (c > 0) {
                l0 = negated(std::move(l0));
                c = -c;
            }
            for (std::size_t j = 0; j < lin.size(); ++j) {
                if (j == k) continue;
                const Integer s = dot(a, lin[j]);
                if (s != 0) lin[j] = primitive(combine(-c, lin[j], s, l0));
            }
            for (auto& r : rays) {
                const Integer s = dot(a, r);
                if (s != 0) r = primitive(combine(-c, r, s, l0));
            }
            lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(k));
            if (!equality) rays.push_back(primitive(std::move(l0)));
            seen.push_back(a);
            return;
        }

        std::vector<Integer> s(rays.size());
        std::vector<std::size_t> plus, minus;
        std::vector<IntVector> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = dot(a, rays[i]);
            if (s[i] > 0)
                plus.push_back(i);
            else if (s[i] < 0)
                minus.push_back(i);
        }
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (s[i] == 0 || (s[i] < 0 && !equality)) next.push_back(rays[i]);

        if (!plus.empty() && !minus.empty()) {
            const std::ptrdiff_t need = static_cast<std::ptrdiff_t>(n) - static_cast<std::ptrdiff_t>(lin.size()) - 2;
            auto tight_set = [&](std::size_t i) {
                boost::dynamic_bitset<> t(seen.size());
                for (std::size_t h = 0; h < seen.size(); ++h)
                    if (dot(seen[h], rays[i]) == 0) t.set(h);
                return t;
            };
            std::vector<boost::dynamic_bitset<>> tp, tm;
            for (auto i : plus) tp.push_back(tight_set(i));
            for (auto i : minus) tm.push_back(tight_set(i));
            for (std::size_t x = 0; x < plus.size(); ++x) {
                for (std::size_t y = 0; y < minus.size(); ++y) {
                    const boost::dynamic_bitset<> common = tp[x] & tm[y];
                    if (need < 0 || static_cast<std::ptrdiff_t>(common.count()) < need) continue;
                    std::vector<IntVector> rows;
                    for (auto h = common.find_first(); h != boost::dynamic_bitset<>::npos; h = common.find_next(h))
                        rows.push_back(seen[h]);
                    if (static_cast<std::ptrdiff_t>(rank(std::move(rows))) != need) continue;
                    const std::size_t p = plus[x], q = minus[y];
                    next.push_back(primitive(combine(s[p], rays[q], -s[q], rays[p])));
                }
            }
        }
        rays = std::move(next);
        seen.push_back(a);
    };

    for (const auto& a : eqs) insert(a, true);
    for (const auto& a : ineqs) insert(a, false);
    return g;
}

// V -> H through the polar cone { a : <a,r> <= 0, <a,l> = 0 }.
inline Halfspaces polar_halfspaces(std::size_t n, const std::vector<IntVector>& rays,
                                   const std::vector<IntVector>& lin) {
    Generators polar = double_description(n, lin, rays);
    return {std::move(polar.lineality), std::move(polar.rays)};
}

// Project each vector off span(basis), scale to primitive, drop zeros, sort, dedupe.
inline std::vector<IntVector> reduce_modulo(const std::vector<IntVector>& vs, const std::vector<IntVector>& basis) {
    std::set<IntVector> out;
    for (const auto& v : vs) {
        IntVector w = basis.empty() ? primitive(v) : clear_denominators(project_orthogonal(to_rational(v), basis));
        if (!is_zero(w)) out.insert(std::move(w));
    }
    return {out.begin(), out.end()};
}

} // namespace detail

enum class Target { rays, halfspaces };

// Returns the cone with both representations present, minimal and canonical.
// The target only names the representation the caller needs; both are produced.
inline RationalCone convert(const RationalCone& c, Target = Target::rays) {
    c.check_dims();
    if (c.reps_synced) return c;
    const std::size_t n = c.ambient_dim;
    detail::Generators g;
    detail::Halfspaces h;
    if (c.has_generators) {
        h = detail::polar_halfspaces(n, c.rays, c.lineality);
        g = detail::double_description(n, h.equalities, h.inequalities);
    } else if (c.has_halfspaces) {
        g = detail::double_description(n, c.equalities, c.inequalities);
        h = detail::polar_halfspaces(n, g.rays, g.lineality);
    } else {
        throw DomainError("cone has no representation to convert from");
    }
    RationalCone out;
    out.ambient_dim = n;
    out.lineality = row_space_basis(g.lineality, n);
    out.rays = detail::reduce_modulo(g.rays, out.lineality);
    out.equalities = row_space_basis(h.equalities, n);
    out.inequalities = detail::reduce_modulo(h.inequalities, out.equalities);
    out.has_halfspaces = out.has_generators = out.reps_synced = true;
    return out;
}

inline RationalCone intersect_subspace(const RationalCone& c, const std::vector<IntVector>& eqs) {
    const RationalCone s = convert(c);
    std::vector<IntVector> all = s.equalities;
    for (const auto& e : eqs) {
        require_same_size(e.size(), s.ambient_dim);
        all.push_back(e);
    }
    return convert(RationalCone::from_halfspaces(s.ambient_dim, std::move(all), s.inequalities));
}

// subcone: the second argument lies in the first. supercone: the first lies in the second.
enum class Relation { contains_point, subcone, supercone, equal, incomparable };

inline std::string to_string(Relation r) {
    switch (r) {
    case Relation::contains_point: return "contains_point";
    case Relation::subcone: return "subcone";
    case Relation::supercone: return "supercone";
    case Relation::equal: return "equal";
    case Relation::incomparable: return "incomparable";
    }
    return "incomparable";
}

inline bool includes(const RationalCone& outer, const RationalCone& inner) {
    for (const auto& r : inner.rays)
        if (!outer.contains(r)) return false;
    for (const auto& l : inner.lineality)
        if (!outer.contains(l) || !outer.contains(negated(l))) return false;
    return true;
}

inline Relation relate(const RationalCone& a, const RationalCone& b) {
    require_same_size(a.ambient_dim, b.ambient_dim);
    const RationalCone sa = convert(a), sb = convert(b);
    const bool b_in_a = includes(sa, sb);
    const bool a_in_b = includes(sb, sa);
    if (b_in_a && a_in_b) return Relation::equal;
    if (b_in_a) return Relation::subcone;
    if (a_in_b) return Relation::supercone;
    return Relation::incomparable;
}

// A point outside the cone is reported as incomparable.
inline Relation relate(const RationalCone& a, const RatVector& x) {
    return convert(a).contains(x) ? Relation::contains_point : Relation::incomparable;
}

inline Relation relate(const RationalCone& a, const IntVector& x) { return relate(a, to_rational(x)); }

struct Face {
    std::vector<std::size_t> ray_indices; // into the parent's canonical rays
    std::size_t dim = 0;
    RationalCone cone;
};

struct FaceLattice {
    std::vector<Face> faces; // sorted by dimension, then ray indices
    bool simplicial = false;
};

inline FaceLattice face_lattice(const RationalCone& c, std::optional<std::size_t> up_to_dim = std::nullopt) {
    const RationalCone s = convert(c);
    const std::size_t nr = s.rays.size();
    using Bits = boost::dynamic_bitset<>;

    std::vector<Bits> facets;
    for (const auto& a : s.inequalities) {
        Bits t(nr);
        for (std::size_t i = 0; i < nr; ++i)
            if (dot(a, s.rays[i]) == 0) t.set(i);
        facets.push_back(std::move(t));
    }

    // Faces are exactly the intersections of facets, plus the whole cone.
    std::set<Bits> found;
    std::vector<Bits> queue;
    Bits all(nr);
    all.set();
    found.insert(all);
    queue.push_back(all);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Bits cur = queue[head];
        for (const auto& f : facets) {
            Bits next = cur & f;
            if (next != cur && found.insert(next).second) queue.push_back(std::move(next));
        }
    }

    FaceLattice out;
    for (const auto& bits : found) {
        Face face;
        std::vector<IntVector> gens;
        for (std::size_t i = 0; i < nr; ++i)
            if (bits.test(i)) {
                face.ray_indices.push_back(i);
                gens.push_back(s.rays[i]);
            }
        std::vector<IntVector> span = gens;
        span.insert(span.end(), s.lineality.begin(), s.lineality.end());
        face.dim = rank(std::move(span));
        if (up_to_dim && face.dim > *up_to_dim) continue;
        face.cone = convert(RationalCone::from_generators(s.ambient_dim, std::move(gens), s.lineality));
        out.faces.push_back(std::move(face));
    }
    std::sort(out.faces.begin(), out.faces.end(), [](const Face& x, const Face& y) {
        return std::tie(x.dim, x.ray_indices) < std::tie(y.dim, y.ray_indices);
    });
    std::vector<IntVector> all_gens = s.rays;
    all_gens.insert(all_gens.end(), s.lineality.begin(), s.lineality.end());
    out.simplicial = rank(std::move(all_gens)) == nr + s.lineality.size();
    return out;
}

// { x : <x,r> >= 0 for rays r, <x,l> = 0 for lineality l }
inline RationalCone dual_cone(const RationalCone& c) {
    const RationalCone s = convert(c);
    std::vector<IntVector> ineqs;
    for (const auto& r : s.rays) ineqs.push_back(negated(r));
    return convert(RationalCone::from_halfspaces(s.ambient_dim, s.lineality, std::move(ineqs)));
}

inline RationalCone span_union(const RationalCone& a, const RationalCone& b) {
    require_same_size(a.ambient_dim, b.ambient_dim);
    const RationalCone sa = convert(a), sb = convert(b);
    std::vector<IntVector> rays = sa.rays, lin = sa.lineality;
    rays.insert(rays.end(), sb.rays.begin(), sb.rays.end());
    lin.insert(lin.end(), sb.lineality.begin(), sb.lineality.end());
    return convert(RationalCone::from_generators(sa.ambient_dim, std::move(rays), std::move(lin)));
}

} // namespace stabcone
