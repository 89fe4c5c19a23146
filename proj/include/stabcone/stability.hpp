#pragma once

// Stability spaces of string and band modules. The submodule H-representation
// (oracle_cone) is the reference; every other route is checked against it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cone.hpp"
#include "distance.hpp"
#include "quiver.hpp"
#include "word.hpp"

namespace stabcone {

enum class ModuleKind { string, band };

inline std::string to_string(ModuleKind k) { return k == ModuleKind::string ? "string" : "band"; }

struct ModuleDescriptor {
    std::string word;
    ModuleKind kind = ModuleKind::string;
    friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&) = default;
};

struct StabilityCone {
    ModuleDescriptor module;
    std::vector<long long> dimension;
    std::vector<std::size_t> support;
    RationalCone cone;         // all vertices; +-e_i off the support
    RationalCone support_cone; // coordinates of the support only
};

namespace detail {

inline void require_special_biserial(const BoundQuiver& q) {
    const auto d = check_special_biserial(q);
    if (!d.passed) throw DomainError("algebra is not special biserial (" + to_string(d.violations.front().rule) + ")");
}

inline IntVector restrict_vector(const IntVector& v, const std::vector<std::size_t>& support) {
    IntVector out;
    for (auto i : support) out.push_back(v[i]);
    return out;
}

inline IntVector embed_vector(const IntVector& v, const std::vector<std::size_t>& support, std::size_t n) {
    IntVector out = zero_vector(n);
    for (std::size_t k = 0; k < support.size(); ++k) out[support[k]] = v[k];
    return out;
}

inline StabilityCone assemble(ModuleDescriptor d, const DimVector& dim, const RationalCone& support_cone) {
    StabilityCone s;
    s.module = std::move(d);
    s.dimension = dim.entries;
    s.support = dim.support();
    s.support_cone = convert(support_cone);
    const std::size_t n = dim.size();
    std::vector<IntVector> rays, lin;
    for (const auto& r : s.support_cone.rays) rays.push_back(embed_vector(r, s.support, n));
    for (const auto& l : s.support_cone.lineality) lin.push_back(embed_vector(l, s.support, n));
    for (std::size_t i = 0; i < n; ++i)
        if (dim[i] == 0) lin.push_back(unit_vector(n, i));
    s.cone = convert(RationalCone::from_generators(n, std::move(rays), std::move(lin)));
    return s;
}

inline StabilityCone oracle_from_occurrences(const BoundQuiver& q, const Word& w, ModuleKind kind, const DimVector& dim,
                                             const std::vector<SubstringOccurrence>& occ) {
    const auto support = dim.support();
    std::vector<IntVector> ineqs;
    for (const auto& o : occ) ineqs.push_back(restrict_vector(occurrence_dimension(w, o).as_integers(), support));
    auto sc = RationalCone::from_halfspaces(support.size(), {restrict_vector(dim.as_integers(), support)}, std::move(ineqs));
    return assemble({format_walk(q, w), kind}, dim, sc);
}

} // namespace detail

inline StabilityCone oracle_cone(const BoundQuiver& q, const StringWord& s) {
    detail::require_special_biserial(q);
    return detail::oracle_from_occurrences(q, s.word(), ModuleKind::string, dimension_vector(s),
                                           substrings(s, SubstringKind::submodule, true));
}

inline StabilityCone oracle_cone(const BoundQuiver& q, const BandWord& b) {
    detail::require_special_biserial(q);
    return detail::oracle_from_occurrences(q, b.word(), ModuleKind::band, dimension_vector(b),
                                           cyclic_substrings(b, SubstringKind::submodule));
}

// Thin module of an acyclic quiver (every arrow acting by 1): one ray per arrow.
inline RationalCone thin_module_cone(const BoundQuiver& q) {
    const std::size_t n = q.num_vertices();
    std::vector<std::size_t> indeg(n, 0), order;
    for (const auto& a : q.arrows()) ++indeg[a.target];
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (std::size_t h = 0; h < order.size(); ++h)
        for (auto a : q.arrows_out(order[h]))
            if (--indeg[q.arrow(a).target] == 0) order.push_back(q.arrow(a).target);
    if (order.size() != n) throw DomainError("quiver has an oriented cycle");
    std::vector<IntVector> rays;
    for (const auto& a : q.arrows()) {
        IntVector r = zero_vector(n);
        r[a.source] += 1;
        r[a.target] -= 1;
        rays.push_back(std::move(r));
    }
    return convert(RationalCone::from_generators(n, std::move(rays)));
}

struct ThinLift {
    BoundQuiver thin_quiver;               // arrow i corresponds to letter i
    std::vector<std::size_t> copy_map;      // position -> vertex of the original quiver
    std::vector<IntVector> glue_equations; // consecutive copies of a vertex agree
    bool cyclic = false;
};

inline ThinLift thin_lift(const BoundQuiver& q, const Word& w, bool cyclic) {
    ThinLift t;
    t.cyclic = cyclic;
    const std::size_t npos = cyclic ? w.size() : w.size() + 1;
    t.copy_map.assign(w.vertices().begin(), w.vertices().begin() + static_cast<std::ptrdiff_t>(npos));
    std::vector<std::string> names;
    for (std::size_t p = 0; p < npos; ++p) names.push_back(q.vertex_name(t.copy_map[p]) + "@" + std::to_string(p));
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Letter l = w.letters()[i];
        const std::size_t j = (i + 1) % npos;
        const std::string name = q.arrow(l.arrow).name + "_" + std::to_string(i);
        if (l.dir == Direction::direct)
            arrows.push_back({name, i, j});
        else
            arrows.push_back({name, j, i});
    }
    t.thin_quiver = BoundQuiver(std::move(names), std::move(arrows), {});
    std::map<std::size_t, std::vector<std::size_t>> fibers;
    for (std::size_t p = 0; p < npos; ++p) fibers[t.copy_map[p]].push_back(p);
    for (const auto& [v, ps] : fibers)
        for (std::size_t k = 1; k < ps.size(); ++k) {
            IntVector e = zero_vector(npos);
            e[ps[k - 1]] = 1;
            e[ps[k]] = -1;
            t.glue_equations.push_back(std::move(e));
        }
    return t;
}

inline ThinLift thin_lift(const BoundQuiver& q, const StringWord& s) { return thin_lift(q, s.word(), false); }
inline ThinLift thin_lift(const BoundQuiver& q, const BandWord& b) { return thin_lift(q, b.word(), true); }

namespace detail {

inline std::vector<IntVector> arrow_rays(const BoundQuiver& thin) {
    std::vector<IntVector> rays;
    for (const auto& a : thin.arrows()) {
        IntVector r = zero_vector(thin.num_vertices());
        r[a.source] += 1;
        r[a.target] -= 1;
        rays.push_back(std::move(r));
    }
    return rays;
}

// iota: e_i goes to the sum of its copies, so a lifted coordinate is the original one.
inline IntVector iota(const std::vector<std::size_t>& copy_map, const std::vector<std::size_t>& support, const IntVector& x) {
    std::map<std::size_t, std::size_t> idx;
    for (std::size_t k = 0; k < support.size(); ++k) idx[support[k]] = k;
    IntVector y;
    for (auto v : copy_map) y.push_back(x[idx.at(v)]);
    return y;
}

// Read one copy per fiber. Only meaningful on the glued subspace.
inline IntVector pull_back(const std::vector<std::size_t>& copy_map, const std::vector<std::size_t>& support, const IntVector& y) {
    IntVector x;
    for (auto v : support) {
        const auto it = std::find(copy_map.begin(), copy_map.end(), v);
        x.push_back(y[static_cast<std::size_t>(it - copy_map.begin())]);
    }
    return x;
}

inline RationalCone descend(const ThinLift& t, const std::vector<std::size_t>& support, const RationalCone& lifted) {
    const RationalCone cut = intersect_subspace(lifted, t.glue_equations);
    std::vector<IntVector> rays, lin;
    for (const auto& r : cut.rays) rays.push_back(pull_back(t.copy_map, support, r));
    for (const auto& l : cut.lineality) lin.push_back(pull_back(t.copy_map, support, l));
    return convert(RationalCone::from_generators(support.size(), std::move(rays), std::move(lin)));
}

} // namespace detail

inline RationalCone thin_rays(const ThinLift& t) {
    return convert(RationalCone::from_generators(t.thin_quiver.num_vertices(), detail::arrow_rays(t.thin_quiver)));
}

inline RationalCone thin_rays(const BoundQuiver& q, const StringWord& s) { return thin_rays(thin_lift(q, s)); }
inline RationalCone thin_rays(const BoundQuiver& q, const BandWord& b) { return thin_rays(thin_lift(q, b)); }

inline StabilityCone lift_and_cut(const BoundQuiver& q, const StringWord& s) {
    detail::require_special_biserial(q);
    const ThinLift t = thin_lift(q, s);
    const DimVector dim = dimension_vector(s);
    return detail::assemble({format_walk(q, s.word()), ModuleKind::string}, dim, detail::descend(t, dim.support(), thin_rays(t)));
}

inline StabilityCone lift_and_cut(const BoundQuiver& q, const BandWord& b) {
    detail::require_special_biserial(q);
    const ThinLift t = thin_lift(q, b);
    const DimVector dim = dimension_vector(b);
    return detail::assemble({format_walk(q, b.word()), ModuleKind::band}, dim, detail::descend(t, dim.support(), thin_rays(t)));
}

// ---------------------------------------------------------------------------
// Minimal admissible sums of thin rays.

struct AdmissibleSum {
    IntVector ray;                     // support coordinates
    IntVector lifted;                  // iota(ray)
    std::vector<std::size_t> letters;  // thin arrows used
    std::vector<Rational> coefficients; // one per entry of letters
    bool minimal = false;
};

namespace detail {

inline bool admissible_nonzero(const std::vector<IntVector>& thin, const std::vector<std::size_t>& subset,
                               const ThinLift& t) {
    if (subset.empty()) return false;
    std::vector<IntVector> gens;
    for (auto k : subset) gens.push_back(thin[k]);
    const auto n = t.thin_quiver.num_vertices();
    const RationalCone cut = intersect_subspace(RationalCone::from_generators(n, std::move(gens)), t.glue_equations);
    return !cut.rays.empty() || !cut.lineality.empty();
}

} // namespace detail

inline AdmissibleSum minimal_admissible_certify(const BoundQuiver& q, const StringWord& s, const IntVector& ray,
                                                std::size_t bound = 24) {
    const StabilityCone c = lift_and_cut(q, s);
    require_same_size(ray.size(), c.support.size());
    if (!c.support_cone.contains(ray)) throw DomainError("vector is not in the stability cone");
    const ThinLift t = thin_lift(q, s);
    const auto thin = detail::arrow_rays(t.thin_quiver);

    AdmissibleSum out;
    out.ray = ray;
    out.lifted = detail::iota(t.copy_map, c.support, ray);
    const auto sol = solve_columns(to_rational(thin), to_rational(out.lifted));
    if (!sol) throw std::logic_error("lifted vector outside the span of thin rays");
    for (std::size_t k = 0; k < thin.size(); ++k) {
        if (sol->x[k] < 0) throw std::logic_error("negative coefficient in an admissible sum");
        if (sol->x[k] > 0) {
            out.letters.push_back(k);
            out.coefficients.push_back(sol->x[k]);
        }
    }
    if (out.letters.size() > bound) throw DomainError("admissible sum support exceeds the subset bound");
    out.minimal = !out.letters.empty();
    for (std::size_t drop = 0; drop < out.letters.size() && out.minimal; ++drop) {
        std::vector<std::size_t> sub;
        for (std::size_t k = 0; k < out.letters.size(); ++k)
            if (k != drop) sub.push_back(out.letters[k]);
        if (detail::admissible_nonzero(thin, sub, t)) out.minimal = false;
    }
    return out;
}

// Exhaustive search over subsets of thin arrows, smallest first.
inline std::vector<AdmissibleSum> minimal_admissible_sums(const BoundQuiver& q, const StringWord& s, std::size_t bound = 16) {
    detail::require_special_biserial(q);
    const ThinLift t = thin_lift(q, s);
    const auto thin = detail::arrow_rays(t.thin_quiver);
    const std::size_t k = thin.size();
    if (k > bound) throw DomainError("word too long for exhaustive subset search");
    const auto support = dimension_vector(s).support();

    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint64_t a, std::uint64_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });

    std::vector<std::uint64_t> found;
    std::vector<AdmissibleSum> out;
    for (auto m : masks) {
        if (std::any_of(found.begin(), found.end(), [&](std::uint64_t f) { return (f & m) == f; })) continue;
        std::vector<std::size_t> subset;
        std::vector<IntVector> gens;
        for (std::size_t i = 0; i < k; ++i)
            if (m >> i & 1) {
                subset.push_back(i);
                gens.push_back(thin[i]);
            }
        const RationalCone cut = intersect_subspace(
            RationalCone::from_generators(t.thin_quiver.num_vertices(), std::move(gens)), t.glue_equations);
        if (cut.rays.empty()) continue;
        if (cut.rays.size() != 1 || !cut.lineality.empty()) throw std::logic_error("minimal admissible cone is not a ray");
        found.push_back(m);
        AdmissibleSum a;
        a.lifted = cut.rays.front();
        a.ray = detail::pull_back(t.copy_map, support, a.lifted);
        const auto sol = solve_columns(to_rational(thin), to_rational(a.lifted));
        for (auto i : subset) {
            a.letters.push_back(i);
            a.coefficients.push_back(sol->x[i]);
        }
        a.minimal = true;
        out.push_back(std::move(a));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Band positions, g-vectors and the families b^r w.

struct BandShape {
    std::vector<Direction> dirs;    // letter i joins positions i and i+1 (mod n)
    std::vector<std::size_t> vertex; // vertex of each position
    std::size_t size() const { return dirs.size(); }
};

inline BandShape band_shape(const BandWord& b) {
    BandShape s;
    for (const auto& l : b.word().letters()) s.dirs.push_back(l.dir);
    s.vertex.assign(b.word().vertices().begin(), b.word().vertices().end() - 1);
    return s;
}

inline BandShape opposite_shape(BandShape s) {
    for (auto& d : s.dirs) d = flip(d);
    return s;
}

inline IntVector letter_ray(const BandShape& s, std::size_t i) {
    const std::size_t n = s.size();
    IntVector r = zero_vector(n);
    const std::size_t j = (i + 1) % n;
    r[i] += s.dirs[i] == Direction::direct ? 1 : -1;
    r[j] += s.dirs[i] == Direction::direct ? -1 : 1;
    return r;
}

inline int position_sign(const BandShape& s, std::size_t p) {
    const std::size_t n = s.size();
    const Direction before = s.dirs[(p + n - 1) % n], after = s.dirs[p];
    if (before == Direction::inverse && after == Direction::direct) return 1;
    if (before == Direction::direct && after == Direction::inverse) return -1;
    return 0;
}

// +1 on tops, -1 on socles.
inline IntVector band_g_positions(const BandShape& s) {
    IntVector g = zero_vector(s.size());
    for (std::size_t p = 0; p < s.size(); ++p) g[p] = position_sign(s, p);
    return g;
}

// g of the string alpha_1 ... alpha_m read at band positions 0..m.
inline IntVector prefix_g_positions(const BandShape& s, std::size_t m) {
    const std::size_t n = s.size();
    if (m >= n) throw DomainError("prefix length must be below the band length");
    const auto direct = [&](std::size_t k) { return s.dirs[k - 1] == Direction::direct; }; // alpha_k, 1-based
    IntVector g = zero_vector(n);
    g[0] += (m == 0 || direct(1)) ? 1 : 0;
    if (m >= 1 && !direct(m)) g[m] += 1;
    if (direct(m + 1)) g[(m + 1) % n] -= 1;
    if (!direct(n)) g[n - 1] -= 1;
    for (std::size_t i = 2; i <= m; ++i) g[i - 1] += position_sign(s, i - 1);
    return g;
}

// Sum over the copies of each vertex.
inline IntVector positions_to_vertices(const BandShape& s, const IntVector& x, std::size_t num_vertices) {
    IntVector out = zero_vector(num_vertices);
    for (std::size_t p = 0; p < s.size(); ++p) out[s.vertex[p]] += x[p];
    return out;
}

namespace detail {

inline void require_thin(const BandWord& b) {
    if (!dimension_vector(b).is_thin()) throw DomainError("band is not thin; lift it first");
}

inline IntVector to_support(const BandShape& s, const std::vector<std::size_t>& support, const IntVector& x) {
    IntVector out = zero_vector(support.size());
    for (std::size_t p = 0; p < s.size(); ++p) {
        const auto k = static_cast<std::size_t>(std::find(support.begin(), support.end(), s.vertex[p]) - support.begin());
        out[k] += x[p];
    }
    return out;
}

} // namespace detail

// g(M(b^r w)) with w the first m letters, in vertex coordinates.
inline IntVector g_vector(const BoundQuiver& q, const BandWord& b, std::size_t m, std::size_t r) {
    detail::require_thin(b);
    const BandShape s = band_shape(b);
    const IntVector pos = combine(Integer(r), band_g_positions(s), Integer(1), prefix_g_positions(s, m));
    return positions_to_vertices(s, pos, q.num_vertices());
}

inline IntVector band_g_vector(const BoundQuiver& q, const BandWord& b) {
    detail::require_thin(b);
    const BandShape s = band_shape(b);
    return positions_to_vertices(s, band_g_positions(s), q.num_vertices());
}

enum class BoundaryCase { factor, submodule, neither };

inline BoundaryCase boundary_case(const BandShape& s, std::size_t m) {
    const Direction last = s.dirs.back(), next = s.dirs[m];
    if (last == Direction::inverse && next == Direction::direct) return BoundaryCase::factor;
    if (last == Direction::direct && next == Direction::inverse) return BoundaryCase::submodule;
    return BoundaryCase::neither;
}

// Generators of D(M(b^r w)) over the thin quiver of b, in position coordinates:
// the thin rays except those of alpha_{m+1} and alpha_n, plus the signed g-vector.
inline std::vector<IntVector> family_generators(const BandShape& s, std::size_t m, std::size_t r) {
    const std::size_t n = s.size();
    if (m >= n) throw DomainError("prefix length must be below the band length");
    if (r == 0) throw DomainError("family parameter r must be positive");
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < n; ++i)
        if (i != m && i != n - 1) gens.push_back(letter_ray(s, i));
    const Integer k(r - 1);
    switch (boundary_case(s, m)) {
    case BoundaryCase::factor:
        gens.push_back(combine(k, band_g_positions(s), Integer(1), prefix_g_positions(s, m)));
        break;
    case BoundaryCase::submodule: {
        const BandShape op = opposite_shape(s);
        gens.push_back(negated(combine(k, band_g_positions(op), Integer(1), prefix_g_positions(op, m))));
        break;
    }
    case BoundaryCase::neither: break;
    }
    return gens;
}

// D(M(b^r w)) from the family generators, cut down to the original quiver when b
// is not thin.
inline StabilityCone family_cone(const BoundQuiver& q, const BandWord& b, std::size_t m, std::size_t r) {
    detail::require_special_biserial(q);
    const BandShape s = band_shape(b);
    const StringWord w = concat_power(q, b, r, m);
    const DimVector dim = dimension_vector(w);
    const ThinLift t = thin_lift(q, b);
    const auto lifted = RationalCone::from_generators(s.size(), family_generators(s, m, r));
    return detail::assemble({format_walk(q, w.word()), ModuleKind::string}, dim, detail::descend(t, dim.support(), lifted));
}

inline StabilityCone brw_cone(const BoundQuiver& q, const BandWord& b, std::size_t m, std::size_t r) {
    detail::require_thin(b);
    return family_cone(q, b, m, r);
}

// ---------------------------------------------------------------------------
// Simplicial cover of a band cone.

struct CoverPiece {
    std::pair<std::size_t, std::size_t> omitted; // letter indices, first < second
    RationalCone piece;
};

struct SimplicialCover {
    bool lifted = false;      // coordinates: band positions if lifted, else the support
    RationalCone band_cone;
    IntVector g;
    std::vector<CoverPiece> pieces;
};

namespace detail {

inline SimplicialCover position_cover(const BandShape& s) {
    const std::size_t n = s.size();
    SimplicialCover c;
    c.lifted = true;
    std::vector<IntVector> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(letter_ray(s, i));
    c.band_cone = convert(RationalCone::from_generators(n, all));
    c.g = band_g_positions(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<IntVector> gens;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j) gens.push_back(all[k]);
            gens.push_back(c.g);
            c.pieces.push_back({{i, j}, convert(RationalCone::from_generators(n, std::move(gens)))});
        }
    return c;
}

inline RationalCone map_cone(const RationalCone& c, const BandShape& s, const std::vector<std::size_t>& support) {
    std::vector<IntVector> rays, lin;
    for (const auto& r : c.rays) rays.push_back(to_support(s, support, r));
    for (const auto& l : c.lineality) lin.push_back(to_support(s, support, l));
    return convert(RationalCone::from_generators(support.size(), std::move(rays), std::move(lin)));
}

} // namespace detail

// Thin bands are covered in support coordinates; other bands through their thin lift.
inline SimplicialCover simplicial_cover(const BoundQuiver& q, const BandWord& b) {
    detail::require_special_biserial(q);
    const BandShape s = band_shape(b);
    SimplicialCover c = detail::position_cover(s);
    const DimVector dim = dimension_vector(b);
    if (!dim.is_thin()) return c;
    const auto support = dim.support();
    c.lifted = false;
    c.band_cone = detail::map_cone(c.band_cone, s, support);
    c.g = detail::to_support(s, support, c.g);
    for (auto& p : c.pieces) p.piece = detail::map_cone(p.piece, s, support);
    return c;
}

struct CoverCheck {
    bool pieces_inside = false;
    bool g_in_every_piece = false;
    bool hull_equal = false;
    std::size_t samples = 0;
    std::size_t uncovered = 0;
    bool ok() const { return pieces_inside && g_in_every_piece && hull_equal && uncovered == 0; }
};

inline CoverCheck verify_cover(const SimplicialCover& c, std::size_t samples = 100, std::uint64_t seed = 1) {
    CoverCheck out;
    out.pieces_inside = std::all_of(c.pieces.begin(), c.pieces.end(), [&](const CoverPiece& p) { return includes(c.band_cone, p.piece); });
    out.g_in_every_piece = std::all_of(c.pieces.begin(), c.pieces.end(), [&](const CoverPiece& p) { return p.piece.contains(c.g); });
    if (!c.pieces.empty()) {
        RationalCone hull = c.pieces.front().piece;
        for (const auto& p : c.pieces) hull = span_union(hull, p.piece);
        out.hull_equal = relate(hull, c.band_cone) == Relation::equal;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(0, 5);
    const auto& rays = c.band_cone.rays;
    while (out.samples < samples && !rays.empty()) {
        IntVector x = zero_vector(c.band_cone.ambient_dim);
        bool nonzero = false;
        for (const auto& r : rays) {
            const int k = coef(rng);
            nonzero |= k != 0;
            x = combine(Integer(1), x, Integer(k), r);
        }
        if (!nonzero) continue;
        ++out.samples;
        if (std::none_of(c.pieces.begin(), c.pieces.end(), [&](const CoverPiece& p) { return p.piece.contains(x); }))
            ++out.uncovered;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Approximating a point of a band cone by string cones.

struct FamilyStep {
    std::size_t r = 0;
    StabilityCone cone;
    bool contains_target = false; // exact
    double distance = 0;          // witness only
};

struct EpsWitness {
    Rational eps;
    std::optional<std::size_t> r; // least recorded r with distance below eps
};

struct ApproxFamily {
    BandWord rotation;
    std::size_t prefix_length = 0;
    std::size_t rotation_start = 0;              // letter of the input band that becomes alpha_1
    std::pair<std::size_t, std::size_t> omitted; // letters of the input band
    RatVector target;
    bool lifted = false;
    std::vector<FamilyStep> steps;
    std::vector<EpsWitness> witnesses;
};

inline std::vector<std::size_t> default_schedule(std::size_t k = 7) {
    std::vector<std::size_t> out;
    for (std::size_t e = 1; e <= k; ++e) out.push_back(std::size_t{1} << e);
    return out;
}

inline ApproxFamily approximate_family(const BoundQuiver& q, const BandWord& b, const RatVector& x,
                                       const std::vector<Rational>& eps_schedule,
                                       const std::vector<std::size_t>& r_schedule = default_schedule(),
                                       double tol = 1e-9) {
    const StabilityCone band = oracle_cone(q, b);
    require_same_size(x.size(), q.num_vertices());
    if (!band.cone.contains(x)) throw DomainError("point is not in the band cone");

    const BandShape s = band_shape(b);
    const std::size_t n = s.size();
    RatVector xp;
    for (std::size_t p = 0; p < n; ++p) xp.push_back(x[s.vertex[p]]);

    const SimplicialCover pos = detail::position_cover(s);
    const CoverPiece* chosen = nullptr;
    for (const auto& p : pos.pieces)
        if (p.piece.contains(xp)) {
            chosen = &p;
            break;
        }
    if (!chosen) throw std::logic_error("point of the band cone lies in no cover piece");

    const auto [i, j] = chosen->omitted;
    const std::size_t start_a = (i + 1) % n, m_a = (j + n - start_a) % n;
    const std::size_t start_b = (j + 1) % n, m_b = (i + n - start_b) % n;
    const bool use_a = m_a <= m_b;

    ApproxFamily f{rotate(q, b, use_a ? start_a : start_b), use_a ? m_a : m_b, use_a ? start_a : start_b,
                   chosen->omitted, x, !dimension_vector(b).is_thin(), {}, {}};

    RatVector xs;
    for (auto v : band.support) xs.push_back(x[v]);
    for (auto r : r_schedule) {
        FamilyStep st;
        st.r = r;
        st.cone = family_cone(q, f.rotation, f.prefix_length, r);
        st.contains_target = st.cone.support_cone.contains(xs);
        st.distance = st.contains_target ? 0.0 : cone_distance(st.cone.support_cone, xs);
        if (st.distance < tol) st.distance = 0.0;
        f.steps.push_back(std::move(st));
    }
    for (const auto& e : eps_schedule) {
        EpsWitness w{e, std::nullopt};
        for (const auto& st : f.steps)
            if (st.distance < to_double(e)) {
                w.r = st.r;
                break;
            }
        f.witnesses.push_back(std::move(w));
    }
    return f;
}

// ---------------------------------------------------------------------------
// A thin band cone as a union of string cones obtained by removing one arrow.

struct RemovalCheck {
    std::size_t letter = 0;
    std::string word;
    bool cone_equal = false;
    bool poset_equal = false;
};

struct PairCheck {
    std::size_t first = 0, second = 0;
    bool equal = false;
};

struct BandStringUnion {
    std::vector<PairCheck> pairs;
    std::vector<RemovalCheck> removals;
    bool all_pairs_equal = false;
    bool removals_agree = false;
};

namespace detail {

// Reachability in the thin quiver of the band, optionally without one letter.
inline std::vector<std::vector<bool>> band_closure(const BandShape& s, std::optional<std::size_t> skip) {
    const std::size_t n = s.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t p = 0; p < n; ++p) reach[p][p] = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (skip && *skip == i) continue;
        const std::size_t j = (i + 1) % n;
        if (s.dirs[i] == Direction::direct)
            reach[i][j] = true;
        else
            reach[j][i] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            if (reach[a][k])
                for (std::size_t c = 0; c < n; ++c)
                    if (reach[k][c]) reach[a][c] = true;
    return reach;
}

} // namespace detail

// The string left after deleting letter i of the band.
inline StringWord removal_string(const BoundQuiver& q, const BandWord& b, std::size_t i) {
    return prefix(q, rotate(q, b, i + 1), b.size() - 1);
}

inline BandStringUnion band_string_union(const BoundQuiver& q, const BandWord& b) {
    detail::require_thin(b);
    const BandShape s = band_shape(b);
    const std::size_t n = s.size();
    const StabilityCone band = oracle_cone(q, b);
    const auto full = detail::band_closure(s, std::nullopt);

    BandStringUnion out;
    std::vector<StabilityCone> cones;
    for (std::size_t i = 0; i < n; ++i) {
        const StringWord v = removal_string(q, b, i);
        cones.push_back(lift_and_cut(q, v));
        RemovalCheck rc;
        rc.letter = i;
        rc.word = format_walk(q, v.word());
        rc.cone_equal = relate(cones.back().cone, band.cone) == Relation::equal;
        rc.poset_equal = detail::band_closure(s, i) == full;
        out.removals.push_back(std::move(rc));
    }
    out.all_pairs_equal = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            PairCheck pc{i, j, relate(span_union(cones[i].cone, cones[j].cone), band.cone) == Relation::equal};
            out.all_pairs_equal &= pc.equal;
            out.pairs.push_back(pc);
        }
    out.removals_agree = std::all_of(out.removals.begin(), out.removals.end(),
                                     [](const RemovalCheck& r) { return r.cone_equal == r.poset_equal; });
    return out;
}

} // namespace stabcone
