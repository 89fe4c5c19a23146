#pragma once

// Finite posets given by their Hasse quivers, connected compatible partitions, and
// the face lattice of the thin module cone D(M_P).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cone.hpp"
#include "error.hpp"
#include "quiver.hpp"

namespace stabcone {

class Poset {
public:
    Poset() = default;

    // cover holds pairs (lower, upper). Rejects cycles and covers implied by others.
    Poset(std::vector<std::string> elements, std::vector<std::pair<std::size_t, std::size_t>> cover)
        : elements_(std::move(elements)), cover_(std::move(cover)) {
        const std::size_t n = elements_.size();
        std::set<std::string> names(elements_.begin(), elements_.end());
        if (names.size() != n) throw DomainError("duplicate poset element");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (auto [x, y] : cover_) {
            if (x >= n || y >= n) throw DomainError("cover relation refers to an unknown element");
            if (x == y) throw DomainError("cover relation is a loop");
            if (!seen.insert({x, y}).second) throw DomainError("repeated cover relation");
        }
        closure_.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) closure_[i][i] = true;
        for (auto [x, y] : cover_) closure_[x][y] = true;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (closure_[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (closure_[k][j]) closure_[i][j] = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (closure_[i][j] && closure_[j][i]) throw DomainError("cover relations contain a cycle");
        for (auto [x, y] : cover_)
            for (std::size_t z = 0; z < n; ++z)
                if (z != x && z != y && closure_[x][z] && closure_[z][y])
                    throw DomainError("relation " + elements_[x] + " < " + elements_[y] + " is not a covering relation");
        std::sort(cover_.begin(), cover_.end());
    }

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& cover() const { return cover_; }
    bool leq(std::size_t x, std::size_t y) const { return closure_[x][y]; }

    bool connected() const {
        if (elements_.empty()) return false;
        std::vector<bool> seen(size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto [x, y] : cover_) {
                if (x == v && !seen[y]) seen[y] = true, stack.push_back(y);
                if (y == v && !seen[x]) seen[x] = true, stack.push_back(x);
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }

    friend bool operator==(const Poset& a, const Poset& b) { return a.elements_ == b.elements_ && a.cover_ == b.cover_; }

private:
    std::vector<std::string> elements_;
    std::vector<std::pair<std::size_t, std::size_t>> cover_;
    std::vector<std::vector<bool>> closure_;
};

// An arrow y -> x records x covered by y.
inline Poset poset_from_quiver(const BoundQuiver& q) {
    std::vector<std::pair<std::size_t, std::size_t>> cover;
    for (const auto& a : q.arrows()) cover.push_back({a.target, a.source});
    return Poset(q.vertices(), std::move(cover));
}

inline BoundQuiver hasse_quiver(const Poset& p) {
    std::vector<Arrow> arrows;
    std::size_t k = 0;
    for (auto [x, y] : p.cover()) arrows.push_back({"h" + std::to_string(k++), y, x});
    return BoundQuiver(p.elements(), std::move(arrows), {});
}

struct Partition {
    std::vector<std::vector<std::size_t>> blocks;                 // sorted by least element
    std::vector<std::pair<std::size_t, std::size_t>> quotient_order; // block pairs (lower, upper) from covers
    friend bool operator==(const Partition&, const Partition&) = default;
};

inline constexpr std::size_t kDefaultPosetCap = 8;

namespace detail {

inline bool block_connected(const Poset& p, const std::vector<std::size_t>& block) {
    std::set<std::size_t> in(block.begin(), block.end()), seen{block.front()};
    std::vector<std::size_t> stack{block.front()};
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto [x, y] : p.cover()) {
            if (!in.count(x) || !in.count(y)) continue;
            if (x == v && seen.insert(y).second) stack.push_back(y);
            if (y == v && seen.insert(x).second) stack.push_back(x);
        }
    }
    return seen.size() == block.size();
}

inline std::optional<Partition> compatible_partition(const Poset& p, const std::vector<std::size_t>& label, std::size_t nblocks) {
    Partition part;
    part.blocks.resize(nblocks);
    for (std::size_t i = 0; i < label.size(); ++i) part.blocks[label[i]].push_back(i);
    for (const auto& b : part.blocks)
        if (!block_connected(p, b)) return std::nullopt;
    std::set<std::pair<std::size_t, std::size_t>> rel;
    for (auto [x, y] : p.cover())
        if (label[x] != label[y]) rel.insert({label[x], label[y]});
    // the quotient relation closes to a partial order iff it has no cycle
    std::vector<std::vector<bool>> reach(nblocks, std::vector<bool>(nblocks, false));
    for (auto [a, b] : rel) reach[a][b] = true;
    for (std::size_t k = 0; k < nblocks; ++k)
        for (std::size_t i = 0; i < nblocks; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < nblocks; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    for (std::size_t i = 0; i < nblocks; ++i)
        if (reach[i][i]) return std::nullopt;
    part.quotient_order.assign(rel.begin(), rel.end());
    return part;
}

} // namespace detail

// Restricted growth strings in lexicographic order, so blocks come sorted by least element.
inline std::vector<Partition> enumerate_ccp(const Poset& p, std::size_t cap = kDefaultPosetCap) {
    const std::size_t n = p.size();
    if (n > cap) throw DomainError("poset has " + std::to_string(n) + " elements, above the cap of " + std::to_string(cap));
    if (!p.connected()) throw DomainError("poset is not connected");
    std::vector<Partition> out;
    std::vector<std::size_t> label(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
        if (i == n) {
            if (auto part = detail::compatible_partition(p, label, used)) out.push_back(std::move(*part));
            return;
        }
        for (std::size_t b = 0; b <= used; ++b) {
            label[i] = b;
            self(self, i + 1, b == used ? used + 1 : used);
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline IntVector cover_ray(const Poset& p, std::pair<std::size_t, std::size_t> c) {
    IntVector r = zero_vector(p.size());
    r[c.second] += 1;
    r[c.first] -= 1;
    return r;
}

// D(M_P): one generator e_y - e_x per covering relation x < y.
inline RationalCone order_cone(const Poset& p) {
    std::vector<IntVector> rays;
    for (const auto& c : p.cover()) rays.push_back(cover_ray(p, c));
    return convert(RationalCone::from_generators(p.size(), std::move(rays)));
}

struct FaceCorrespondence {
    std::size_t faces = 0;
    std::size_t partitions = 0;
    std::size_t rays = 0;
    std::size_t covers = 0;
    bool counts_match = false;
    bool bijective = false;
    bool rays_match = false;
    bool refinement_matches = false;
    std::vector<Partition> partition_list;
    std::vector<std::optional<std::size_t>> face_of; // index into lattice.faces per partition
    FaceLattice lattice;

    bool ok() const { return counts_match && bijective && rays_match && refinement_matches; }
};

namespace detail {

inline bool refines(const Partition& fine, const Partition& coarse, std::size_t n) {
    std::vector<std::size_t> label(n);
    for (std::size_t b = 0; b < coarse.blocks.size(); ++b)
        for (auto x : coarse.blocks[b]) label[x] = b;
    for (const auto& b : fine.blocks)
        for (auto x : b)
            if (label[x] != label[b.front()]) return false;
    return true;
}

inline bool face_below(const Face& a, const Face& b) {
    return std::includes(b.ray_indices.begin(), b.ray_indices.end(), a.ray_indices.begin(), a.ray_indices.end());
}

} // namespace detail

// A partition goes to the face spanned by the covers inside its blocks.
inline FaceCorrespondence face_correspondence(const Poset& p, std::size_t cap = kDefaultPosetCap) {
    FaceCorrespondence r;
    r.partition_list = enumerate_ccp(p, cap);
    const RationalCone c = order_cone(p);
    r.lattice = face_lattice(c);
    r.faces = r.lattice.faces.size();
    r.partitions = r.partition_list.size();
    r.rays = c.rays.size();
    r.covers = p.cover().size();
    r.counts_match = r.faces == r.partitions;

    std::map<IntVector, std::size_t> ray_index;
    for (std::size_t i = 0; i < c.rays.size(); ++i) ray_index[c.rays[i]] = i;
    std::map<std::vector<std::size_t>, std::size_t> face_index;
    for (std::size_t i = 0; i < r.lattice.faces.size(); ++i) face_index[r.lattice.faces[i].ray_indices] = i;

    std::set<std::size_t> hit;
    bool every_partition_hits = true;
    for (const auto& part : r.partition_list) {
        std::vector<std::size_t> label(p.size());
        for (std::size_t b = 0; b < part.blocks.size(); ++b)
            for (auto x : part.blocks[b]) label[x] = b;
        std::vector<std::size_t> idx;
        bool all_rays = true;
        for (const auto& cv : p.cover())
            if (label[cv.first] == label[cv.second]) {
                const auto it = ray_index.find(cover_ray(p, cv));
                if (it == ray_index.end())
                    all_rays = false;
                else
                    idx.push_back(it->second);
            }
        std::sort(idx.begin(), idx.end());
        const auto f = face_index.find(idx);
        if (!all_rays || f == face_index.end()) {
            r.face_of.push_back(std::nullopt);
            every_partition_hits = false;
        } else {
            r.face_of.push_back(f->second);
            hit.insert(f->second);
        }
    }
    r.bijective = every_partition_hits && hit.size() == r.partitions && hit.size() == r.faces;

    // rays against partitions with one two-element block and singletons elsewhere
    std::size_t doubletons = 0;
    bool doubleton_rays = true;
    for (std::size_t i = 0; i < r.partition_list.size(); ++i) {
        const auto& part = r.partition_list[i];
        if (part.blocks.size() + 1 != p.size()) continue;
        ++doubletons;
        if (!r.face_of[i] || r.lattice.faces[*r.face_of[i]].dim != 1) doubleton_rays = false;
    }
    r.rays_match = doubleton_rays && doubletons == r.rays && r.rays == r.covers;

    r.refinement_matches = r.bijective;
    for (std::size_t i = 0; i < r.partition_list.size() && r.refinement_matches; ++i)
        for (std::size_t j = 0; j < r.partition_list.size(); ++j) {
            const bool ref = detail::refines(r.partition_list[i], r.partition_list[j], p.size());
            const bool sub = detail::face_below(r.lattice.faces[*r.face_of[i]], r.lattice.faces[*r.face_of[j]]);
            if (ref != sub) {
                r.refinement_matches = false;
                break;
            }
        }
    return r;
}

struct MonotoneDual {
    RationalCone dual;
    RationalCone monotone; // x_i <= x_j for every covering relation i < j
    bool equal = false;
    std::size_t facets = 0;
};

inline MonotoneDual monotone_dual(const Poset& p) {
    MonotoneDual m;
    m.dual = dual_cone(order_cone(p));
    std::vector<IntVector> ineqs;
    for (const auto& c : p.cover()) ineqs.push_back(negated(cover_ray(p, c)));
    m.monotone = convert(RationalCone::from_halfspaces(p.size(), {}, std::move(ineqs)));
    m.equal = relate(m.dual, m.monotone) == Relation::equal;
    m.facets = m.dual.inequalities.size();
    return m;
}

} // namespace stabcone
