#pragma once

// Explicit representations of string and band modules, and g-vectors computed
// from a minimal projective presentation by exact linear algebra.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "quiver.hpp"
#include "word.hpp"

namespace stabcone {

// Every arrow acts by sending basis vector `from` to basis vector `to` (coefficient 1),
// summed over its entries; unlisted basis vectors go to zero.
struct Representation {
    std::size_t num_vertices = 0;
    std::vector<std::size_t> basis_vertex;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> action; // per arrow

    std::vector<std::size_t> basis_at(std::size_t v) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < basis_vertex.size(); ++i)
            if (basis_vertex[i] == v) out.push_back(i);
        return out;
    }
};

inline Representation string_representation(const BoundQuiver& q, const StringWord& s) {
    const Word& w = s.word();
    Representation m;
    m.num_vertices = q.num_vertices();
    m.basis_vertex = w.vertices();
    m.action.resize(q.num_arrows());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Letter l = w.letters()[i];
        if (l.dir == Direction::direct)
            m.action[l.arrow].push_back({i, i + 1});
        else
            m.action[l.arrow].push_back({i + 1, i});
    }
    return m;
}

// M(b, 1, 1): one basis vector per band position, the last letter closing the cycle.
inline Representation band_representation(const BoundQuiver& q, const BandWord& b) {
    const Word& w = b.word();
    const std::size_t n = w.size();
    Representation m;
    m.num_vertices = q.num_vertices();
    m.basis_vertex.assign(w.vertices().begin(), w.vertices().end() - 1);
    m.action.resize(q.num_arrows());
    for (std::size_t i = 0; i < n; ++i) {
        const Letter l = w.letters()[i];
        const std::size_t j = (i + 1) % n;
        if (l.dir == Direction::direct)
            m.action[l.arrow].push_back({i, j});
        else
            m.action[l.arrow].push_back({j, i});
    }
    return m;
}

namespace detail {

// Apply arrow a to a vector given in global basis coordinates.
inline IntVector act(const Representation& m, std::size_t a, const IntVector& x) {
    IntVector y = zero_vector(x.size());
    for (auto [from, to] : m.action[a])
        if (x[from] != 0) y[to] += x[from];
    return y;
}

inline IntVector restrict_to(const IntVector& x, const std::vector<std::size_t>& idx) {
    IntVector out;
    for (auto i : idx) out.push_back(x[i]);
    return out;
}

} // namespace detail

// g = [P_0] - [P_-1] for the minimal presentation P_-1 -> P_0 -> M -> 0.
inline IntVector g_vector_oracle(const BoundQuiver& q, const Representation& m, std::size_t cap = kDefaultPathCap) {
    const std::size_t nv = q.num_vertices();
    const std::size_t dim = m.basis_vertex.size();
    std::vector<std::vector<std::size_t>> local(nv);
    for (std::size_t v = 0; v < nv; ++v) local[v] = m.basis_at(v);

    // Top: basis vectors chosen greedily outside the radical.
    struct Generator {
        std::size_t vertex;
        IntVector vec; // global coordinates
    };
    std::vector<Generator> gens;
    for (std::size_t v = 0; v < nv; ++v) {
        if (local[v].empty()) continue;
        std::vector<IntVector> span;
        for (auto a : q.arrows_in(v))
            for (auto i : local[q.arrow(a).source])
                span.push_back(detail::restrict_to(detail::act(m, a, unit_vector(dim, i)), local[v]));
        std::size_t r = rank(span);
        for (auto i : local[v]) {
            auto cand = span;
            cand.push_back(detail::restrict_to(unit_vector(dim, i), local[v]));
            const std::size_t r2 = rank(cand);
            if (r2 > r) {
                span = std::move(cand);
                r = r2;
                gens.push_back({v, unit_vector(dim, i)});
            }
        }
    }

    // Basis of P_0 = sum of P(vertex of each generator): pairs (generator, path).
    std::vector<std::vector<Path>> paths;
    for (const auto& g : gens) paths.push_back(projective_paths(q, g.vertex, cap));
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> p0_at(nv);
    std::map<std::pair<std::size_t, Path>, std::pair<std::size_t, std::size_t>> p0_index; // -> (vertex, local index)
    for (std::size_t t = 0; t < gens.size(); ++t)
        for (std::size_t k = 0; k < paths[t].size(); ++k) {
            const std::size_t v = path_end(q, gens[t].vertex, paths[t][k]);
            p0_index[{t, paths[t][k]}] = {v, p0_at[v].size()};
            p0_at[v].push_back({t, k});
        }

    // Kernel of P_0 -> M, vertex by vertex.
    std::vector<std::vector<IntVector>> kernel(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        const std::size_t cols = p0_at[v].size();
        if (cols == 0) continue;
        std::vector<IntVector> rows(local[v].size(), zero_vector(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            auto [t, k] = p0_at[v][c];
            IntVector x = gens[t].vec;
            for (auto a : paths[t][k]) x = detail::act(m, a, x);
            auto y = detail::restrict_to(x, local[v]);
            for (std::size_t r = 0; r < rows.size(); ++r) rows[r][c] = y[r];
        }
        kernel[v] = rows.empty() ? std::vector<IntVector>{} : nullspace(rows, cols);
        if (rows.empty())
            for (std::size_t c = 0; c < cols; ++c) kernel[v].push_back(unit_vector(cols, c));
    }

    // Top of the kernel: dim K_v minus the rank of the arrows' images in K_v.
    std::vector<std::vector<IntVector>> rad(nv);
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const std::size_t s = q.arrow(a).source, t = q.arrow(a).target;
        for (const auto& kappa : kernel[s]) {
            IntVector img = zero_vector(p0_at[t].size());
            for (std::size_t c = 0; c < kappa.size(); ++c) {
                if (kappa[c] == 0) continue;
                auto [g, k] = p0_at[s][c];
                Path p = paths[g][k];
                p.push_back(a);
                auto it = p0_index.find({g, p});
                if (it != p0_index.end()) img[it->second.second] += kappa[c];
            }
            rad[t].push_back(std::move(img));
        }
    }

    IntVector g = zero_vector(nv);
    for (const auto& gen : gens) g[gen.vertex] += 1;
    for (std::size_t v = 0; v < nv; ++v)
        g[v] -= Integer(kernel[v].size()) - Integer(rank(rad[v]));
    return g;
}

inline IntVector g_vector_oracle(const BoundQuiver& q, const StringWord& s, std::size_t cap = kDefaultPathCap) {
    return g_vector_oracle(q, string_representation(q, s), cap);
}

inline IntVector g_vector_oracle(const BoundQuiver& q, const BandWord& b, std::size_t cap = kDefaultPathCap) {
    return g_vector_oracle(q, band_representation(q, b), cap);
}

} // namespace stabcone
