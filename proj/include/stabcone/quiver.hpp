#pragma once

// Bound quivers A = KQ/I with monomial zero relations.
//
// Paths are sequences of arrow indices read left to right: [a, b] traverses a then b.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace stabcone {

struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

using Path = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultPathCap = 64;

class BoundQuiver {
public:
    BoundQuiver() = default;

    BoundQuiver(std::vector<std::string> vertices, std::vector<Arrow> arrows, std::vector<Path> relations)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows)), relations_(std::move(relations)) {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (!vertex_ids_.emplace(vertices_[i], i).second) throw DomainError("duplicate vertex " + vertices_[i]);
        out_.resize(vertices_.size());
        in_.resize(vertices_.size());
        for (std::size_t i = 0; i < arrows_.size(); ++i) {
            const Arrow& a = arrows_[i];
            if (a.source >= vertices_.size() || a.target >= vertices_.size())
                throw DomainError("arrow " + a.name + " has an undeclared endpoint");
            if (!arrow_ids_.emplace(a.name, i).second) throw DomainError("duplicate arrow " + a.name);
            out_[a.source].push_back(i);
            in_[a.target].push_back(i);
        }
        for (const auto& r : relations_) {
            if (r.size() < 2) throw DomainError("relations must have length at least 2");
            for (auto x : r)
                if (x >= arrows_.size()) throw DomainError("relation uses an unknown arrow");
            if (!is_composable(r)) throw DomainError("relation " + path_name(r) + " is not a composable path");
            max_relation_ = std::max(max_relation_, r.size());
        }
    }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Path>& relations() const { return relations_; }
    const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }
    const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
    const std::vector<std::size_t>& arrows_out(std::size_t v) const { return out_.at(v); }
    const std::vector<std::size_t>& arrows_in(std::size_t v) const { return in_.at(v); }
    std::size_t max_relation_length() const { return max_relation_; }

    std::optional<std::size_t> find_vertex(std::string_view name) const {
        auto it = vertex_ids_.find(std::string(name));
        if (it == vertex_ids_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> find_arrow(std::string_view name) const {
        auto it = arrow_ids_.find(std::string(name));
        if (it == arrow_ids_.end()) return std::nullopt;
        return it->second;
    }

    bool is_composable(const Path& p) const {
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (arrows_[p[i]].target != arrows_[p[i + 1]].source) return false;
        return true;
    }

    bool is_relation(const Path& p) const { return std::find(relations_.begin(), relations_.end(), p) != relations_.end(); }

    // Some relation is a suffix of p. Extending a relation-free path by one arrow
    // can only create a relation at its end, so this is the incremental test.
    bool ends_with_relation(const Path& p) const {
        for (const auto& r : relations_)
            if (r.size() <= p.size() && std::equal(r.rbegin(), r.rend(), p.rbegin())) return true;
        return false;
    }

    // Position of the first relation occurring as a contiguous subpath.
    std::optional<std::pair<std::size_t, std::size_t>> find_relation(const Path& p) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (const auto& r : relations_) {
            auto it = std::search(p.begin(), p.end(), r.begin(), r.end());
            if (it == p.end()) continue;
            const auto start = static_cast<std::size_t>(it - p.begin());
            if (!best || start < best->first) best = std::make_pair(start, start + r.size());
        }
        return best;
    }

    std::string path_name(const Path& p) const {
        std::string s;
        for (auto x : p) {
            if (!s.empty()) s += ' ';
            s += arrows_.at(x).name;
        }
        return s;
    }

    friend bool operator==(const BoundQuiver& a, const BoundQuiver& b) {
        return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_ && a.relations_ == b.relations_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<Path> relations_;
    std::map<std::string, std::size_t> vertex_ids_;
    std::map<std::string, std::size_t> arrow_ids_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    std::size_t max_relation_ = 0;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline bool valid_arrow_name(std::string_view s) {
    if (s.empty() || s.back() == '-' || s.front() == '@') return false;
    return s.find_first_of(":#, \t") == std::string_view::npos;
}

} // namespace detail

inline BoundQuiver parse_algebra(std::string_view text) {
    std::vector<std::string> vertices;
    std::map<std::string, std::size_t> vid;
    std::vector<Arrow> arrows;
    std::map<std::string, std::size_t> aid;
    std::vector<Path> relations;
    bool have_vertices = false;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        if (line.rfind("vertices:", 0) == 0) {
            if (have_vertices) throw ParseError(lineno, "vertices declared twice");
            have_vertices = true;
            for (auto& v : detail::split_ws(line.substr(9))) {
                if (!vid.emplace(v, vertices.size()).second) throw ParseError(lineno, "duplicate vertex " + v);
                vertices.push_back(v);
            }
            if (vertices.empty()) throw ParseError(lineno, "empty vertex list");
        } else if (line.rfind("arrow", 0) == 0 && line.size() > 5 && (line[5] == ' ' || line[5] == '\t')) {
            const auto colon = line.find(':');
            if (colon == std::string_view::npos) throw ParseError(lineno, "expected 'arrow NAME: SRC -> TGT'");
            const std::string name(detail::trim(line.substr(5, colon - 5)));
            if (!detail::valid_arrow_name(name)) throw ParseError(lineno, "invalid arrow name '" + name + "'");
            auto toks = detail::split_ws(line.substr(colon + 1));
            if (toks.size() != 3 || toks[1] != "->") throw ParseError(lineno, "expected 'SRC -> TGT'");
            auto s = vid.find(toks[0]);
            auto t = vid.find(toks[2]);
            if (s == vid.end()) throw ParseError(lineno, "unknown vertex " + toks[0]);
            if (t == vid.end()) throw ParseError(lineno, "unknown vertex " + toks[2]);
            if (!aid.emplace(name, arrows.size()).second) throw ParseError(lineno, "duplicate arrow " + name);
            arrows.push_back({name, s->second, t->second});
        } else if (line.rfind("zero:", 0) == 0) {
            Path p;
            for (auto& a : detail::split_ws(line.substr(5))) {
                auto it = aid.find(a);
                if (it == aid.end()) throw ParseError(lineno, "unknown arrow " + a);
                p.push_back(it->second);
            }
            if (p.size() < 2) throw ParseError(lineno, "a zero relation needs at least two arrows");
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                if (arrows[p[i]].target != arrows[p[i + 1]].source)
                    throw ParseError(lineno, "relation is not a composable path");
            relations.push_back(std::move(p));
        } else {
            throw ParseError(lineno, "unrecognised line '" + std::string(line) + "'");
        }
    }
    if (!have_vertices) throw ParseError(lineno, "missing vertices line");
    return BoundQuiver(std::move(vertices), std::move(arrows), std::move(relations));
}

inline std::string serialize(const BoundQuiver& q) {
    std::string s = "vertices:";
    for (const auto& v : q.vertices()) s += " " + v;
    s += "\n";
    for (const auto& a : q.arrows())
        s += "arrow " + a.name + ": " + q.vertex_name(a.source) + " -> " + q.vertex_name(a.target) + "\n";
    for (const auto& r : q.relations()) s += "zero: " + q.path_name(r) + "\n";
    return s;
}

// Arrows reversed, relation paths read backwards.
inline BoundQuiver opposite(const BoundQuiver& q) {
    std::vector<Arrow> arrows;
    for (const auto& a : q.arrows()) arrows.push_back({a.name, a.target, a.source});
    std::vector<Path> rels;
    for (auto r : q.relations()) {
        std::reverse(r.begin(), r.end());
        rels.push_back(std::move(r));
    }
    return BoundQuiver(q.vertices(), std::move(arrows), std::move(rels));
}

enum class Rule { in_degree, out_degree, right_composition, left_composition };

inline std::string to_string(Rule r) {
    switch (r) {
    case Rule::in_degree: return "in-degree";
    case Rule::out_degree: return "out-degree";
    case Rule::right_composition: return "right-composition";
    case Rule::left_composition: return "left-composition";
    }
    return "";
}

struct Violation {
    Rule rule;
    std::vector<std::string> witness; // vertex or arrow names

    friend bool operator==(const Violation&, const Violation&) = default;
    friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct Diagnostics {
    bool passed = true;
    std::vector<Violation> violations;
};

inline Diagnostics check_special_biserial(const BoundQuiver& q) {
    Diagnostics d;
    auto names = [&](const std::vector<std::size_t>& as) {
        std::vector<std::string> out;
        for (auto a : as) out.push_back(q.arrow(a).name);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        if (q.arrows_in(v).size() > 2) {
            auto w = names(q.arrows_in(v));
            w.insert(w.begin(), q.vertex_name(v));
            d.violations.push_back({Rule::in_degree, std::move(w)});
        }
        if (q.arrows_out(v).size() > 2) {
            auto w = names(q.arrows_out(v));
            w.insert(w.begin(), q.vertex_name(v));
            d.violations.push_back({Rule::out_degree, std::move(w)});
        }
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        // a followed by two distinct arrows: one of the compositions must be zero
        const auto& next = q.arrows_out(q.arrow(a).target);
        for (std::size_t i = 0; i < next.size(); ++i)
            for (std::size_t j = i + 1; j < next.size(); ++j)
                if (!q.is_relation({a, next[i]}) && !q.is_relation({a, next[j]})) {
                    auto w = names({next[i], next[j]});
                    w.insert(w.begin(), q.arrow(a).name);
                    d.violations.push_back({Rule::right_composition, std::move(w)});
                }
        // two distinct arrows followed by a
        const auto& prev = q.arrows_in(q.arrow(a).source);
        for (std::size_t i = 0; i < prev.size(); ++i)
            for (std::size_t j = i + 1; j < prev.size(); ++j)
                if (!q.is_relation({prev[i], a}) && !q.is_relation({prev[j], a})) {
                    auto w = names({prev[i], prev[j]});
                    w.push_back(q.arrow(a).name);
                    d.violations.push_back({Rule::left_composition, std::move(w)});
                }
    }
    std::sort(d.violations.begin(), d.violations.end());
    d.passed = d.violations.empty();
    return d;
}

// Relation-free paths starting at v, lazy path first, in breadth-first order.
// Together they form a basis of the indecomposable projective at v.
inline std::vector<Path> projective_paths(const BoundQuiver& q, std::size_t v, std::size_t cap = kDefaultPathCap) {
    std::vector<Path> out{Path{}};
    for (std::size_t head = 0; head < out.size(); ++head) {
        const Path p = out[head];
        const std::size_t end = p.empty() ? v : q.arrow(p.back()).target;
        for (auto a : q.arrows_out(end)) {
            Path next = p;
            next.push_back(a);
            if (q.ends_with_relation(next)) continue;
            if (next.size() > cap)
                throw DomainError("path length cap " + std::to_string(cap) + " exceeded at vertex " + q.vertex_name(v) +
                                  "; the relations are not admissible");
            out.push_back(std::move(next));
        }
    }
    return out;
}

inline std::size_t path_end(const BoundQuiver& q, std::size_t start, const Path& p) {
    return p.empty() ? start : q.arrow(p.back()).target;
}

} // namespace stabcone
