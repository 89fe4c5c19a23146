#pragma once

// Walks, strings and bands over a bound quiver.
//
// A word with r letters traverses r+1 vertex positions 0..r. Letter i joins
// position i to position i+1. A direct letter runs along its arrow, an inverse
// letter against it.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "quiver.hpp"

namespace stabcone {

enum class Direction { direct, inverse };

inline Direction flip(Direction d) { return d == Direction::direct ? Direction::inverse : Direction::direct; }

struct Letter {
    std::size_t arrow = 0;
    Direction dir = Direction::direct;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.arrow, flip(l.dir)}; }

inline std::size_t letter_source(const BoundQuiver& q, Letter l) {
    return l.dir == Direction::direct ? q.arrow(l.arrow).source : q.arrow(l.arrow).target;
}

inline std::size_t letter_target(const BoundQuiver& q, Letter l) {
    return l.dir == Direction::direct ? q.arrow(l.arrow).target : q.arrow(l.arrow).source;
}

class Word {
public:
    Word() = default;

    // Checks composability and reducedness.
    Word(const BoundQuiver& q, std::size_t base, std::vector<Letter> letters)
        : letters_(std::move(letters)), num_quiver_vertices_(q.num_vertices()) {
        if (base >= q.num_vertices()) throw DomainError("base vertex out of range");
        for (auto l : letters_)
            if (l.arrow >= q.num_arrows()) throw DomainError("unknown arrow index");
        if (!letters_.empty()) base = letter_source(q, letters_.front());
        vertices_.push_back(base);
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            const Letter l = letters_[i];
            if (letter_source(q, l) != vertices_.back())
                throw DomainError("letters " + std::to_string(i) + " and " + std::to_string(i + 1) + " are not composable");
            if (i > 0 && letters_[i - 1] == inverse(l))
                throw DomainError("walk backtracks at letter " + std::to_string(i + 1));
            vertices_.push_back(letter_target(q, l));
        }
    }

    const std::vector<Letter>& letters() const { return letters_; }
    const std::vector<std::size_t>& vertices() const { return vertices_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::size_t start() const { return vertices_.front(); }
    std::size_t end() const { return vertices_.back(); }
    std::size_t num_quiver_vertices() const { return num_quiver_vertices_; }

    friend bool operator==(const Word& a, const Word& b) { return a.vertices_ == b.vertices_ && a.letters_ == b.letters_; }

private:
    std::vector<Letter> letters_;
    std::vector<std::size_t> vertices_;
    std::size_t num_quiver_vertices_ = 0;
};

inline Word reversed(const BoundQuiver& q, const Word& w) {
    std::vector<Letter> ls;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) ls.push_back(inverse(*it));
    return Word(q, w.end(), std::move(ls));
}

// Letters [from, to) as a word.
inline Word subword(const BoundQuiver& q, const Word& w, std::size_t from, std::size_t to) {
    std::vector<Letter> ls(w.letters().begin() + static_cast<std::ptrdiff_t>(from),
                           w.letters().begin() + static_cast<std::ptrdiff_t>(to));
    return Word(q, w.vertices().at(from), std::move(ls));
}

// The same walk read over the opposite quiver: every letter changes direction.
inline Word opposite_word(const BoundQuiver& qop, const Word& w) {
    std::vector<Letter> ls;
    for (auto l : w.letters()) ls.push_back({l.arrow, flip(l.dir)});
    return Word(qop, w.start(), std::move(ls));
}

inline Word parse_walk(std::string_view text, const BoundQuiver& q) {
    const auto toks = detail::split_ws(text);
    if (toks.empty()) throw DomainError("empty walk");
    if (toks.front().front() == '@') {
        if (toks.size() != 1) throw DomainError("a trivial walk '@v' stands alone");
        auto v = q.find_vertex(std::string_view(toks.front()).substr(1));
        if (!v) throw DomainError("unknown vertex " + toks.front().substr(1));
        return Word(q, *v, {});
    }
    std::vector<Letter> ls;
    for (const auto& t : toks) {
        std::string_view name = t;
        Direction d = Direction::direct;
        if (name.size() > 1 && name.back() == '-') {
            name.remove_suffix(1);
            d = Direction::inverse;
        }
        auto a = q.find_arrow(name);
        if (!a) throw DomainError("unknown arrow " + std::string(name));
        ls.push_back({*a, d});
    }
    const std::size_t base = letter_source(q, ls.front());
    return Word(q, base, std::move(ls));
}

inline std::string format_walk(const BoundQuiver& q, const Word& w) {
    if (w.empty()) return "@" + q.vertex_name(w.start());
    std::string s;
    for (auto l : w.letters()) {
        if (!s.empty()) s += ' ';
        s += q.arrow(l.arrow).name;
        if (l.dir == Direction::inverse) s += '-';
    }
    return s;
}

class StringWord {
public:
    const Word& word() const { return word_; }
    std::size_t size() const { return word_.size(); }
    friend bool operator==(const StringWord&, const StringWord&) = default;

private:
    explicit StringWord(Word w) : word_(std::move(w)) {}
    Word word_;
    friend StringWord check_string(const Word&, const BoundQuiver&);
};

class BandWord {
public:
    const Word& word() const { return word_; }
    std::size_t size() const { return word_.size(); }
    friend bool operator==(const BandWord&, const BandWord&) = default;

private:
    explicit BandWord(Word w) : word_(std::move(w)) {}
    Word word_;
    friend BandWord check_band(const Word&, const BoundQuiver&);
};

namespace detail {

// First relation met by a maximal run of equally oriented letters, as a letter window.
inline std::optional<std::pair<std::size_t, std::size_t>> relation_window(const BoundQuiver& q,
                                                                          const std::vector<Letter>& ls) {
    std::size_t i = 0;
    while (i < ls.size()) {
        std::size_t j = i;
        while (j < ls.size() && ls[j].dir == ls[i].dir) ++j;
        Path p;
        for (std::size_t k = i; k < j; ++k) p.push_back(ls[k].arrow);
        if (ls[i].dir == Direction::inverse) std::reverse(p.begin(), p.end());
        if (auto hit = q.find_relation(p)) {
            if (ls[i].dir == Direction::direct) return std::make_pair(i + hit->first, i + hit->second);
            return std::make_pair(j - hit->second, j - hit->first);
        }
        i = j;
    }
    return std::nullopt;
}

inline std::string window_text(std::pair<std::size_t, std::size_t> w) {
    return "[" + std::to_string(w.first) + "," + std::to_string(w.second) + ")";
}

} // namespace detail

inline StringWord check_string(const Word& w, const BoundQuiver& q) {
    if (auto hit = detail::relation_window(q, w.letters()))
        throw DomainError("relation at letter window " + detail::window_text(*hit) + " of '" + format_walk(q, w) + "'");
    return StringWord(w);
}

inline std::vector<Letter> rotate_letters(const std::vector<Letter>& ls, std::size_t k) {
    std::vector<Letter> out(ls.begin() + static_cast<std::ptrdiff_t>(k), ls.end());
    out.insert(out.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

inline BandWord check_band(const Word& w, const BoundQuiver& q) {
    const auto& ls = w.letters();
    const std::size_t n = ls.size();
    if (n == 0) throw DomainError("a band needs at least one letter");
    if (w.start() != w.end()) throw DomainError("walk is not cyclic");
    if (ls.back() == inverse(ls.front())) throw DomainError("walk is not cyclically reduced");
    const bool has_direct = std::any_of(ls.begin(), ls.end(), [](Letter l) { return l.dir == Direction::direct; });
    const bool has_inverse = std::any_of(ls.begin(), ls.end(), [](Letter l) { return l.dir == Direction::inverse; });
    if (!has_direct || !has_inverse) throw DomainError("a band needs both direct and inverse letters");

    // Runs have length < n, so this many periods expose every run with room to spare.
    const std::size_t periods = 2 + (q.max_relation_length() + n - 1) / n;
    std::vector<Letter> power;
    for (std::size_t k = 0; k < periods; ++k) power.insert(power.end(), ls.begin(), ls.end());
    if (auto hit = detail::relation_window(q, power))
        throw DomainError("relation in cyclic window " + detail::window_text(*hit) + " of '" + format_walk(q, w) + "'");

    for (std::size_t d = 1; d < n; ++d)
        if (n % d == 0 && rotate_letters(ls, d) == ls) throw DomainError("walk is a proper power");
    return BandWord(w);
}

struct DimVector {
    std::vector<long long> entries;

    std::size_t size() const { return entries.size(); }
    long long operator[](std::size_t i) const { return entries[i]; }
    IntVector as_integers() const {
        IntVector v;
        for (auto x : entries) v.emplace_back(x);
        return v;
    }
    bool is_thin() const {
        return std::all_of(entries.begin(), entries.end(), [](long long x) { return x <= 1; });
    }
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i] != 0) s.push_back(i);
        return s;
    }
    friend bool operator==(const DimVector&, const DimVector&) = default;
};

inline DimVector dimension_vector(const StringWord& s) {
    DimVector d{std::vector<long long>(s.word().num_quiver_vertices(), 0)};
    for (auto v : s.word().vertices()) ++d.entries[v];
    return d;
}

// One count per position of a single period.
inline DimVector dimension_vector(const BandWord& b) {
    DimVector d{std::vector<long long>(b.word().num_quiver_vertices(), 0)};
    const auto& vs = b.word().vertices();
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) ++d.entries[vs[i]];
    return d;
}

enum class SubstringKind { submodule, factor };

// Vertex positions start..end inclusive; letters start..end-1 lie inside. For cyclic
// occurrences positions are taken modulo the band length and end may exceed it.
struct SubstringOccurrence {
    std::size_t start = 0;
    std::size_t end = 0;
    SubstringKind kind = SubstringKind::submodule;
    bool cyclic = false;

    std::size_t vertex_count() const { return end - start + 1; }
    friend bool operator==(const SubstringOccurrence&, const SubstringOccurrence&) = default;
};

namespace detail {

// Boundary test with absent neighbours passed as nullopt.
inline bool boundary_ok(SubstringKind kind, std::optional<Direction> before, std::optional<Direction> after) {
    const Direction in = kind == SubstringKind::submodule ? Direction::direct : Direction::inverse;
    return (!before || *before == in) && (!after || *after == flip(in));
}

} // namespace detail

inline std::vector<SubstringOccurrence> substrings(const StringWord& s, SubstringKind kind, bool proper) {
    const auto& ls = s.word().letters();
    const std::size_t r = ls.size();
    std::vector<SubstringOccurrence> out;
    for (std::size_t a = 0; a <= r; ++a)
        for (std::size_t b = a; b <= r; ++b) {
            if (proper && a == 0 && b == r) continue;
            std::optional<Direction> before, after;
            if (a > 0) before = ls[a - 1].dir;
            if (b < r) after = ls[b].dir;
            if (detail::boundary_ok(kind, before, after)) out.push_back({a, b, kind, false});
        }
    return out;
}

// Intervals of 1..n positions of the infinite periodic word, one per starting
// position. Both neighbours always exist.
inline std::vector<SubstringOccurrence> cyclic_substrings(const BandWord& b, SubstringKind kind) {
    const auto& ls = b.word().letters();
    const std::size_t n = ls.size();
    std::vector<SubstringOccurrence> out;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t len = 1; len <= n; ++len) {
            const Direction before = ls[(p + n - 1) % n].dir;
            const Direction after = ls[(p + len - 1) % n].dir;
            if (detail::boundary_ok(kind, before, after)) out.push_back({p, p + len - 1, kind, true});
        }
    return out;
}

inline DimVector occurrence_dimension(const Word& w, const SubstringOccurrence& o) {
    DimVector d{std::vector<long long>(w.num_quiver_vertices(), 0)};
    const auto& vs = w.vertices();
    const std::size_t period = o.cyclic ? vs.size() - 1 : vs.size();
    for (std::size_t i = o.start; i <= o.end; ++i) ++d.entries[vs[i % period]];
    return d;
}

inline Word occurrence_word(const BoundQuiver& q, const Word& w, const SubstringOccurrence& o) {
    if (!o.cyclic) return subword(q, w, o.start, o.end);
    const std::size_t n = w.size();
    std::vector<Letter> ls;
    for (std::size_t i = o.start; i < o.end; ++i) ls.push_back(w.letters()[i % n]);
    return Word(q, w.vertices()[o.start % n], std::move(ls));
}

// Rotation starting at letter k.
inline BandWord rotate(const BoundQuiver& q, const BandWord& b, std::size_t k) {
    const std::size_t n = b.size();
    k %= n;
    return check_band(Word(q, b.word().vertices()[k], rotate_letters(b.word().letters(), k)), q);
}

inline bool letter_less(const BoundQuiver& q, Letter x, Letter y) {
    const auto& nx = q.arrow(x.arrow).name;
    const auto& ny = q.arrow(y.arrow).name;
    if (nx != ny) return nx < ny;
    return x.dir < y.dir;
}

inline BandWord canonical_rotation(const BoundQuiver& q, const BandWord& b) {
    const auto& ls = b.word().letters();
    std::size_t best = 0;
    std::vector<Letter> best_ls = ls;
    for (std::size_t k = 1; k < ls.size(); ++k) {
        auto cand = rotate_letters(ls, k);
        if (std::lexicographical_compare(cand.begin(), cand.end(), best_ls.begin(), best_ls.end(),
                                         [&](Letter x, Letter y) { return letter_less(q, x, y); })) {
            best = k;
            best_ls = std::move(cand);
        }
    }
    return rotate(q, b, best);
}

// b^r followed by the first m letters of b.
inline StringWord concat_power(const BoundQuiver& q, const BandWord& b, std::size_t r, std::size_t m) {
    if (m >= b.size()) throw DomainError("prefix length must be below the band length");
    std::vector<Letter> ls;
    for (std::size_t k = 0; k < r; ++k) ls.insert(ls.end(), b.word().letters().begin(), b.word().letters().end());
    ls.insert(ls.end(), b.word().letters().begin(), b.word().letters().begin() + static_cast<std::ptrdiff_t>(m));
    return check_string(Word(q, b.word().start(), std::move(ls)), q);
}

inline StringWord prefix(const BoundQuiver& q, const BandWord& b, std::size_t m) { return concat_power(q, b, 0, m); }

namespace detail {

// Depth-first walk over all strings of at most max_len letters.
inline void for_each_string(const BoundQuiver& q, std::size_t max_len, const std::function<void(const StringWord&)>& f) {
    std::vector<Letter> ls;
    std::function<void(std::size_t)> grow = [&](std::size_t at) {
        if (ls.size() == max_len) return;
        std::vector<Letter> options;
        for (auto a : q.arrows_out(at)) options.push_back({a, Direction::direct});
        for (auto a : q.arrows_in(at)) options.push_back({a, Direction::inverse});
        for (auto l : options) {
            if (!ls.empty() && ls.back() == inverse(l)) continue;
            ls.push_back(l);
            if (!relation_window(q, ls)) {
                Word w(q, ls.front().dir == Direction::direct ? q.arrow(ls.front().arrow).source
                                                               : q.arrow(ls.front().arrow).target,
                       ls);
                f(check_string(w, q));
                grow(letter_target(q, l));
            }
            ls.pop_back();
        }
    };
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        f(check_string(Word(q, v, {}), q));
        grow(v);
    }
}

} // namespace detail

// Strings of at most max_len letters, one of each pair {w, reversed(w)}.
inline std::vector<StringWord> enumerate_strings(const BoundQuiver& q, std::size_t max_len) {
    std::vector<StringWord> out;
    std::set<std::string> seen;
    detail::for_each_string(q, max_len, [&](const StringWord& s) {
        const std::string a = format_walk(q, s.word());
        const std::string b = format_walk(q, reversed(q, s.word()));
        if (seen.insert(std::min(a, b)).second) out.push_back(s);
    });
    return out;
}

// Bands of at most max_len letters up to rotation; b and its reverse are both kept.
inline std::vector<BandWord> enumerate_bands(const BoundQuiver& q, std::size_t max_len) {
    std::vector<BandWord> out;
    std::set<std::string> seen;
    detail::for_each_string(q, max_len, [&](const StringWord& s) {
        const Word& w = s.word();
        if (w.empty() || w.start() != w.end()) return;
        try {
            BandWord b = canonical_rotation(q, check_band(w, q));
            if (seen.insert(format_walk(q, b.word())).second) out.push_back(std::move(b));
        } catch (const DomainError&) {
        }
    });
    return out;
}

} // namespace stabcone
