#pragma once

// Exact integer and rational linear algebra on dense row vectors.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace stabcone {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

inline IntVector unit_vector(std::size_t n, std::size_t i) {
    IntVector e = zero_vector(n);
    e[i] = 1;
    return e;
}

inline void require_same_size(std::size_t a, std::size_t b) {
    if (a != b)
        throw DomainError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    require_same_size(a.size(), b.size());
    T s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

inline Rational dot(const IntVector& a, const RatVector& b) {
    require_same_size(a.size(), b.size());
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += Rational(a[i]) * b[i];
    return s;
}

template <class T>
bool is_zero(const std::vector<T>& v) {
    return std::all_of(v.begin(), v.end(), [](const T& x) { return x == 0; });
}

template <class T>
std::vector<T> negated(std::vector<T> v) {
    for (auto& x : v) x = -x;
    return v;
}

template <class T>
std::vector<T> operator+(std::vector<T> a, const std::vector<T>& b) {
    require_same_size(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <class T>
std::vector<T> operator-(std::vector<T> a, const std::vector<T>& b) {
    require_same_size(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

template <class T>
std::vector<T> operator*(const T& s, std::vector<T> v) {
    for (auto& x : v) x *= s;
    return v;
}

// s*x + t*y
inline IntVector combine(const Integer& s, const IntVector& x, const Integer& t, const IntVector& y) {
    require_same_size(x.size(), y.size());
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i] + t * y[i];
    return out;
}

inline Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) {
        if (x == 0) continue;
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
        if (g == 1) break;
    }
    return g;
}

// Divide by the gcd of the entries. The sign is never touched.
inline IntVector primitive(IntVector v) {
    const Integer g = content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

inline RatVector to_rational(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

// Smallest positive multiple with integer entries, made primitive.
inline IntVector clear_denominators(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) {
        const Integer d = boost::multiprecision::denominator(x);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
    return primitive(std::move(out));
}

// Rank by fraction-free elimination; rows are kept primitive to bound growth.
inline std::size_t rank(std::vector<IntVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Integer a = rows[r][c];
            const Integer b = rows[i][c];
            for (std::size_t j = c; j < n; ++j) rows[i][j] = a * rows[i][j] - b * rows[r][j];
            rows[i] = primitive(std::move(rows[i]));
        }
        ++r;
    }
    return r;
}

struct Echelon {
    std::vector<RatVector> rows; // nonzero rows only, pivots equal to 1
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form over the rationals.
inline Echelon rref(std::vector<RatVector> rows, std::size_t ncols) {
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Rational inv = 1 / rows[r][c];
        for (std::size_t j = c; j < ncols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

inline std::vector<RatVector> to_rational(const std::vector<IntVector>& rows) {
    std::vector<RatVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(to_rational(r));
    return out;
}

// Canonical integer basis of the row space: RREF rows scaled to primitive integers.
inline std::vector<IntVector> row_space_basis(const std::vector<IntVector>& rows, std::size_t ncols) {
    for (const auto& r : rows) require_same_size(r.size(), ncols);
    const Echelon e = rref(to_rational(rows), ncols);
    std::vector<IntVector> out;
    out.reserve(e.rows.size());
    for (const auto& r : e.rows) out.push_back(clear_denominators(r));
    return out;
}

// Integer basis of {x : row . x = 0 for all rows}.
inline std::vector<IntVector> nullspace(const std::vector<IntVector>& rows, std::size_t ncols) {
    for (const auto& r : rows) require_same_size(r.size(), ncols);
    const Echelon e = rref(to_rational(rows), ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<IntVector> out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        RatVector x(ncols, Rational(0));
        x[f] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = -e.rows[i][f];
        out.push_back(clear_denominators(x));
    }
    return out;
}

struct LinearSolution {
    RatVector x;
    bool unique = false;
};

// Solve sum_k x_k columns[k] = target. Free variables are set to zero.
inline std::optional<LinearSolution> solve_columns(const std::vector<RatVector>& columns, const RatVector& target) {
    const std::size_t m = target.size();
    const std::size_t k = columns.size();
    std::vector<RatVector> aug(m, RatVector(k + 1, Rational(0)));
    for (std::size_t j = 0; j < k; ++j) {
        require_same_size(columns[j].size(), m);
        for (std::size_t i = 0; i < m; ++i) aug[i][j] = columns[j][i];
    }
    for (std::size_t i = 0; i < m; ++i) aug[i][k] = target[i];
    const Echelon e = rref(std::move(aug), k + 1);
    if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
    LinearSolution s;
    s.x.assign(k, Rational(0));
    for (std::size_t i = 0; i < e.rows.size(); ++i) s.x[e.pivots[i]] = e.rows[i][k];
    s.unique = e.pivots.size() == k;
    return s;
}

// v minus its orthogonal projection onto span(basis); basis must be independent.
inline RatVector project_orthogonal(const RatVector& v, const std::vector<IntVector>& basis) {
    if (basis.empty()) return v;
    const std::size_t k = basis.size();
    std::vector<RatVector> gram(k, RatVector(k + 1, Rational(0)));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = Rational(dot(basis[i], basis[j]));
        gram[i][k] = dot(basis[i], v);
    }
    const Echelon e = rref(std::move(gram), k + 1);
    if (e.pivots.size() != k) throw DomainError("projection basis is not independent");
    RatVector out = v;
    for (std::size_t i = 0; i < k; ++i) {
        const Rational& y = e.rows[i][k];
        if (y == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) out[j] -= y * Rational(basis[i][j]);
    }
    return out;
}

} // namespace stabcone
