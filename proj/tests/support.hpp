#pragma once

// Shared fixtures for the test binaries: algebra sources and small vector helpers.

#include <algorithm>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stabcone/linalg.hpp"

namespace testing_support {

using stabcone::Integer;
using stabcone::IntVector;

inline IntVector iv(std::initializer_list<long long> xs) {
    IntVector v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

inline std::vector<IntVector> ivs(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<IntVector> out;
    for (auto r : rows) out.push_back(iv(r));
    return out;
}

inline std::set<IntVector> as_set(const std::vector<IntVector>& vs) { return {vs.begin(), vs.end()}; }

inline IntVector e(std::size_t n, std::size_t i1) { return stabcone::unit_vector(n, i1 - 1); }

// e_i - e_j with one-based indices
inline IntVector ed(std::size_t n, std::size_t i, std::size_t j) {
    IntVector v = stabcone::zero_vector(n);
    v[i - 1] += 1;
    v[j - 1] -= 1;
    return v;
}

inline const char* kA2 = "vertices: 1 2\narrow a: 1 -> 2\n";

inline const char* kKronecker = "vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n";

inline const char* kCyc =
    "# 3-cycle with every path of length 5 zero\n"
    "vertices: 1 2 3\n"
    "arrow a: 1 -> 2\n"
    "arrow b: 2 -> 3\n"
    "arrow c: 3 -> 1\n"
    "zero: a b c a b\n"
    "zero: b c a b c\n"
    "zero: c a b c a\n";

inline const char* kSquare =
    "vertices: 1 2 3 4\n"
    "arrow a: 1 -> 2\n"
    "arrow b: 2 -> 3\n"
    "arrow g: 4 -> 3\n"
    "arrow d: 1 -> 4\n";

inline const char* kGentle =
    "vertices: 1 2 3\n"
    "arrow a: 1 -> 2\n"
    "arrow b: 1 -> 2\n"
    "arrow c: 2 -> 3\n"
    "zero: a c\n";

inline const char* kDiamond =
    "vertices: 1 2 3 4\n"
    "arrow a: 1 -> 2\n"
    "arrow b: 1 -> 3\n"
    "arrow c: 2 -> 4\n"
    "arrow d: 3 -> 4\n";

// Loop algebra with a band that visits vertex 1 twice.
inline const char* kLoop =
    "vertices: 1 2\n"
    "arrow x: 1 -> 1\n"
    "arrow a: 1 -> 2\n"
    "arrow b: 2 -> 1\n"
    "zero: x x\n"
    "zero: b a\n"
    "zero: b x\n";

inline std::vector<std::string> suite_sources() { return {kA2, kKronecker, kCyc, kSquare, kGentle}; }

} // namespace testing_support
