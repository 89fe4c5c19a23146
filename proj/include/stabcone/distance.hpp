#pragma once

// Euclidean distance from a point to a cone, in floating point. Used only to
// produce witnesses; no membership decision is ever derived from these numbers.

#include <Eigen/Dense>

#include <cstddef>
#include <limits>
#include <vector>

#include "cone.hpp"

namespace stabcone {

// Lawson-Hanson: min |A l - b| subject to l >= 0.
inline Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, double tol = 1e-12) {
    const Eigen::Index n = a.cols();
    Eigen::VectorXd l = Eigen::VectorXd::Zero(n);
    if (n == 0) return l;
    std::vector<bool> passive(static_cast<std::size_t>(n), false);
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff() * std::max(1.0, b.cwiseAbs().maxCoeff()));

    auto solve_passive = [&]() {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index j = 0; j < n; ++j)
            if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
        Eigen::MatrixXd ap(a.rows(), static_cast<Eigen::Index>(idx.size()));
        for (std::size_t k = 0; k < idx.size(); ++k) ap.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
        Eigen::VectorXd sp = ap.completeOrthogonalDecomposition().solve(b);
        Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
        for (std::size_t k = 0; k < idx.size(); ++k) s[idx[k]] = sp[static_cast<Eigen::Index>(k)];
        return s;
    };

    for (int outer = 0; outer < 10 * static_cast<int>(n) + 10; ++outer) {
        Eigen::VectorXd w = a.transpose() * (b - a * l);
        Eigen::Index best = -1;
        double best_w = tol * scale;
        for (Eigen::Index j = 0; j < n; ++j)
            if (!passive[static_cast<std::size_t>(j)] && w[j] > best_w) {
                best_w = w[j];
                best = j;
            }
        if (best < 0) break;
        passive[static_cast<std::size_t>(best)] = true;
        for (int inner = 0; inner < 10 * static_cast<int>(n) + 10; ++inner) {
            Eigen::VectorXd s = solve_passive();
            double alpha = 1.0;
            bool feasible = true;
            for (Eigen::Index j = 0; j < n; ++j)
                if (passive[static_cast<std::size_t>(j)] && s[j] <= tol) {
                    feasible = false;
                    const double denom = l[j] - s[j];
                    if (denom > 0) alpha = std::min(alpha, l[j] / denom);
                }
            if (feasible) {
                l = s;
                break;
            }
            l += alpha * (s - l);
            for (Eigen::Index j = 0; j < n; ++j)
                if (passive[static_cast<std::size_t>(j)] && l[j] <= tol) {
                    passive[static_cast<std::size_t>(j)] = false;
                    l[j] = 0;
                }
        }
    }
    return l;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Lineality directions enter as a pair of opposite generators.
inline double cone_distance(const RationalCone& c, const RatVector& x) {
    const RationalCone s = convert(c);
    require_same_size(x.size(), s.ambient_dim);
    std::vector<IntVector> gens = s.rays;
    for (const auto& l : s.lineality) {
        gens.push_back(l);
        gens.push_back(negated(l));
    }
    const auto rows = static_cast<Eigen::Index>(s.ambient_dim);
    Eigen::MatrixXd a(rows, static_cast<Eigen::Index>(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j) {
        Eigen::VectorXd col(rows);
        for (Eigen::Index i = 0; i < rows; ++i) col[i] = gens[j][static_cast<std::size_t>(i)].convert_to<double>();
        const double norm = col.norm();
        a.col(static_cast<Eigen::Index>(j)) = norm > 0 ? Eigen::VectorXd(col / norm) : col;
    }
    Eigen::VectorXd b(rows);
    for (Eigen::Index i = 0; i < rows; ++i) b[i] = to_double(x[static_cast<std::size_t>(i)]);
    if (gens.empty()) return b.norm();
    return (a * nnls(a, b) - b).norm();
}

} // namespace stabcone
