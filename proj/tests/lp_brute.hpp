#ifndef MCST_TESTS_LP_BRUTE_HPP
#define MCST_TESTS_LP_BRUTE_HPP

// Test-only LP oracle: enumerates every basic solution (each choice of n
// tight constraints among the rows and the x_j = 0 bounds), keeps the
// feasible ones, and takes the best objective. Independent of the simplex
// code path it is used to check.

#include <functional>
#include <optional>
#include <vector>

#include "mcst/lp.hpp"

namespace lp_brute {

using mcst::ConstraintSystem;
using mcst::LinRow;
using mcst::Rational;
using mcst::Sense;

struct BruteResult {
    std::optional<Rational> optimum;
    std::vector<std::vector<Rational>> vertices;  // all feasible basic points
};

inline bool feasible(const ConstraintSystem& system, const std::vector<Rational>& x) {
    for (const auto& v : x)
        if (v < 0) return false;
    for (const LinRow& row : system.rows()) {
        Rational lhs = 0;
        for (const auto& [var, coeff] : row.coeffs) lhs += coeff * x[static_cast<std::size_t>(var)];
        if (row.sense == Sense::Le && lhs > row.rhs) return false;
        if (row.sense == Sense::Ge && lhs < row.rhs) return false;
        if (row.sense == Sense::Eq && lhs != row.rhs) return false;
    }
    return true;
}

inline BruteResult brute_force_min(const ConstraintSystem& system) {
    std::size_t n = static_cast<std::size_t>(system.variable_count());
    std::size_t t = system.rows().size() + n;
    BruteResult result;

    std::vector<std::size_t> combo;
    std::vector<std::vector<Rational>> seen;
    auto attempt = [&]() {
        std::vector<std::vector<Rational>> mat;
        std::vector<Rational> rhs;
        for (std::size_t pick : combo) {
            std::vector<Rational> line(n, Rational(0));
            if (pick < system.rows().size()) {
                const LinRow& row = system.rows()[pick];
                for (const auto& [var, coeff] : row.coeffs)
                    line[static_cast<std::size_t>(var)] = coeff;
                rhs.push_back(row.rhs);
            } else {
                line[pick - system.rows().size()] = 1;
                rhs.push_back(Rational(0));
            }
            mat.push_back(std::move(line));
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && mat[pivot][col] == 0) ++pivot;
            if (pivot == n) return;
            std::swap(mat[pivot], mat[col]);
            std::swap(rhs[pivot], rhs[col]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || mat[r][col] == 0) continue;
                Rational f = mat[r][col] / mat[col][col];
                for (std::size_t c = col; c < n; ++c) mat[r][c] -= f * mat[col][c];
                rhs[r] -= f * rhs[col];
            }
        }
        std::vector<Rational> x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = rhs[j] / mat[j][j];
        if (!feasible(system, x)) return;
        for (const auto& v : seen)
            if (v == x) return;
        seen.push_back(x);
        Rational value = 0;
        for (std::size_t j = 0; j < n; ++j) value += system.objective()[j] * x[j];
        if (!result.optimum || value < *result.optimum) result.optimum = value;
        result.vertices.push_back(std::move(x));
    };
    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t need) {
        if (need == 0) {
            attempt();
            return;
        }
        for (std::size_t i = from; i + need <= t; ++i) {
            combo.push_back(i);
            pick(i + 1, need - 1);
            combo.pop_back();
        }
    };
    pick(0, n);
    return result;
}

}  // namespace lp_brute

#endif
