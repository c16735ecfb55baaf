#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "collinear/geometry.hpp"

namespace col {

// Square sparse system A x = b with several right-hand sides. The sparsity
// pattern must be symmetric and A must admit elimination without pivoting in
// any symmetric order (true for the nonsingular M-matrices built here).
struct SparseSystem {
    int n = 0;
    int nrhs = 1;
    std::vector<std::vector<std::pair<int, Q>>> rows;
    std::vector<std::vector<Q>> rhs;  // rhs[i][k]

    explicit SparseSystem(int n_ = 0, int k = 1) : n(n_), nrhs(k), rows(n_), rhs(n_, std::vector<Q>(k)) {}
    void add(int i, int j, const Q& v) { rows[i].push_back({j, v}); }
};

// Integer-row elimination with minimum-degree ordering; exact.
std::vector<std::vector<Q>> solve_exact(const SparseSystem& s);
// Eigen SparseLU in double / long double. Empty result if the factorization fails.
std::vector<std::vector<double>> solve_double(const SparseSystem& s);
std::vector<std::vector<long double>> solve_long_double(const SparseSystem& s);
// Iterative refinement on one double LU: the residual is computed exactly,
// scaled by a power of two and solved for a correction. Stops when done(x)
// holds or after max_rounds; empty result if no round satisfied done.
std::vector<std::vector<Q>> solve_refined(const SparseSystem& s, int max_rounds,
                                          const std::function<bool(const std::vector<std::vector<Q>>&)>& done);

// minimum-degree elimination order of the symmetric pattern
std::vector<int> min_degree_order(const std::vector<std::vector<int>>& adj);

}  // namespace col
