#include "collinear/linsolve.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include "collinear/error.hpp"

namespace col {

std::vector<int> min_degree_order(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::set<int>> g(n);
    for (int i = 0; i < n; ++i)
        for (int j : adj[i])
            if (j != i) g[i].insert(j), g[j].insert(i);
    using Item = std::pair<int, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    for (int i = 0; i < n; ++i) pq.push({static_cast<int>(g[i].size()), i});
    std::vector<char> done(n, 0);
    std::vector<int> order;
    while (!pq.empty()) {
        auto [deg, v] = pq.top();
        pq.pop();
        if (done[v] || deg != static_cast<int>(g[v].size())) continue;
        done[v] = 1;
        order.push_back(v);
        std::vector<int> nb(g[v].begin(), g[v].end());
        for (int a : nb) g[a].erase(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) g[nb[i]].insert(nb[j]), g[nb[j]].insert(nb[i]);
        for (int a : nb) pq.push({static_cast<int>(g[a].size()), a});
        g[v].clear();
    }
    return order;
}

namespace {

using Row = std::vector<std::pair<int, mpz_class>>;  // sorted by column; columns >= n hold right-hand sides

void normalize(Row& r) {
    mpz_class g = 0;
    for (auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

const mpz_class* find(const Row& r, int c) {
    auto it = std::lower_bound(r.begin(), r.end(), c, [](const auto& e, int k) { return e.first < k; });
    return (it != r.end() && it->first == c) ? &it->second : nullptr;
}

}  // namespace

std::vector<std::vector<Q>> solve_exact(const SparseSystem& s) {
    const int n = s.n, K = s.nrhs;
    std::vector<Row> rows(n);
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        std::map<int, Q> acc;
        for (auto& [j, v] : s.rows[i]) acc[j] += v;
        for (int k = 0; k < K; ++k) acc[n + k] += s.rhs[i][k];
        mpz_class l = 1;
        for (auto& [j, v] : acc) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        for (auto& [j, v] : acc) {
            if (v == 0) continue;
            Q t = v * l;
            rows[i].push_back({j, t.get_num()});
            if (j < n && j != i) adj[i].push_back(j);
        }
        normalize(rows[i]);
    }
    auto order = min_degree_order(adj);
    std::vector<char> done(n, 0);
    for (int p : order) {
        const mpz_class* app = find(rows[p], p);
        if (!app || *app == 0) throw internal_error("solve_exact: zero pivot");
        mpz_class a = *app;
        std::vector<int> targets;
        for (auto& [j, v] : rows[p])
            if (j < n && j != p && !done[j]) targets.push_back(j);
        for (int r : targets) {
            const mpz_class* crp = find(rows[r], p);
            if (!crp) continue;
            mpz_class c = *crp;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
            mpz_class fa = a / g, fc = c / g;
            Row out;
            out.reserve(rows[r].size() + rows[p].size());
            size_t i = 0, j = 0;
            const Row &R = rows[r], &P = rows[p];
            while (i < R.size() || j < P.size()) {
                int ci = i < R.size() ? R[i].first : INT32_MAX;
                int cj = j < P.size() ? P[j].first : INT32_MAX;
                mpz_class v;
                int col;
                if (ci < cj) {
                    col = ci;
                    v = fa * R[i++].second;
                } else if (cj < ci) {
                    col = cj;
                    v = -fc * P[j++].second;
                } else {
                    col = ci;
                    v = fa * R[i++].second - fc * P[j++].second;
                }
                if (col == p || v == 0) continue;
                out.push_back({col, std::move(v)});
            }
            normalize(out);
            rows[r] = std::move(out);
        }
        done[p] = 1;
    }
    std::vector<std::vector<Q>> x(n, std::vector<Q>(K));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int p = *it;
        Q diag = 0;
        std::vector<Q> acc(K, 0);
        for (auto& [j, v] : rows[p]) {
            if (j == p) diag = Q(v);
            else if (j < n) {
                for (int k = 0; k < K; ++k) acc[k] -= Q(v) * x[j][k];
            } else {
                acc[j - n] += Q(v);
            }
        }
        for (int k = 0; k < K; ++k) {
            x[p][k] = acc[k] / diag;
            x[p][k].canonicalize();
        }
    }
    return x;
}

namespace {

template <typename T>
std::vector<std::vector<T>> solve_float(const SparseSystem& s) {
    using Mat = Eigen::SparseMatrix<T>;
    using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
    std::vector<Eigen::Triplet<T>> trip;
    for (int i = 0; i < s.n; ++i)
        for (auto& [j, v] : s.rows[i]) trip.emplace_back(i, j, static_cast<T>(v.get_d()));
    Mat A(s.n, s.n);
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
    Eigen::SparseLU<Mat, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success) return {};
    std::vector<std::vector<T>> x(s.n, std::vector<T>(s.nrhs));
    for (int k = 0; k < s.nrhs; ++k) {
        Vec b(s.n);
        for (int i = 0; i < s.n; ++i) b[i] = static_cast<T>(s.rhs[i][k].get_d());
        Vec sol = lu.solve(b);
        if (lu.info() != Eigen::Success) return {};
        for (int i = 0; i < s.n; ++i) x[i][k] = sol[i];
    }
    return x;
}

}  // namespace

std::vector<std::vector<Q>> solve_refined(const SparseSystem& s, int max_rounds,
                                          const std::function<bool(const std::vector<std::vector<Q>>&)>& done) {
    using Mat = Eigen::SparseMatrix<double>;
    std::vector<Eigen::Triplet<double>> trip;
    for (int i = 0; i < s.n; ++i)
        for (auto& [j, v] : s.rows[i]) trip.emplace_back(i, j, v.get_d());
    Mat A(s.n, s.n);
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
    Eigen::SparseLU<Mat, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success) return {};
    std::vector<std::vector<Q>> x(s.n, std::vector<Q>(s.nrhs, Q(0)));
    for (int round = 0; round < max_rounds; ++round) {
        bool moved = false;
        for (int k = 0; k < s.nrhs; ++k) {
            std::vector<Q> r(s.n);
            long top = LONG_MIN;
            for (int i = 0; i < s.n; ++i) {
                r[i] = s.rhs[i][k];
                for (auto& [j, v] : s.rows[i]) r[i] -= v * x[j][k];
                if (r[i] != 0) {
                    long e = static_cast<long>(mpz_sizeinbase(r[i].get_num_mpz_t(), 2)) -
                             static_cast<long>(mpz_sizeinbase(r[i].get_den_mpz_t(), 2));
                    top = std::max(top, e);
                }
            }
            if (top == LONG_MIN) continue;
            // scale the residual to magnitude about one
            Q scale = 1;
            if (top > 0) mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), top);
            else mpz_mul_2exp(scale.get_num_mpz_t(), scale.get_num_mpz_t(), -top);
            Eigen::VectorXd b(s.n);
            for (int i = 0; i < s.n; ++i) b[i] = Q(r[i] * scale).get_d();
            Eigen::VectorXd d = lu.solve(b);
            if (lu.info() != Eigen::Success) return {};
            for (int i = 0; i < s.n; ++i) {
                if (!std::isfinite(d[i])) return {};
                if (d[i] == 0) continue;
                x[i][k] += Q(d[i]) / scale;
                moved = true;
            }
        }
        if (done(x)) return x;
        if (!moved) break;
    }
    return {};
}

std::vector<std::vector<double>> solve_double(const SparseSystem& s) { return solve_float<double>(s); }
std::vector<std::vector<long double>> solve_long_double(const SparseSystem& s) { return solve_float<long double>(s); }

}  // namespace col
