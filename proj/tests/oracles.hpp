// Test-only oracles, independent of the library's geometric engine.

#ifndef DIFFVOL_TESTS_ORACLES_HPP
#define DIFFVOL_TESTS_ORACLES_HPP

#include <diffvol/polytope.hpp>

#include <random>
#include <vector>

namespace oracles {

using diffvol::Int;
using diffvol::LatticePoint;
using diffvol::Rat;

/// Membership q in conv(points) decided by phase-1 simplex with Bland's
/// rule over exact rationals: feasibility of
///   sum_i lambda_i p_i = q, sum_i lambda_i = 1, lambda >= 0.
inline bool in_hull_lp(const std::vector<LatticePoint>& points, const std::vector<Rat>& q) {
    const std::size_t d = q.size();
    const std::size_t n = points.size();
    const std::size_t rows = d + 1;
    // tableau for min sum of artificials; columns: lambda (n), artificials
    // (rows), rhs
    std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(n + rows + 1, Rat(0)));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < n; ++i)
            t[r][i] = r < d ? Rat(points[i][r]) : Rat(1);
        t[r][n + rows] = r < d ? q[r] : Rat(1);
        // flip rows with negative rhs so artificials start feasible
        if (t[r][n + rows] < 0)
            for (auto& v : t[r]) v = -v;
        t[r][n + r] = 1;
    }
    std::vector<std::size_t> basis(rows);
    std::vector<Rat> cost(n + rows + 1, Rat(0));
    for (std::size_t r = 0; r < rows; ++r) {
        basis[r] = n + r;
        for (std::size_t c = 0; c <= n + rows; ++c) cost[c] += t[r][c];
    }
    // basic columns must carry zero reduced cost
    for (std::size_t r = 0; r < rows; ++r) cost[n + r] = 0;
    while (true) {
        // Bland: smallest improving column among the originals and artificials
        std::size_t enter = n + rows;
        for (std::size_t c = 0; c < n + rows; ++c)
            if (cost[c] > 0) {
                enter = c;
                break;
            }
        if (enter == n + rows) break;
        std::size_t leave = rows;
        Rat best = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0) continue;
            Rat ratio = t[r][n + rows] / t[r][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[r] < basis[leave]))
                leave = r, best = ratio;
        }
        if (leave == rows) break;  // unbounded; cannot happen here
        Rat piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            Rat f = t[r][enter];
            for (std::size_t c = 0; c <= n + rows; ++c) t[r][c] -= f * t[leave][c];
        }
        Rat f = cost[enter];
        for (std::size_t c = 0; c <= n + rows; ++c) cost[c] -= f * t[leave][c];
        basis[leave] = enter;
    }
    return cost[n + rows] == 0;
}

inline bool in_hull_lp(const std::vector<LatticePoint>& points, const LatticePoint& q) {
    std::vector<Rat> qr;
    for (const Int& c : q) qr.push_back(Rat(c));
    return in_hull_lp(points, qr);
}

/// Uniform random lattice polytope: `count` points with coordinates in
/// [lo, hi].
inline diffvol::LatticePolytope random_polytope(std::mt19937& rng, int dim, int count, int lo,
                                                int hi) {
    std::uniform_int_distribution<int> coord(lo, hi);
    std::vector<LatticePoint> pts;
    for (int i = 0; i < count; ++i) {
        LatticePoint p;
        for (int j = 0; j < dim; ++j) p.push_back(Int(coord(rng)));
        pts.push_back(std::move(p));
    }
    return diffvol::LatticePolytope(dim, std::move(pts));
}

}  // namespace oracles

#endif
