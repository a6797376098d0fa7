// Smith normal form of integer matrices and the binomial-system solution
// count |det A| via the product of elementary divisors.

#ifndef DIFFVOL_SMITH_HPP
#define DIFFVOL_SMITH_HPP

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace diffvol {

/// Elementary divisors d_1 | d_2 | ... | d_n of a square integer matrix,
/// non-negative, by the classical row/column gcd reduction.
inline std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("smith: matrix not square");
    std::vector<Int> divisors;
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // move a nonzero pivot into position (t,t)
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < n && !found; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (m[i][j] != 0) {
                        pi = i;
                        pj = j;
                        found = true;
                        break;
                    }
            if (!found) {
                for (std::size_t k = t; k < n; ++k) divisors.push_back(Int(0));
                return divisors;
            }
            std::swap(m[t], m[pi]);
            for (std::size_t i = 0; i < n; ++i) std::swap(m[i][t], m[i][pj]);
            // clear row and column t by Euclidean steps
            bool clean = false;
            while (!clean) {
                clean = true;
                for (std::size_t i = t + 1; i < n; ++i) {
                    while (m[i][t] != 0) {
                        Int q = m[i][t] / m[t][t];
                        for (std::size_t j = t; j < n; ++j) m[i][j] -= q * m[t][j];
                        if (m[i][t] != 0) std::swap(m[i], m[t]);
                        clean = false;
                    }
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    while (m[t][j] != 0) {
                        Int q = m[t][j] / m[t][t];
                        for (std::size_t i = t; i < n; ++i) m[i][j] -= q * m[i][t];
                        if (m[t][j] != 0)
                            for (std::size_t i = t; i < n; ++i) std::swap(m[i][j], m[i][t]);
                        clean = false;
                    }
                }
            }
            // enforce divisibility of the trailing block by the pivot
            bool restart = false;
            for (std::size_t i = t + 1; i < n && !restart; ++i)
                for (std::size_t j = t + 1; j < n && !restart; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t jj = t; jj < n; ++jj) m[t][jj] += m[i][jj];
                        restart = true;
                    }
            if (!restart) break;
        }
        Int d = m[t][t];
        divisors.push_back(d < 0 ? -d : d);
    }
    return divisors;
}

/// |det A| via the Smith normal form; throws on singular input. This is the
/// number of torus solutions of the binomial system x^{a_i} = c_i for
/// generic c.
inline Int binomial_count_oracle(const std::vector<std::vector<Int>>& a) {
    std::vector<Int> div = smith_normal_form(a);
    Int prod = 1;
    for (const Int& d : div) {
        if (d == 0) throw std::invalid_argument("binomial_count_oracle: singular matrix");
        prod *= d;
    }
    return prod;
}

}  // namespace diffvol

#endif
