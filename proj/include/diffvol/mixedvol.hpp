// Exact mixed volumes: polarization (inclusion-exclusion over subset
// Minkowski sums), a grid-interpolation oracle, and the multilinear block
// expansion fast path for polytopes supported on complementary coordinate
// blocks.

#ifndef DIFFVOL_MIXEDVOL_HPP
#define DIFFVOL_MIXEDVOL_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytope.hpp"

namespace diffvol {

/// V(K_1,...,K_s) by polarization:
/// V = (1/s!) sum over nonempty J of (-1)^{s-|J|} Vol(sum_{j in J} K_j).
/// Subsets are enumerated by binary counting; sums are hulled pairwise so
/// candidate point sets stay small.
inline Rat mixed_volume(const std::vector<LatticePolytope>& polys) {
    if (polys.empty()) throw std::invalid_argument("mixed_volume: empty input");
    const int s = polys.front().ambient_dim();
    if (static_cast<int>(polys.size()) != s)
        throw std::invalid_argument("mixed_volume: need s polytopes in dimension s");
    for (const auto& p : polys)
        if (p.ambient_dim() != s)
            throw std::invalid_argument("mixed_volume: dimension mismatch");
    Rat acc = 0;
    for (unsigned long mask = 1; mask < (1ul << s); ++mask) {
        std::optional<LatticePolytope> sum;
        int card = 0;
        for (int j = 0; j < s; ++j) {
            if (!(mask >> j & 1ul)) continue;
            ++card;
            sum = sum ? minkowski_sum(*sum, polys[j]) : polys[j];
        }
        Rat vol = sum->volume();  // 0 for degenerate sums
        if ((s - card) % 2 == 0)
            acc += vol;
        else
            acc -= vol;
    }
    return acc / Rat(detail::HullEngine::factorial(s));
}

/// s! V as an integer; the polarization sum of lattice polytopes is always
/// an integer multiple of 1/s!.
inline Int bkk_count(const std::vector<LatticePolytope>& polys) {
    const int s = static_cast<int>(polys.size());
    Rat v = mixed_volume(polys) * Rat(detail::HullEngine::factorial(s));
    v.canonicalize();
    if (v.get_den() != 1)
        throw std::logic_error("bkk_count: non-integer normalized mixed volume");
    return v.get_num();
}

/// Independent oracle: extracts the λ_1...λ_s coefficient of
/// Vol(λ_1 K_1 + ... + λ_s K_s) by tensor-product Lagrange interpolation on
/// the integer grid {0..s}^s and divides by s!. Guarded to s <= 5.
inline Rat mixed_volume_interp(const std::vector<LatticePolytope>& polys) {
    if (polys.empty()) throw std::invalid_argument("mixed_volume_interp: empty input");
    const int s = polys.front().ambient_dim();
    if (static_cast<int>(polys.size()) != s)
        throw std::invalid_argument("mixed_volume_interp: need s polytopes");
    if (s > 5) throw std::invalid_argument("mixed_volume_interp: guard s <= 5 exceeded");
    // univariate weights w_k extracting the degree-1 coefficient of a
    // degree-<=s polynomial sampled at nodes 0..s (row 1 of the inverse
    // Vandermonde): solve V^T w = e_1 exactly.
    const int m = s + 1;
    std::vector<std::vector<Rat>> vt(m, std::vector<Rat>(m + 1, Rat(0)));
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k < m; ++k) {
            Rat p = 1;
            for (int e = 0; e < r; ++e) p *= Rat(k);
            vt[r][k] = p;  // node^r
        }
        vt[r][m] = (r == 1) ? Rat(1) : Rat(0);
    }
    // Gaussian elimination
    for (int c = 0; c < m; ++c) {
        int piv = c;
        while (piv < m && vt[piv][c] == 0) ++piv;
        std::swap(vt[c], vt[piv]);
        Rat lead = vt[c][c];
        for (int j = c; j <= m; ++j) vt[c][j] /= lead;
        for (int r = 0; r < m; ++r) {
            if (r == c || vt[r][c] == 0) continue;
            Rat f = vt[r][c];
            for (int j = c; j <= m; ++j) vt[r][j] -= f * vt[c][j];
        }
    }
    std::vector<Rat> w(m);
    for (int k = 0; k < m; ++k) w[k] = vt[k][m];

    Rat acc = 0;
    std::vector<int> lambda(s, 0);
    while (true) {
        Rat weight = 1;
        for (int j = 0; j < s; ++j) weight *= w[lambda[j]];
        if (weight != 0) {
            std::optional<LatticePolytope> sum;
            for (int j = 0; j < s; ++j) {
                if (lambda[j] == 0) continue;
                LatticePolytope d = polys[j].dilate(Int(lambda[j]));
                sum = sum ? minkowski_sum(*sum, d) : d;
            }
            if (sum) acc += weight * sum->volume();
        }
        int j = s - 1;
        while (j >= 0 && lambda[j] == s) {
            lambda[j] = 0;
            --j;
        }
        if (j < 0) break;
        ++lambda[j];
    }
    // the all-ones coefficient of the volume polynomial is s! V
    return acc / Rat(detail::HullEngine::factorial(s));
}

/// Symbolic non-negative-integer Minkowski combination of named basis
/// polytopes. Each basis polytope must be a dilated standard simplex on its
/// own coordinate block, blocks pairwise disjoint.
struct FormalCombination {
    // coefficient per basis element, index-aligned with BlockBasis
    std::vector<Int> coefficients;
};

class BlockBasis {
public:
    struct Element {
        std::string name;
        std::vector<int> block;  // coordinate indices
        Int dilation;            // polytope = dilation * unit simplex on block
    };

    BlockBasis(int ambient_dim, std::vector<Element> elements)
        : dim_(ambient_dim), elements_(std::move(elements)) {
        std::set<int> seen;
        for (const auto& e : elements_) {
            if (e.dilation < 0) throw std::invalid_argument("BlockBasis: negative dilation");
            for (int c : e.block) {
                if (c < 0 || c >= dim_)
                    throw std::invalid_argument("BlockBasis: coordinate out of range");
                if (!seen.insert(c).second)
                    throw std::invalid_argument("BlockBasis: blocks are not complementary");
            }
        }
    }

    int ambient_dim() const { return dim_; }
    const std::vector<Element>& elements() const { return elements_; }

    LatticePolytope realize(const FormalCombination& fc) const {
        check(fc);
        std::optional<LatticePolytope> sum;
        for (std::size_t b = 0; b < elements_.size(); ++b) {
            Int c = fc.coefficients[b] * elements_[b].dilation;
            if (c == 0) continue;
            LatticePolytope p = unit_simplex_on(dim_, elements_[b].block).dilate(c);
            sum = sum ? minkowski_sum(*sum, p) : p;
        }
        return sum ? *sum : LatticePolytope::origin(dim_);
    }

    void check(const FormalCombination& fc) const {
        if (fc.coefficients.size() != elements_.size())
            throw std::invalid_argument("FormalCombination: coefficient count mismatch");
        for (const Int& c : fc.coefficients)
            if (c < 0) throw std::invalid_argument("FormalCombination: negative coefficient");
    }

private:
    int dim_;
    std::vector<Element> elements_;
};

/// Multilinear block expansion of s! V(entries): assign each entry to one
/// basis element; an assignment contributes the product of its coefficients
/// times dilations iff every block receives exactly as many entries as its
/// dimension (then the base mixed volume is 1/s!), and zero otherwise.
/// Returns V itself (the rational mixed volume).
inline Rat mixed_volume_blocks(const BlockBasis& basis,
                               const std::vector<FormalCombination>& entries) {
    const int s = basis.ambient_dim();
    if (static_cast<int>(entries.size()) != s)
        throw std::invalid_argument("mixed_volume_blocks: need s entries");
    int covered = 0;
    for (const auto& e : basis.elements()) covered += static_cast<int>(e.block.size());
    for (const auto& fc : entries) basis.check(fc);
    const std::size_t nb = basis.elements().size();
    if (covered != s) return Rat(0);  // some coordinate never moves: degenerate
    // depth-first over entry assignments with remaining block capacities
    std::vector<int> capacity(nb);
    for (std::size_t b = 0; b < nb; ++b)
        capacity[b] = static_cast<int>(basis.elements()[b].block.size());
    Int total = 0;
    std::function<void(int, Int)> rec = [&](int entry, Int product) {
        if (entry == s) {
            total += product;
            return;
        }
        const auto& fc = entries[static_cast<std::size_t>(entry)];
        for (std::size_t b = 0; b < nb; ++b) {
            if (capacity[b] == 0) continue;
            Int c = fc.coefficients[b] * basis.elements()[b].dilation;
            if (c == 0) continue;
            --capacity[b];
            rec(entry + 1, product * c);
            ++capacity[b];
        }
    };
    rec(0, Int(1));
    return Rat(total) / Rat(detail::HullEngine::factorial(s));
}

}  // namespace diffvol

#endif
