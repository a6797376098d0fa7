// Solution-count and reduction-degree bounds for algebraic-differential
// systems: the combinatorial constants C and E, the enlarged polytope Γ in
// its published variants, and the five bound statements built on exact
// mixed volumes.

#ifndef DIFFVOL_BOUNDS_HPP
#define DIFFVOL_BOUNDS_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jet.hpp"
#include "mixedvol.hpp"

namespace diffvol {

/// Violated hypothesis of a bound statement (e.g. a missing simplex or a
/// failed co-ideal guard), as opposed to malformed input.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The published Γ variants: (s+1)Δ_ξ, sΔ_ξ^l, and the co-ideal refinement
/// (s-k+1)Δ_ζ.
enum class GammaVariant { Wide, Standard, Refined };
/// E_{s,k} as printed (constant C_{s,k} inside the sum) or with per-index
/// weights C_{s,j}.
enum class EVariant { Printed, PerJ };

struct BoundConfig {
    GammaVariant gamma_variant = GammaVariant::Wide;
    EVariant e_variant = EVariant::Printed;
};

inline std::string to_string(GammaVariant v) {
    switch (v) {
        case GammaVariant::Wide: return "wide";
        case GammaVariant::Standard: return "standard";
        case GammaVariant::Refined: return "refined";
    }
    return "?";
}
inline std::string to_string(EVariant v) {
    return v == EVariant::Printed ? "printed" : "per-j";
}

/// Structured record of a bound computation; recomputable from its inputs.
struct BoundReport {
    std::string statement;
    BoundConfig config;
    int s = 0;
    int k = 0;
    std::optional<Int> c_value;
    std::optional<Int> e_value;
    std::optional<LatticePolytope> gamma;
    std::vector<std::string> terms;
    std::vector<LatticePolytope> dilation_trace;  // (δ+2)^j Γ, j = 1..δ
    Rat bound = 0;
    std::optional<Rat> summed_bound;      // the per-j sum of the general form
    std::optional<Int> hp_comparison;
    std::vector<std::string> notes;
};

inline Int factorial(int n) { return detail::HullEngine::factorial(n); }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// C_{s,k} = s! (δ+2)^{δ(δ+1)/2} with δ = s-k.
inline Int c_const(int s, int k) {
    if (k < 0 || s < 0 || k > s) throw std::invalid_argument("c_const: need 0 <= k <= s");
    const int delta = s - k;
    return factorial(s) *
           int_pow(Int(delta + 2), static_cast<unsigned long>(delta) * (delta + 1) / 2);
}

/// E_{s,k}: printed variant C_{s,k} sum_{j=k}^s (2s)^{s-j}; per-j variant
/// sum_{j=k}^s (2s)^{s-j} C_{s,j}.
inline Int e_const(int s, int k, const BoundConfig& config = {}) {
    if (k < 0 || k > s) throw std::invalid_argument("e_const: need 0 <= k <= s");
    Int sum = 0;
    for (int j = k; j <= s; ++j) {
        Int w = int_pow(Int(2 * s), static_cast<unsigned long>(s - j));
        sum += config.e_variant == EVariant::Printed ? w * c_const(s, k) : w * c_const(s, j);
    }
    return sum;
}

inline int gamma_simplex_factor(GammaVariant v, int s, int k) {
    switch (v) {
        case GammaVariant::Wide: return s + 1;
        case GammaVariant::Standard: return s;
        case GammaVariant::Refined: return s - k + 1;
    }
    return s + 1;
}

/// Γ = factor·Δ_ξ + Δ_1 + ... + Δ_k. The refined variant demands co-ideal
/// input polytopes.
inline LatticePolytope gamma_polytope(const std::vector<LatticePolytope>& deltas,
                                      int ambient_dim, const BoundConfig& config,
                                      int k_for_factor = -1) {
    const int s = ambient_dim;
    const int k = k_for_factor >= 0 ? k_for_factor : static_cast<int>(deltas.size());
    if (config.gamma_variant == GammaVariant::Refined) {
        for (const auto& d : deltas)
            if (!d.is_coideal())
                throw HypothesisError(
                    "gamma_polytope: refined variant requires co-ideal input polytopes");
    }
    std::vector<int> all(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) all[static_cast<std::size_t>(i)] = i;
    LatticePolytope g = unit_simplex_on(s, all).dilate(
        Int(gamma_simplex_factor(config.gamma_variant, s, k)));
    for (const auto& d : deltas) {
        if (d.ambient_dim() != s)
            throw std::invalid_argument("gamma_polytope: dimension mismatch");
        g = minkowski_sum(g, d);
    }
    return g;
}

namespace detail_bounds {

inline Rat checked_integral(const Rat& v, const char* where) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error(std::string(where) + ": non-integer bound");
    return c;
}

inline std::string rat_str(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    return c.get_str();
}

}  // namespace detail_bounds

/// Complete-intersection bound: C_{s,k} V(Δ_1,...,Δ_k, Γ,...,Γ). The
/// report's dilation trace records the chain (δ+2)^j Γ of the underlying
/// reduction; it does not enter the value.
inline BoundReport bound_ci(const std::vector<LatticePolytope>& deltas,
                            const BoundConfig& config = {}) {
    if (deltas.empty()) throw std::invalid_argument("bound_ci: need at least one polytope");
    const int s = deltas.front().ambient_dim();
    const int k = static_cast<int>(deltas.size());
    if (k > s) throw std::invalid_argument("bound_ci: more polytopes than dimensions");
    for (const auto& d : deltas)
        if (d.ambient_dim() != s) throw std::invalid_argument("bound_ci: dimension mismatch");
    BoundReport rep;
    rep.statement = "complete-intersection";
    rep.config = config;
    rep.s = s;
    rep.k = k;
    rep.c_value = c_const(s, k);
    LatticePolytope g = gamma_polytope(deltas, s, config);
    rep.gamma = g;
    const int delta = s - k;
    for (int j = 1; j <= delta; ++j)
        rep.dilation_trace.push_back(g.dilate(int_pow(Int(delta + 2), static_cast<unsigned long>(j))));
    std::vector<LatticePolytope> args = deltas;
    for (int j = 0; j < delta; ++j) args.push_back(g);
    Rat v = mixed_volume(args);
    rep.terms.push_back("V(Delta_1..Delta_k, Gamma x" + std::to_string(delta) + ") = " +
                        detail_bounds::rat_str(v));
    rep.bound = detail_bounds::checked_integral(Rat(*rep.c_value) * v, "bound_ci");
    return rep;
}

/// General-variety bound: the per-j sum with Γ_j, and the simplified form
/// E_{s,k} V(Δ_1,...,Δ_k, Δ,...,Δ). The simplified value is the headline
/// bound; the sum is carried alongside.
inline BoundReport bound_general(const std::vector<LatticePolytope>& ci_deltas,
                                 const LatticePolytope& delta, const BoundConfig& config = {}) {
    const int s = delta.ambient_dim();
    const int k = static_cast<int>(ci_deltas.size());
    if (k < 0 || k > s) throw std::invalid_argument("bound_general: bad k");
    std::vector<int> all(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) all[static_cast<std::size_t>(i)] = i;
    if (!delta.contains(unit_simplex_on(s, all)))
        throw HypothesisError("bound_general: Delta does not contain the standard simplex");
    for (const auto& d : ci_deltas) {
        if (d.ambient_dim() != s)
            throw std::invalid_argument("bound_general: dimension mismatch");
        if (!delta.contains(d))
            throw HypothesisError("bound_general: some Delta_j is not contained in Delta");
    }
    BoundReport rep;
    rep.statement = "general-variety";
    rep.config = config;
    rep.s = s;
    rep.k = k;
    rep.e_value = e_const(s, k, config);
    // simplified form
    {
        std::vector<LatticePolytope> args = ci_deltas;
        for (int j = k; j < s; ++j) args.push_back(delta);
        Rat v = mixed_volume(args);
        rep.terms.push_back("V(Delta_1..Delta_k, Delta x" + std::to_string(s - k) + ") = " +
                            detail_bounds::rat_str(v));
        rep.bound = detail_bounds::checked_integral(Rat(*rep.e_value) * v, "bound_general");
    }
    // per-j sum
    Rat sum = 0;
    for (int j = k; j <= s; ++j) {
        std::vector<LatticePolytope> head = ci_deltas;
        for (int i = k; i < j; ++i) head.push_back(delta);
        LatticePolytope gj = gamma_polytope(head, s, config, k);
        std::vector<LatticePolytope> args = head;
        for (int i = j; i < s; ++i) args.push_back(gj);
        Rat v = mixed_volume(args);
        Rat term = Rat(c_const(s, j)) * v;
        rep.terms.push_back("C(s," + std::to_string(j) + ") V(.., Gamma_" + std::to_string(j) +
                            " x" + std::to_string(s - j) + ") = " + detail_bounds::rat_str(term));
        sum += term;
    }
    rep.summed_bound = detail_bounds::checked_integral(sum, "bound_general(sum)");
    return rep;
}

/// Kushnirenko-type bound E_{s,k} Vol(Δ).
inline BoundReport bound_kushnirenko(const LatticePolytope& delta, int k,
                                     const BoundConfig& config = {}) {
    const int s = delta.ambient_dim();
    if (k < 0 || k > s) throw std::invalid_argument("bound_kushnirenko: bad k");
    std::vector<int> all(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) all[static_cast<std::size_t>(i)] = i;
    if (!delta.contains(unit_simplex_on(s, all)))
        throw HypothesisError("bound_kushnirenko: Delta does not contain the standard simplex");
    BoundReport rep;
    rep.statement = "kushnirenko";
    rep.config = config;
    rep.s = s;
    rep.k = k;
    rep.e_value = e_const(s, k, config);
    Rat vol = delta.volume();
    rep.terms.push_back("Vol(Delta) = " + detail_bounds::rat_str(vol));
    rep.bound = detail_bounds::checked_integral(Rat(*rep.e_value) * vol, "bound_kushnirenko");
    return rep;
}

/// Reduction-degree bound (s-k+1) E_{s,k} V(Δ_1,...,Δ_k, Δ,...,Δ).
inline BoundReport bound_reduction_degree(const std::vector<LatticePolytope>& ci_deltas,
                                          const LatticePolytope& delta,
                                          const BoundConfig& config = {}) {
    BoundReport rep = bound_general(ci_deltas, delta, config);
    rep.statement = "reduction-degree";
    rep.bound = Rat(rep.s - rep.k + 1) * rep.bound;
    rep.summed_bound.reset();
    rep.terms.push_back("factor (s-k+1) = " + std::to_string(rep.s - rep.k + 1));
    return rep;
}

/// Degree-only corollary: E_{s,k} d_X^n d_S^{nl} with s = n(l+1).
inline BoundReport bound_degree_simple(int n, int l, int k, const Int& d_x, const Int& d_s,
                                       const BoundConfig& config = {}) {
    if (n < 1 || l < 0) throw std::invalid_argument("bound_degree_simple: bad layout");
    if (d_s < 1 || d_x < d_s)
        throw std::invalid_argument("bound_degree_simple: need d_X >= d_S >= 1");
    const int s = n * (l + 1);
    if (k < 0 || k > s) throw std::invalid_argument("bound_degree_simple: bad k");
    BoundReport rep;
    rep.statement = "degree-simple";
    rep.config = config;
    rep.s = s;
    rep.k = k;
    rep.e_value = e_const(s, k, config);
    Int v = int_pow(d_x, static_cast<unsigned long>(n)) *
            int_pow(d_s, static_cast<unsigned long>(n) * static_cast<unsigned long>(l));
    rep.terms.push_back("d_X^n d_S^{nl} = " + v.get_str());
    rep.bound = Rat(*rep.e_value * v);
    return rep;
}

/// The prior doubly-exponential comparison value
/// deg(X)^{l 2^{ml}} deg(S)^{2^{ml}-1}.
inline Int bound_hp(const Int& deg_x, const Int& deg_s, int m, int l) {
    if (deg_x < 1 || deg_s < 1 || m < 0 || l < 0)
        throw std::invalid_argument("bound_hp: inputs must be >= 1");
    Int two_ml = int_pow(Int(2), static_cast<unsigned long>(m) * static_cast<unsigned long>(l));
    Int e1 = Int(l) * two_ml;
    Int e2 = two_ml - 1;
    return int_pow(deg_x, e1.get_ui()) * int_pow(deg_s, e2.get_ui());
}

}  // namespace diffvol

#endif
