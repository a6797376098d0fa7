// Differential polynomials over Q(t): jets, total derivatives, tau-systems,
// Newton polytopes and linear elimination.

#ifndef DIFFVOL_DIFFPOLY_HPP
#define DIFFVOL_DIFFPOLY_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jet.hpp"
#include "rational.hpp"

namespace diffvol {

/// Finitely supported map from exponent vectors to Q(t) coefficients over a
/// jet layout. Exponent vectors are dense, variable-major / order-minor,
/// with one extra slot per opaque constant generator. No stored coefficient
/// is zero.
class DiffPolynomial {
public:
    using Exponent = std::vector<int>;
    using TermMap = std::map<Exponent, Rational>;

    explicit DiffPolynomial(JetLayout layout) : layout_(std::move(layout)) {}
    DiffPolynomial(JetLayout layout, TermMap terms)
        : layout_(std::move(layout)), terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (static_cast<int>(it->first.size()) != layout_.width())
                throw std::invalid_argument("DiffPolynomial: bad exponent width");
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
    }

    static DiffPolynomial zero(const JetLayout& layout) { return DiffPolynomial(layout); }

    static DiffPolynomial constant(const JetLayout& layout, Rational c) {
        DiffPolynomial p(layout);
        if (!c.is_zero()) p.terms_[Exponent(layout.width(), 0)] = std::move(c);
        return p;
    }

    /// The coordinate monomial ξ_var^(order).
    static DiffPolynomial variable(const JetLayout& layout, int var, int order) {
        DiffPolynomial p(layout);
        Exponent e(layout.width(), 0);
        e[layout.coord(var, order)] = 1;
        p.terms_[std::move(e)] = Rational(1);
        return p;
    }

    static DiffPolynomial opaque_constant(const JetLayout& layout, int k) {
        DiffPolynomial p(layout);
        Exponent e(layout.width(), 0);
        e[layout.const_slot(k)] = 1;
        p.terms_[std::move(e)] = Rational(1);
        return p;
    }

    const JetLayout& layout() const { return layout_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exponent& e, const Rational& c) {
        if (static_cast<int>(e.size()) != layout_.width())
            throw std::invalid_argument("add_term: bad exponent width");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend DiffPolynomial operator+(const DiffPolynomial& a, const DiffPolynomial& b) {
        require_same_layout(a, b);
        DiffPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend DiffPolynomial operator-(const DiffPolynomial& a, const DiffPolynomial& b) {
        require_same_layout(a, b);
        DiffPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend DiffPolynomial operator-(const DiffPolynomial& a) {
        DiffPolynomial r(a.layout_);
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b) {
        require_same_layout(a, b);
        DiffPolynomial r(a.layout_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend DiffPolynomial operator*(const Rational& c, const DiffPolynomial& a) {
        DiffPolynomial r(a.layout_);
        if (c.is_zero()) return r;
        for (const auto& [e, coeff] : a.terms_) r.terms_[e] = c * coeff;
        return r;
    }
    friend bool operator==(const DiffPolynomial& a, const DiffPolynomial& b) {
        return a.layout_ == b.layout_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffPolynomial& a, const DiffPolynomial& b) {
        return !(a == b);
    }

    DiffPolynomial pow(unsigned k) const {
        DiffPolynomial r = constant(layout_, Rational(1));
        DiffPolynomial base = *this;
        while (k) {
            if (k & 1u) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    int degree_in(int coord) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[coord]);
        return d;
    }

    int total_jet_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int i = 0; i < layout_.s(); ++i) t += e[i];
            d = std::max(d, t);
        }
        return d;
    }

    bool uses_constants() const {
        for (const auto& [e, c] : terms_)
            for (int i = layout_.s(); i < layout_.width(); ++i)
                if (e[i] > 0) return true;
        return false;
    }

    /// Re-embed into a layout of jet order new_l >= max order used.
    DiffPolynomial with_order(int new_l) const {
        JetLayout nl = layout_.with_order(new_l);
        DiffPolynomial r(nl);
        for (const auto& [e, c] : terms_) {
            Exponent ne(nl.width(), 0);
            for (int i = 0; i < layout_.s(); ++i) {
                if (e[i] == 0) continue;
                int j = layout_.order_of(i);
                if (j > new_l)
                    throw std::invalid_argument("with_order: support exceeds target order");
                ne[nl.coord(layout_.var_of(i), j)] = e[i];
            }
            for (int k = 0; k < static_cast<int>(layout_.const_names().size()); ++k)
                ne[nl.const_slot(k)] = e[layout_.const_slot(k)];
            r.terms_[std::move(ne)] = c;
        }
        return r;
    }

    /// Partial derivative with respect to a jet coordinate.
    DiffPolynomial partial(int coord) const {
        DiffPolynomial r(layout_);
        for (const auto& [e, c] : terms_) {
            if (e[coord] == 0) continue;
            Exponent ne = e;
            --ne[coord];
            r.add_term(ne, Rational(Int(e[coord])) * c);
        }
        return r;
    }

private:
    static void require_same_layout(const DiffPolynomial& a, const DiffPolynomial& b) {
        if (a.layout_ != b.layout_)
            throw std::invalid_argument("DiffPolynomial: layout mismatch");
    }

    JetLayout layout_;
    TermMap terms_;
};

/// Total derivative: Leibniz rule sending ξ_i^(j) to ξ_i^(j+1) and applying
/// d/dt to every coefficient. The result lives in the order-(l+1) layout
/// even when no order-(l+1) coordinate appears. Opaque constant generators
/// differentiate to zero.
inline DiffPolynomial total_derivative(const DiffPolynomial& p) {
    const JetLayout& L = p.layout();
    JetLayout nl = L.with_order(L.l() + 1);
    DiffPolynomial r(nl);
    for (const auto& [e, c] : p.terms()) {
        DiffPolynomial::Exponent base(nl.width(), 0);
        for (int i = 0; i < L.s(); ++i)
            base[nl.coord(L.var_of(i), L.order_of(i))] = e[i];
        for (int k = 0; k < static_cast<int>(L.const_names().size()); ++k)
            base[nl.const_slot(k)] = e[L.const_slot(k)];
        // coefficient derivative keeps the monomial
        Rational dc = c.derivative();
        if (!dc.is_zero()) r.add_term(base, dc);
        // one Leibniz term per jet coordinate with positive exponent
        for (int i = 0; i < L.s(); ++i) {
            if (e[i] == 0) continue;
            DiffPolynomial::Exponent ne = base;
            --ne[nl.coord(L.var_of(i), L.order_of(i))];
            ++ne[nl.coord(L.var_of(i), L.order_of(i) + 1)];
            r.add_term(ne, Rational(Int(e[i])) * c);
        }
    }
    return r;
}

/// P^D: d/dt applied to every coefficient, support unchanged or smaller.
inline DiffPolynomial coeff_derivative(const DiffPolynomial& p) {
    DiffPolynomial r(p.layout());
    for (const auto& [e, c] : p.terms()) {
        Rational dc = c.derivative();
        if (!dc.is_zero()) r.add_term(e, dc);
    }
    return r;
}

/// Layout of the first prolongation of the ambient space of `L`: every jet
/// coordinate ζ of L becomes an order-0 base variable and acquires an
/// order-1 partner ζ^(1). Flattened variable names carry an `o<order>`
/// suffix so that the text grammar stays unambiguous.
inline JetLayout prolonged_layout(const JetLayout& L) {
    std::vector<std::string> names;
    for (int c = 0; c < L.s(); ++c)
        names.push_back(L.var_names()[L.var_of(c)] + "o" + std::to_string(L.order_of(c)));
    return JetLayout(L.s(), 1, std::move(names), L.const_names());
}

/// Embed a polynomial over L into the prolonged layout (order-0 part only).
inline DiffPolynomial embed_in_prolongation(const DiffPolynomial& p) {
    const JetLayout& L = p.layout();
    JetLayout ext = prolonged_layout(L);
    DiffPolynomial r(ext);
    for (const auto& [e, c] : p.terms()) {
        DiffPolynomial::Exponent ne(ext.width(), 0);
        for (int i = 0; i < L.s(); ++i) ne[ext.coord(i, 0)] = e[i];
        for (int k = 0; k < static_cast<int>(L.const_names().size()); ++k)
            ne[ext.const_slot(k)] = e[L.const_slot(k)];
        r.add_term(ne, c);
    }
    return r;
}

/// The tau-system of k polynomials: the originals together with their
/// linearizations sum_i (dP_j/dζ_i) ζ_i^(1) + P_j^D over the prolonged
/// coordinate space.
struct TauSystem {
    std::vector<DiffPolynomial> base;   // the k inputs, original layout
    std::vector<DiffPolynomial> pairs;  // 2k polynomials, prolonged layout
};

inline TauSystem tau_system(const std::vector<DiffPolynomial>& polys) {
    if (polys.empty()) throw std::invalid_argument("tau_system: empty input");
    const JetLayout& L = polys.front().layout();
    for (const auto& p : polys)
        if (p.layout() != L) throw std::invalid_argument("tau_system: layout mismatch");
    JetLayout ext = prolonged_layout(L);
    TauSystem out;
    out.base = polys;
    for (const auto& p : polys) out.pairs.push_back(embed_in_prolongation(p));
    for (const auto& p : polys) {
        DiffPolynomial q(ext);
        for (int i = 0; i < L.s(); ++i) {
            DiffPolynomial dpi = embed_in_prolongation(p.partial(i));
            if (dpi.is_zero()) continue;
            q = q + dpi * DiffPolynomial::variable(ext, i, 1);
        }
        q = q + embed_in_prolongation(coeff_derivative(p));
        out.pairs.push_back(std::move(q));
    }
    return out;
}

/// Newton polytope: hull of the jet-coordinate exponents of the nonzero
/// terms. Constant generators do not contribute coordinates.
inline LatticePolytope newton_polytope(const DiffPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("newton_polytope: zero polynomial");
    std::vector<LatticePoint> pts;
    for (const auto& [e, c] : p.terms()) {
        LatticePoint q(static_cast<std::size_t>(p.layout().s()));
        for (int i = 0; i < p.layout().s(); ++i) q[i] = e[i];
        pts.push_back(std::move(q));
    }
    return LatticePolytope(p.layout().s(), std::move(pts));
}

/// The jet (x, Dx, ..., D^l x) flattened variable-major / order-minor.
inline std::vector<Rational> jet(const std::vector<Rational>& x, int l) {
    std::vector<Rational> out;
    for (const Rational& xi : x) {
        Rational cur = xi;
        out.push_back(cur);
        for (int j = 1; j <= l; ++j) {
            cur = cur.derivative();
            out.push_back(cur);
        }
    }
    return out;
}

/// True iff every order-j entry is the derivative of the order-(j-1) entry.
inline bool is_jet(const std::vector<Rational>& y, const JetLayout& layout) {
    if (static_cast<int>(y.size()) != layout.s())
        throw std::invalid_argument("is_jet: wrong tuple length");
    for (int i = 0; i < layout.n(); ++i)
        for (int j = 1; j <= layout.l(); ++j)
            if (y[layout.coord(i, j)] != y[layout.coord(i, j - 1)].derivative())
                return false;
    return true;
}

/// Substitutes the jet of x into P and reduces in Q(t).
inline Rational evaluate_at_jet(const DiffPolynomial& p, const std::vector<Rational>& x) {
    const JetLayout& L = p.layout();
    if (static_cast<int>(x.size()) != L.n())
        throw std::invalid_argument("evaluate_at_jet: wrong point dimension");
    if (p.uses_constants())
        throw std::domain_error("evaluate_at_jet: opaque constants have no value");
    std::vector<Rational> vals = jet(x, L.l());
    Rational sum(0);
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (int i = 0; i < L.s(); ++i)
            if (e[i] > 0) term *= vals[i].pow(static_cast<unsigned>(e[i]));
        sum += term;
    }
    return sum;
}

/// Exact division of multivariate polynomials over Q(t); throws when the
/// division is not exact. Division is by lexicographic leading-term
/// cancellation.
inline DiffPolynomial div_exact(const DiffPolynomial& a, const DiffPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("div_exact: division by zero");
    DiffPolynomial rem = a;
    DiffPolynomial quo(a.layout());
    const auto& blead = *b.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        DiffPolynomial::Exponent q(rlead.first.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = rlead.first[i] - blead.first[i];
            if (q[i] < 0) throw std::invalid_argument("div_exact: inexact division");
        }
        Rational qc = rlead.second / blead.second;
        DiffPolynomial qm(a.layout());
        qm.add_term(q, qc);
        quo = quo + qm;
        rem = rem - qm * b;
    }
    return quo;
}

/// Determinant of a square matrix of polynomials by fraction-free (Bareiss)
/// elimination; entries must share a layout.
inline DiffPolynomial poly_det(std::vector<std::vector<DiffPolynomial>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
    const JetLayout layout = m[0][0].layout();
    DiffPolynomial prev = DiffPolynomial::constant(layout, Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return DiffPolynomial::zero(layout);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = div_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = DiffPolynomial::zero(layout);
        }
        prev = m[k][k];
    }
    DiffPolynomial d = m[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

/// Linear elimination: given n+1 polynomials over a prolongation layout
/// (jet order 1, n base variables), each of degree <= 1 in every order-1
/// coordinate, homogenize with a coordinate ζ_0^(1) multiplying the
/// ζ^(1)-free part (placed in the last column) and return the determinant
/// of the (n+1)x(n+1) coefficient matrix, a polynomial over the order-0
/// layout. Its Newton polytope is contained in the Minkowski sum of the
/// ζ-Newton polytopes of the inputs.
inline DiffPolynomial eliminate_linear(const std::vector<DiffPolynomial>& polys) {
    if (polys.empty()) throw std::invalid_argument("eliminate_linear: empty input");
    const JetLayout& L = polys.front().layout();
    if (L.l() != 1)
        throw std::invalid_argument("eliminate_linear: expected a jet-order-1 layout");
    const int n = L.n();
    if (static_cast<int>(polys.size()) != n + 1)
        throw std::invalid_argument("eliminate_linear: need exactly n+1 polynomials");
    JetLayout base = L.with_order(0);
    std::vector<std::vector<DiffPolynomial>> m(
        static_cast<std::size_t>(n + 1),
        std::vector<DiffPolynomial>(static_cast<std::size_t>(n + 1),
                                    DiffPolynomial::zero(base)));
    for (int r = 0; r <= n; ++r) {
        const DiffPolynomial& p = polys[r];
        if (p.layout() != L) throw std::invalid_argument("eliminate_linear: layout mismatch");
        for (const auto& [e, c] : p.terms()) {
            int lin = -1;
            for (int i = 0; i < n; ++i) {
                int ex = e[L.coord(i, 1)];
                if (ex > 1 || (ex == 1 && lin >= 0))
                    throw std::invalid_argument(
                        "eliminate_linear: input not linear in the prolonged block");
                if (ex == 1) lin = i;
            }
            DiffPolynomial::Exponent be(base.width(), 0);
            for (int i = 0; i < n; ++i) be[base.coord(i, 0)] = e[L.coord(i, 0)];
            for (int k = 0; k < static_cast<int>(L.const_names().size()); ++k)
                be[base.const_slot(k)] = e[L.const_slot(k)];
            // homogenizing column (the ζ^(1)-free part) goes last
            int col = lin >= 0 ? lin : n;
            DiffPolynomial mono(base);
            mono.add_term(be, c);
            m[r][col] = m[r][col] + mono;
        }
    }
    return poly_det(std::move(m));
}

}  // namespace diffvol

#endif
