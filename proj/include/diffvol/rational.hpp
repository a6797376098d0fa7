// Exact arithmetic in Q(t): integer univariate polynomials and reduced
// fractions thereof, with the derivation d/dt.

#ifndef DIFFVOL_RATIONAL_HPP
#define DIFFVOL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diffvol {

using Int = mpz_class;
using Rat = mpq_class;

/// Univariate polynomial in t with integer coefficients, dense
/// representation, trailing zeros trimmed. The zero polynomial has an
/// empty coefficient vector.
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(long c) { if (c != 0) coef_.push_back(Int(c)); }
    ZPoly(Int c) { if (c != 0) coef_.push_back(std::move(c)); }
    explicit ZPoly(std::vector<Int> coef) : coef_(std::move(coef)) { trim(); }

    static ZPoly t() { return ZPoly(std::vector<Int>{0, 1}); }

    bool is_zero() const { return coef_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    const Int& operator[](std::size_t i) const { return coef_[i]; }
    const std::vector<Int>& coefficients() const { return coef_; }
    const Int& leading() const { return coef_.back(); }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        std::vector<Int> c(std::max(a.coef_.size(), b.coef_.size()));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) c[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) c[i] += b.coef_[i];
        return ZPoly(std::move(c));
    }
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
        std::vector<Int> c(std::max(a.coef_.size(), b.coef_.size()));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) c[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) c[i] -= b.coef_[i];
        return ZPoly(std::move(c));
    }
    friend ZPoly operator-(const ZPoly& a) {
        std::vector<Int> c(a.coef_.size());
        for (std::size_t i = 0; i < a.coef_.size(); ++i) c[i] = -a.coef_[i];
        return ZPoly(std::move(c));
    }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return ZPoly();
        std::vector<Int> c(a.coef_.size() + b.coef_.size() - 1);
        for (std::size_t i = 0; i < a.coef_.size(); ++i)
            for (std::size_t j = 0; j < b.coef_.size(); ++j)
                c[i + j] += a.coef_[i] * b.coef_[j];
        return ZPoly(std::move(c));
    }
    friend bool operator==(const ZPoly& a, const ZPoly& b) {
        return a.coef_ == b.coef_;
    }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }
    // lexicographic by (degree, coefficients); total order for map keys
    friend bool operator<(const ZPoly& a, const ZPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = a.coef_.size(); i-- > 0;)
            if (a.coef_[i] != b.coef_[i]) return a.coef_[i] < b.coef_[i];
        return false;
    }

    ZPoly derivative() const {
        if (coef_.size() <= 1) return ZPoly();
        std::vector<Int> c(coef_.size() - 1);
        for (std::size_t i = 1; i < coef_.size(); ++i)
            c[i - 1] = coef_[i] * Int(static_cast<long>(i));
        return ZPoly(std::move(c));
    }

    /// gcd of the coefficients, non-negative; 0 for the zero polynomial.
    Int content() const {
        Int g = 0;
        for (const Int& c : coef_) { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t()); }
        return g;
    }

    ZPoly primitive_part() const {
        if (is_zero()) return ZPoly();
        Int g = content();
        if (leading() < 0) g = -g;
        std::vector<Int> c(coef_.size());
        for (std::size_t i = 0; i < coef_.size(); ++i) c[i] = coef_[i] / g;
        return ZPoly(std::move(c));
    }

    /// Exact division; throws if the division leaves a remainder.
    friend ZPoly div_exact(const ZPoly& a, const ZPoly& b) {
        if (b.is_zero()) throw std::invalid_argument("ZPoly: division by zero");
        if (a.is_zero()) return ZPoly();
        std::vector<Int> rem = a.coef_;
        std::vector<Int> quo(a.coef_.size() >= b.coef_.size()
                                 ? a.coef_.size() - b.coef_.size() + 1
                                 : 0);
        int dr = a.degree();
        const int db = b.degree();
        while (dr >= db) {
            while (dr >= 0 && rem[dr] == 0) --dr;
            if (dr < db) break;
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[dr].get_mpz_t(),
                        b.leading().get_mpz_t());
            if (r != 0) throw std::invalid_argument("ZPoly: inexact division");
            quo[dr - db] = q;
            for (int i = 0; i <= db; ++i) rem[dr - db + i] -= q * b.coef_[i];
        }
        for (const Int& c : rem)
            if (c != 0) throw std::invalid_argument("ZPoly: inexact division");
        return ZPoly(std::move(quo));
    }

    Rat evaluate(const Rat& t) const {
        Rat v = 0;
        for (std::size_t i = coef_.size(); i-- > 0;) v = v * t + Rat(coef_[i]);
        return v;
    }

    /// Text form using `t`, e.g. "t^2-3*t+1"; "0" for zero.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coef_.size(); i-- > 0;) {
            const Int& c = coef_[i];
            if (c == 0) continue;
            std::string mag = Int(abs(c)).get_str();
            if (out.empty())
                out += (c < 0) ? "-" : "";
            else
                out += (c < 0) ? "-" : "+";
            if (i == 0) {
                out += mag;
            } else {
                if (mag != "1") out += mag + "*";
                out += "t";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    }
    std::vector<Int> coef_;
};

/// Primitive gcd with positive leading coefficient; includes the gcd of the
/// integer contents. gcd(0,0) = 0.
inline ZPoly poly_gcd(ZPoly a, ZPoly b) {
    if (a.is_zero()) return b.is_zero() ? ZPoly() : b.primitive_part() * ZPoly(b.content());
    if (b.is_zero()) return a.primitive_part() * ZPoly(a.content());
    Int cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    a = a.primitive_part();
    b = b.primitive_part();
    // primitive PRS via pseudo-remainders
    while (!b.is_zero()) {
        ZPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            std::vector<Int> shift(static_cast<std::size_t>(k) + 1);
            shift.back() = r.leading();
            r = r * ZPoly(std::vector<Int>{b.leading()}) - b * ZPoly(std::move(shift));
            // multiplying r by lc(b) each step only scales the content
        }
        a = b;
        b = r.is_zero() ? ZPoly() : r.primitive_part();
    }
    return a.primitive_part() * ZPoly(cont);
}

/// Element of Q(t), stored as a reduced fraction of integer polynomials.
/// The denominator is never zero, gcd(num, den) is a unit, and the leading
/// coefficient of the denominator is positive.
class Rational {
public:
    Rational() : num_(), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(Int v) : num_(std::move(v)), den_(1) {}
    Rational(const Rat& q) : num_(q.get_num()), den_(q.get_den()) {}
    Rational(ZPoly num, ZPoly den = ZPoly(1)) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
        reduce();
    }

    static Rational t() { return Rational(ZPoly::t()); }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.degree() == 0 && den_.degree() == 0 && num_[0] == den_[0]; }
    /// t-free element, i.e. a rational number.
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

    Rat as_number() const {
        if (!is_constant()) throw std::domain_error("Rational: not t-free");
        if (is_zero()) return Rat(0);
        Rat q(num_[0], den_[0]);
        q.canonicalize();
        return q;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    /// d/dt via the quotient rule.
    Rational derivative() const {
        return Rational(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    Rational pow(unsigned e) const {
        Rational r(1);
        Rational base = *this;
        while (e) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Rat evaluate(const Rat& t) const {
        Rat d = den_.evaluate(t);
        if (d == 0) throw std::domain_error("Rational: pole at evaluation point");
        Rat q = num_.evaluate(t) / d;
        q.canonicalize();
        return q;
    }
    bool has_pole_at(const Rat& t) const { return den_.evaluate(t) == 0; }

    /// Coefficient form of the polynomial text grammar:
    /// int | int/int | (tpoly) | (tpoly)/(tpoly).
    std::string str() const {
        std::string n = num_.degree() <= 0 ? num_.str() : "(" + num_.str() + ")";
        if (den_.degree() == 0 && den_[0] == 1) return n;
        std::string d = den_.degree() <= 0 ? den_.str() : "(" + den_.str() + ")";
        if (num_.degree() > 0 && den_.degree() <= 0) d = "(" + d + ")";
        if (num_.degree() <= 0 && den_.degree() > 0) n = "(" + n + ")";
        return n + "/" + d;
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = ZPoly(1);
            return;
        }
        ZPoly g = poly_gcd(num_, den_);
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
    ZPoly num_, den_;
};

}  // namespace diffvol

#endif
