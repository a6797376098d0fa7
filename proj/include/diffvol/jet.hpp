// Jet coordinate layouts: n base variables, derivatives up to order l,
// variable-major / order-minor indexing, plus optional opaque constant
// generators with derivative zero.

#ifndef DIFFVOL_JET_HPP
#define DIFFVOL_JET_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "polytope.hpp"

namespace diffvol {

class JetLayout {
public:
    JetLayout(int n, int l, std::vector<std::string> var_names = {},
              std::vector<std::string> const_names = {})
        : n_(n), l_(l), vars_(std::move(var_names)), consts_(std::move(const_names)) {
        if (n < 1 || l < 0) throw std::invalid_argument("JetLayout: need n >= 1, l >= 0");
        if (vars_.empty()) {
            static const char* defaults[] = {"x", "y", "z", "u", "v", "w"};
            for (int i = 0; i < n; ++i)
                vars_.push_back(i < 6 ? defaults[i] : "x" + std::to_string(i));
        }
        if (static_cast<int>(vars_.size()) != n)
            throw std::invalid_argument("JetLayout: variable name count mismatch");
    }

    int n() const { return n_; }
    int l() const { return l_; }
    /// Jet coordinate count s = n(l+1).
    int s() const { return n_ * (l_ + 1); }
    /// Exponent vector width: jet coordinates plus constant generators.
    int width() const { return s() + static_cast<int>(consts_.size()); }

    const std::vector<std::string>& var_names() const { return vars_; }
    const std::vector<std::string>& const_names() const { return consts_; }

    int coord(int var, int order) const {
        if (var < 0 || var >= n_ || order < 0 || order > l_)
            throw std::out_of_range("JetLayout: coordinate out of range");
        return var * (l_ + 1) + order;
    }
    int var_of(int coord) const { return coord / (l_ + 1); }
    int order_of(int coord) const { return coord % (l_ + 1); }
    int const_slot(int k) const { return s() + k; }

    int var_index(const std::string& name) const {
        for (int i = 0; i < n_; ++i)
            if (vars_[i] == name) return i;
        return -1;
    }
    int const_index(const std::string& name) const {
        for (std::size_t i = 0; i < consts_.size(); ++i)
            if (consts_[i] == name) return static_cast<int>(i);
        return -1;
    }

    std::string coord_name(int c) const {
        if (c >= s()) return consts_[c - s()];
        int j = order_of(c);
        return j == 0 ? vars_[var_of(c)] : vars_[var_of(c)] + "_" + std::to_string(j);
    }

    JetLayout with_order(int new_l) const {
        return JetLayout(n_, new_l, vars_, consts_);
    }

    friend bool operator==(const JetLayout& a, const JetLayout& b) {
        return a.n_ == b.n_ && a.l_ == b.l_ && a.vars_ == b.vars_ && a.consts_ == b.consts_;
    }
    friend bool operator!=(const JetLayout& a, const JetLayout& b) { return !(a == b); }

private:
    int n_, l_;
    std::vector<std::string> vars_;
    std::vector<std::string> consts_;
};

/// Coordinate block selections for standard simplices embedded in Z^s.
enum class SimplexBlock { All, BaseVariables, SingleVariableJets, OrdersUpTo };

/// Hull of the origin and the unit vectors of the selected jet coordinates.
/// `arg` is the variable index for SingleVariableJets and the order cap for
/// OrdersUpTo; ignored otherwise.
inline LatticePolytope standard_simplex(const JetLayout& layout, SimplexBlock block,
                                        int arg = 0) {
    std::vector<int> coords;
    switch (block) {
        case SimplexBlock::All:
            for (int c = 0; c < layout.s(); ++c) coords.push_back(c);
            break;
        case SimplexBlock::BaseVariables:
            for (int i = 0; i < layout.n(); ++i) coords.push_back(layout.coord(i, 0));
            break;
        case SimplexBlock::SingleVariableJets:
            if (arg < 0 || arg >= layout.n())
                throw std::invalid_argument("standard_simplex: bad variable index");
            for (int j = 0; j <= layout.l(); ++j) coords.push_back(layout.coord(arg, j));
            break;
        case SimplexBlock::OrdersUpTo:
            if (arg < 0 || arg > layout.l())
                throw std::invalid_argument("standard_simplex: bad order cap");
            for (int i = 0; i < layout.n(); ++i)
                for (int j = 0; j <= arg; ++j) coords.push_back(layout.coord(i, j));
            break;
    }
    return unit_simplex_on(layout.s(), coords);
}

}  // namespace diffvol

#endif
