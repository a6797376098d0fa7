#include <catch2/catch_amalgamated.hpp>

#include <diffvol/bounds.hpp>

#include <random>

#include "oracles.hpp"

using namespace diffvol;

namespace {

LatticePolytope simplex(int dim, const Int& scale = 1) {
    std::vector<int> all(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) all[static_cast<std::size_t>(i)] = i;
    return unit_simplex_on(dim, all).dilate(scale);
}

}  // namespace

TEST_CASE("combinatorial constants") {
    REQUIRE(c_const(8, 6) == 2580480);  // 8! * 4^3
    for (int s = 1; s <= 6; ++s) REQUIRE(c_const(s, s) == factorial(s));
    REQUIRE(c_const(1, 0) == 3);  // 1! * 3^1
    REQUIRE(c_const(2, 0) == 2 * 4 * 4 * 4);
    REQUIRE_THROWS_AS(c_const(2, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(c_const(-1, 0), std::invalid_argument);

    BoundConfig printed;
    BoundConfig perj;
    perj.e_variant = EVariant::PerJ;
    REQUIRE(e_const(2, 1, printed) == 30);  // 6*(4+1)
    REQUIRE(e_const(2, 1, perj) == 26);     // 4*6 + 1*2
    for (int s = 1; s <= 5; ++s) {
        REQUIRE(e_const(s, s, printed) == factorial(s));
        REQUIRE(e_const(s, s, perj) == factorial(s));
    }
    // printed dominates per-j: C_{s,k} >= C_{s,j} for j >= k
    for (int s = 2; s <= 5; ++s)
        for (int k = 0; k < s; ++k) REQUIRE(e_const(s, k, printed) >= e_const(s, k, perj));
    REQUIRE_THROWS_AS(e_const(2, 3), std::invalid_argument);
}

TEST_CASE("gamma simplex factors and nesting") {
    REQUIRE(gamma_simplex_factor(GammaVariant::Wide, 4, 1) == 5);
    REQUIRE(gamma_simplex_factor(GammaVariant::Standard, 4, 1) == 4);
    REQUIRE(gamma_simplex_factor(GammaVariant::Refined, 4, 1) == 4);
    REQUIRE(gamma_simplex_factor(GammaVariant::Refined, 4, 3) == 2);

    std::vector<LatticePolytope> deltas{simplex(3, 2)};
    BoundConfig wide, standard, refined;
    standard.gamma_variant = GammaVariant::Standard;
    refined.gamma_variant = GammaVariant::Refined;
    LatticePolytope g1 = gamma_polytope(deltas, 3, wide);
    LatticePolytope g2 = gamma_polytope(deltas, 3, standard);
    LatticePolytope g3 = gamma_polytope(deltas, 3, refined);
    REQUIRE(g1.contains(g2));
    REQUIRE(g2.contains(g3));

    // the refined variant guards against non-co-ideal inputs
    LatticePolytope seg(2, {{Int(0), Int(0)}, {Int(1), Int(1)}});
    BoundConfig r2;
    r2.gamma_variant = GammaVariant::Refined;
    REQUIRE_THROWS_AS(gamma_polytope({seg}, 2, r2), HypothesisError);
    REQUIRE_NOTHROW(gamma_polytope({seg}, 2, wide));
    REQUIRE_THROWS_AS(gamma_polytope({simplex(2)}, 3, wide), std::invalid_argument);
}

TEST_CASE("complete-intersection bound") {
    // k = s: the constant collapses to s! and the value is the facet count
    BoundReport r = bound_ci({simplex(2, 2), simplex(2, 3)});
    REQUIRE(r.s == 2);
    REQUIRE(r.k == 2);
    REQUIRE(*r.c_value == 2);
    REQUIRE(r.bound == 6);
    REQUIRE(r.dilation_trace.empty());

    // one equation in two jet coordinates, default enlargement
    BoundReport r2 = bound_ci({simplex(2)});
    REQUIRE(*r2.c_value == 6);  // 2! * 3
    REQUIRE(r2.gamma->vertices() == simplex(2, 4).vertices());  // 3D + D
    REQUIRE(r2.bound == 12);
    REQUIRE(r2.dilation_trace.size() == 1);
    REQUIRE(r2.dilation_trace[0].vertices() == simplex(2, 12).vertices());

    // trace length delta with entries (delta+2)^j Gamma
    BoundReport r3 = bound_ci({simplex(4)});
    REQUIRE(r3.dilation_trace.size() == 3);
    for (int j = 1; j <= 3; ++j)
        REQUIRE(r3.dilation_trace[static_cast<std::size_t>(j - 1)].vertices() ==
                r3.gamma->dilate(int_pow(Int(5), static_cast<unsigned long>(j))).vertices());

    REQUIRE_THROWS_AS(bound_ci({}), std::invalid_argument);
    REQUIRE_THROWS_AS(bound_ci({simplex(2), simplex(2), simplex(2)}), std::invalid_argument);
}

TEST_CASE("general-variety bound") {
    BoundReport r = bound_general({simplex(2)}, simplex(2));
    REQUIRE(*r.e_value == 30);
    REQUIRE(r.bound == 15);  // 30 * V(D, D) = 30/2
    REQUIRE(r.summed_bound.has_value());
    REQUIRE(*r.summed_bound <= r.bound);

    // k = s collapses onto the complete-intersection bound
    std::mt19937 rng(89);
    for (int it = 0; it < 10; ++it) {
        int s = 2 + static_cast<int>(rng() % 2);
        std::vector<LatticePolytope> deltas;
        Int dmax = 1;
        for (int j = 0; j < s; ++j) {
            Int d(1 + static_cast<long>(rng() % 3));
            if (d > dmax) dmax = d;
            deltas.push_back(simplex(s, d));
        }
        BoundReport g = bound_general(deltas, simplex(s, dmax));
        BoundReport c = bound_ci(deltas);
        REQUIRE(g.bound == c.bound);
        REQUIRE(*g.summed_bound == c.bound);
    }

    // the per-j sum never exceeds the simplified headline value
    for (int it = 0; it < 15; ++it) {
        int s = 2 + static_cast<int>(rng() % 2);
        int k = static_cast<int>(rng() % (s + 1));
        Int big(2 + static_cast<long>(rng() % 3));
        std::vector<LatticePolytope> deltas;
        for (int j = 0; j < k; ++j)
            deltas.push_back(simplex(s, Int(1 + static_cast<long>(rng() % 2))));
        BoundReport g = bound_general(deltas, simplex(s, big));
        REQUIRE(*g.summed_bound <= g.bound);
    }

    // hypothesis guards
    LatticePolytope seg(2, {{Int(0), Int(0)}, {Int(1), Int(0)}});
    REQUIRE_THROWS_AS(bound_general({}, seg), HypothesisError);
    REQUIRE_THROWS_AS(bound_general({simplex(2, 3)}, simplex(2, 2)), HypothesisError);
    REQUIRE_THROWS_AS(bound_general({simplex(3)}, simplex(2)), std::invalid_argument);
}

TEST_CASE("volume-only bound") {
    BoundReport r = bound_kushnirenko(simplex(2, 2), 1);
    REQUIRE(r.bound == 60);  // 30 * Vol(2D) = 30 * 2
    BoundReport r2 = bound_kushnirenko(simplex(2), 2);
    REQUIRE(r2.bound == 1);  // s! Vol(D)
    for (int s = 1; s <= 4; ++s) {
        Rat expect = Rat(e_const(s, s)) * simplex(s, 3).volume();
        expect.canonicalize();
        REQUIRE(bound_kushnirenko(simplex(s, 3), s).bound == expect);
    }
    LatticePolytope seg(2, {{Int(0), Int(0)}, {Int(1), Int(0)}});
    REQUIRE_THROWS_AS(bound_kushnirenko(seg, 1), HypothesisError);
    REQUIRE_THROWS_AS(bound_kushnirenko(simplex(2), 3), std::invalid_argument);
}

TEST_CASE("reduction-degree bound") {
    BoundReport r = bound_reduction_degree({simplex(2)}, simplex(2));
    REQUIRE(r.bound == 30);  // (s-k+1) * 15
    REQUIRE_FALSE(r.summed_bound.has_value());

    std::mt19937 rng(97);
    for (int it = 0; it < 10; ++it) {
        int s = 2 + static_cast<int>(rng() % 2);
        int k = static_cast<int>(rng() % (s + 1));
        std::vector<LatticePolytope> deltas;
        for (int j = 0; j < k; ++j) deltas.push_back(simplex(s));
        LatticePolytope delta = simplex(s, Int(1 + static_cast<long>(rng() % 3)));
        BoundReport g = bound_general(deltas, delta);
        BoundReport rd = bound_reduction_degree(deltas, delta);
        REQUIRE(rd.bound == Rat(s - k + 1) * g.bound);
    }
}

TEST_CASE("degree-only corollary") {
    BoundReport r = bound_degree_simple(1, 1, 1, Int(2), Int(2));
    REQUIRE(r.s == 2);
    REQUIRE(r.bound == 120);  // 30 * 2 * 2
    // with d_S = 1 the bound is E * d_X^n
    BoundReport r2 = bound_degree_simple(2, 1, 2, Int(3), Int(1));
    REQUIRE(r2.bound == Rat(e_const(4, 2) * 9));
    // doubling d_X scales by 2^n
    for (int n = 1; n <= 3; ++n) {
        BoundReport a = bound_degree_simple(n, 1, 1, Int(2), Int(2));
        BoundReport b = bound_degree_simple(n, 1, 1, Int(4), Int(2));
        REQUIRE(b.bound == Rat(int_pow(Int(2), static_cast<unsigned long>(n))) * a.bound);
    }
    REQUIRE_THROWS_AS(bound_degree_simple(1, 1, 1, Int(1), Int(2)), std::invalid_argument);
    REQUIRE_THROWS_AS(bound_degree_simple(0, 1, 0, Int(2), Int(1)), std::invalid_argument);
}

TEST_CASE("doubly-exponential comparison value") {
    REQUIRE(bound_hp(Int(2), Int(3), 1, 1) == 12);
    REQUIRE(bound_hp(Int(2), Int(3), 2, 1) == 432);
    REQUIRE(bound_hp(Int(2), Int(3), 1, 2) == 6912);
    REQUIRE(bound_hp(Int(5), Int(7), 0, 3) == 125);  // 2^0 = 1: 5^3 * 7^0
    REQUIRE_THROWS_AS(bound_hp(Int(0), Int(1), 1, 1), std::invalid_argument);
}

TEST_CASE("bounds are monotone under polytope enlargement") {
    std::mt19937 rng(101);
    for (int it = 0; it < 10; ++it) {
        int s = 2 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % s);
        std::vector<LatticePolytope> small, big;
        for (int j = 0; j < k; ++j) {
            Int d(1 + static_cast<long>(rng() % 2));
            small.push_back(simplex(s, d));
            big.push_back(simplex(s, d + 1));
        }
        REQUIRE(bound_ci(small).bound <= bound_ci(big).bound);
        REQUIRE(bound_general(small, simplex(s, 3)).bound <=
                bound_general(big, simplex(s, 4)).bound);
        REQUIRE(bound_kushnirenko(simplex(s, 2), k).bound <=
                bound_kushnirenko(simplex(s, 3), k).bound);
    }
}

TEST_CASE("variant ordering carries over to the bounds") {
    BoundConfig wide, standard, refined;
    standard.gamma_variant = GammaVariant::Standard;
    refined.gamma_variant = GammaVariant::Refined;
    std::mt19937 rng(103);
    for (int it = 0; it < 8; ++it) {
        int s = 2 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % s);
        std::vector<LatticePolytope> deltas;
        for (int j = 0; j < k; ++j)
            deltas.push_back(simplex(s, Int(1 + static_cast<long>(rng() % 3))));
        Rat a = bound_ci(deltas, wide).bound;
        Rat b = bound_ci(deltas, standard).bound;
        Rat c = bound_ci(deltas, refined).bound;
        REQUIRE(a >= b);
        REQUIRE(b >= c);
    }
}

TEST_CASE("bound values are integers") {
    std::mt19937 rng(107);
    for (int it = 0; it < 10; ++it) {
        int s = 2 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % s);
        std::vector<LatticePolytope> deltas;
        for (int j = 0; j < k; ++j)
            deltas.push_back(simplex(s, Int(1 + static_cast<long>(rng() % 3))));
        Rat b = bound_ci(deltas).bound;
        REQUIRE(b.get_den() == 1);
        Rat g = bound_general(deltas, simplex(s, 4)).bound;
        REQUIRE(g.get_den() == 1);
    }
}
