#include <catch2/catch_amalgamated.hpp>

#include <diffvol/jet.hpp>
#include <diffvol/mixedvol.hpp>
#include <diffvol/smith.hpp>

#include <algorithm>
#include <functional>
#include <random>

#include "oracles.hpp"

using namespace diffvol;

namespace {

LatticePolytope simplex(int dim, const Int& scale = 1) {
    std::vector<int> all(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) all[static_cast<std::size_t>(i)] = i;
    return unit_simplex_on(dim, all).dilate(scale);
}

LatticePolytope segment(int dim, const std::vector<Int>& dir) {
    LatticePoint zero(static_cast<std::size_t>(dim), Int(0));
    LatticePoint end = dir;
    return LatticePolytope(dim, {zero, end});
}

}  // namespace

TEST_CASE("Bezout recovery: dilated simplices multiply") {
    for (int s = 1; s <= 3; ++s) {
        std::vector<int> dils(static_cast<std::size_t>(s), 1);
        // all dilation tuples in {1..3}^s
        std::function<void(int)> sweep = [&](int pos) {
            if (pos == s) {
                std::vector<LatticePolytope> polys;
                Int expect = 1;
                for (int d : dils) {
                    polys.push_back(simplex(s, Int(d)));
                    expect *= d;
                }
                REQUIRE(bkk_count(polys) == expect);
                return;
            }
            for (int d = 1; d <= 3; ++d) {
                dils[static_cast<std::size_t>(pos)] = d;
                sweep(pos + 1);
            }
        };
        sweep(0);
    }
}

TEST_CASE("segments reproduce |det| via the elementary-divisor oracle") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(-5, 5);
    int done = 0;
    while (done < 40) {
        int s = 2 + static_cast<int>(rng() % 3);
        std::vector<std::vector<Int>> m(static_cast<std::size_t>(s),
                                        std::vector<Int>(static_cast<std::size_t>(s)));
        for (auto& row : m)
            for (auto& v : row) v = Int(entry(rng));
        std::vector<LatticePolytope> segs;
        for (const auto& row : m) segs.push_back(segment(s, row));
        Int bkk = bkk_count(segs);
        // singular matrices give mixed volume 0; the oracle throws instead
        std::vector<Int> div = smith_normal_form(m);
        bool singular = std::any_of(div.begin(), div.end(),
                                    [](const Int& d) { return d == 0; });
        if (singular) {
            REQUIRE(bkk == 0);
        } else {
            REQUIRE(bkk == binomial_count_oracle(m));
        }
        ++done;
    }
}

TEST_CASE("polarization agrees with grid interpolation") {
    std::mt19937 rng(29);
    for (int it = 0; it < 25; ++it) {
        int s = 2 + static_cast<int>(rng() % 2);
        std::vector<LatticePolytope> polys;
        for (int j = 0; j < s; ++j)
            polys.push_back(oracles::random_polytope(rng, s, 5, 0, 3));
        REQUIRE(mixed_volume(polys) == mixed_volume_interp(polys));
    }
    // one heavier case; kept small since the grid has (s+1)^s nodes
    std::vector<LatticePolytope> polys;
    std::mt19937 rng4(31);
    for (int j = 0; j < 4; ++j) polys.push_back(oracles::random_polytope(rng4, 4, 3, 0, 1));
    REQUIRE(mixed_volume(polys) == mixed_volume_interp(polys));
}

TEST_CASE("interpolation guard") {
    std::vector<LatticePolytope> polys(6, simplex(6));
    REQUIRE_THROWS_AS(mixed_volume_interp(polys), std::invalid_argument);
}

TEST_CASE("mixed volume is symmetric and multilinear") {
    std::mt19937 rng(37);
    LatticePolytope a = oracles::random_polytope(rng, 3, 5, 0, 3);
    LatticePolytope b = oracles::random_polytope(rng, 3, 5, 0, 3);
    LatticePolytope c = oracles::random_polytope(rng, 3, 5, 0, 3);
    REQUIRE(mixed_volume({a, b, c}) == mixed_volume({c, a, b}));
    // dilation in one slot scales linearly
    REQUIRE(mixed_volume({a.dilate(Int(3)), b, c}) == Rat(3) * mixed_volume({a, b, c}));
    // Minkowski additivity in one slot
    REQUIRE(mixed_volume({minkowski_sum(a, b), b, c}) ==
            mixed_volume({a, b, c}) + mixed_volume({b, b, c}));
    // diagonal recovers the volume
    REQUIRE(mixed_volume({a, a, a}) == a.volume());
}

TEST_CASE("mixed volume is monotone") {
    std::mt19937 rng(41);
    for (int it = 0; it < 10; ++it) {
        LatticePolytope a = oracles::random_polytope(rng, 3, 5, 0, 3);
        LatticePolytope b = oracles::random_polytope(rng, 3, 5, 0, 3);
        LatticePolytope c = oracles::random_polytope(rng, 3, 5, 0, 3);
        LatticePolytope bigger = minkowski_sum(a, simplex(3));
        REQUIRE(mixed_volume({bigger, b, c}) >= mixed_volume({a, b, c}));
    }
}

TEST_CASE("block expansion equals polarization on block-structured inputs") {
    std::mt19937 rng(43);
    for (int it = 0; it < 15; ++it) {
        int p = 1 + static_cast<int>(rng() % 2);
        int q = 1 + static_cast<int>(rng() % 2);
        int s = p + q;
        std::vector<int> bx, by;
        for (int i = 0; i < p; ++i) bx.push_back(i);
        for (int i = p; i < s; ++i) by.push_back(i);
        BlockBasis basis(s, {{"a", bx, Int(1 + static_cast<int>(rng() % 3))},
                             {"b", by, Int(1 + static_cast<int>(rng() % 3))}});
        std::vector<FormalCombination> entries;
        std::vector<LatticePolytope> polys;
        for (int j = 0; j < s; ++j) {
            FormalCombination fc{{Int(static_cast<int>(rng() % 3)),
                                  Int(static_cast<int>(rng() % 3))}};
            polys.push_back(basis.realize(fc));
            entries.push_back(std::move(fc));
        }
        REQUIRE(mixed_volume_blocks(basis, entries) == mixed_volume(polys));
    }
}

TEST_CASE("coordinate-block identity in dimension eight") {
    JetLayout L(2, 3);
    BlockBasis basis(8, {{"x", {0, 1, 2, 3}, Int(1)}, {"y", {4, 5, 6, 7}, Int(1)}});
    std::vector<FormalCombination> entries;
    for (int j = 0; j < 4; ++j) entries.push_back({{Int(1), Int(0)}});
    for (int j = 0; j < 4; ++j) entries.push_back({{Int(0), Int(1)}});
    Rat v = mixed_volume_blocks(basis, entries);
    REQUIRE(v * Rat(detail::HullEngine::factorial(8)) == 1);
}

TEST_CASE("degenerate block assignments give zero") {
    BlockBasis basis(3, {{"a", {0, 1}, Int(1)}, {"b", {2}, Int(1)}});
    // all three entries supported on the two-dimensional block
    std::vector<FormalCombination> entries(3, FormalCombination{{Int(1), Int(0)}});
    REQUIRE(mixed_volume_blocks(basis, entries) == 0);
    // blocks that do not cover the ambient space
    BlockBasis partial(3, {{"a", {0, 1}, Int(1)}});
    std::vector<FormalCombination> e2(3, FormalCombination{{Int(1)}});
    REQUIRE(mixed_volume_blocks(partial, e2) == 0);
}

TEST_CASE("bkk rejects mismatched input") {
    REQUIRE_THROWS_AS(mixed_volume({simplex(2)}), std::invalid_argument);
    REQUIRE_THROWS_AS(mixed_volume(std::vector<LatticePolytope>{}), std::invalid_argument);
}

TEST_CASE("smith normal form basics") {
    std::vector<std::vector<Int>> m{{Int(2), Int(4)}, {Int(4), Int(2)}};
    std::vector<Int> d = smith_normal_form(m);
    REQUIRE(d == std::vector<Int>{Int(2), Int(6)});
    REQUIRE(binomial_count_oracle(m) == 12);  // |det| = |4 - 16|
    std::vector<std::vector<Int>> sing{{Int(1), Int(2)}, {Int(2), Int(4)}};
    REQUIRE_THROWS_AS(binomial_count_oracle(sing), std::invalid_argument);
    // divisibility chain on random matrices
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int it = 0; it < 20; ++it) {
        std::vector<std::vector<Int>> a(3, std::vector<Int>(3));
        for (auto& row : a)
            for (auto& v : row) v = Int(entry(rng));
        std::vector<Int> div = smith_normal_form(a);
        for (std::size_t i = 0; i + 1 < div.size(); ++i) {
            if (div[i + 1] == 0) continue;
            REQUIRE(div[i] != 0);
            REQUIRE(div[i + 1] % div[i] == 0);
        }
    }
}
