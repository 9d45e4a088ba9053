#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bredim/errors.hpp"
#include "bredim/lattice.hpp"
#include "bredim/oracles.hpp"
#include "support.hpp"

using namespace bredim;
using namespace bredim::lattice;
using testing::abs_is_one;
using testing::rows_of;

namespace {

Sublattice lat(std::size_t n, std::initializer_list<std::initializer_list<long>> gens) {
    if (gens.size() == 0)
        return Sublattice(n);
    return Sublattice::from_generators(n, IntMatrix(gens));
}

bool is_canonical_hnf(const IntMatrix& h) {
    std::size_t prev = 0;
    bool first = true;
    bool seen_zero = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        if (h.is_row_zero(i)) {
            seen_zero = true;
            continue;
        }
        if (seen_zero)
            return false;
        std::size_t p = 0;
        while (h(i, p) == 0)
            ++p;
        if ((!first && p <= prev) || h(i, p) <= 0)
            return false;
        for (std::size_t a = 0; a < i; ++a)
            if (h(a, p) < 0 || h(a, p) >= h(i, p))
                return false;
        prev = p;
        first = false;
    }
    return true;
}

} // namespace

TEST_CASE("hermite normal form on small inputs") {
    SUBCASE("already canonical") {
        const auto r = hermite_normal_form(IntMatrix{{2, 4}});
        CHECK(r.hnf == IntMatrix{{2, 4}});
        CHECK(r.transform == IntMatrix{{1}});
    }
    SUBCASE("row swap") {
        const IntMatrix m{{0, 1}, {1, 0}};
        const auto r = hermite_normal_form(m);
        CHECK(r.hnf == IntMatrix::identity(2));
        CHECK(abs_is_one(determinant(r.transform)));
        CHECK(r.transform * m == r.hnf);
    }
    SUBCASE("gcd of a column") {
        const IntMatrix m{{2, 0}, {3, 0}};
        const auto r = hermite_normal_form(m);
        CHECK(r.hnf == IntMatrix{{1, 0}, {0, 0}});
        CHECK(r.transform * m == r.hnf);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), mpz_class(2).get_mpz_t(), mpz_class(3).get_mpz_t());
        CHECK(r.hnf(0, 0) == g);
    }
}

TEST_CASE("hermite normal form is canonical") {
    auto rng = testing::rng_for(11);
    for (int trial = 0; trial < 150; ++trial) {
        const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
        const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
        const IntMatrix m = testing::random_matrix(rng, rows, cols, -9, 9);
        const auto r = hermite_normal_form(m);
        CAPTURE(m);
        CHECK(is_canonical_hnf(r.hnf));
        CHECK(r.transform * m == r.hnf);
        CHECK(abs_is_one(bredim::oracle::cofactor_determinant(rows_of(r.transform))));
        CHECK(hermite_normal_form(r.hnf).hnf == r.hnf);
        const IntMatrix u = testing::random_unimodular(rng, rows);
        CHECK(hermite_normal_form(u * m).hnf == r.hnf);
    }
}

TEST_CASE("smith normal form on small inputs") {
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal == IntMatrix{{1, 0}, {0, 6}});
    CHECK(smith_normal_form(IntMatrix(2, 3)).diagonal == IntMatrix(2, 3));
    const IntMatrix m{{2, 4}, {6, 8}};
    CHECK(smith_normal_form(m).diagonal == IntMatrix{{2, 0}, {0, 4}});
    const auto minors = bredim::oracle::invariant_factors(rows_of(m));
    CHECK(invariant_factors(m) == minors);
}

TEST_CASE("smith normal form soundness") {
    auto rng = testing::rng_for(12);
    for (int trial = 0; trial < 60; ++trial) {
        const auto rows = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
        const auto cols = static_cast<std::size_t>(testing::uniform(rng, 1, 8));
        IntMatrix m = testing::random_matrix(rng, rows, cols, -50, 50);
        if (trial % 3 == 0 && rows > 1) // force rank deficiency now and then
            for (std::size_t j = 0; j < cols; ++j)
                m(rows - 1, j) = m(0, j) * 2;
        CAPTURE(m);
        const auto s = smith_normal_form(m);
        CHECK(s.left * m * s.right == s.diagonal);
        CHECK(abs_is_one(determinant(s.left)));
        CHECK(abs_is_one(determinant(s.right)));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j)
                    CHECK(s.diagonal(i, j) == 0);
        const std::size_t r = std::min(rows, cols);
        for (std::size_t i = 0; i < r; ++i) {
            CHECK(s.diagonal(i, i) >= 0);
            if (i + 1 < r && s.diagonal(i, i) != 0)
                CHECK(mpz_divisible_p(s.diagonal(i + 1, i + 1).get_mpz_t(), s.diagonal(i, i).get_mpz_t()) != 0);
            if (i + 1 < r && s.diagonal(i, i) == 0)
                CHECK(s.diagonal(i + 1, i + 1) == 0);
        }
        if (rows <= 5 && cols <= 5)
            CHECK(invariant_factors(m) == bredim::oracle::invariant_factors(rows_of(m)));
    }
}

TEST_CASE("sublattices from generators") {
    const auto a = lat(2, {{2, 0}, {0, 2}, {2, 2}});
    CHECK(a.basis() == IntMatrix{{2, 0}, {0, 2}});
    CHECK(a.rank() == 2);
    CHECK(Sublattice::from_generators(3, std::vector<IntVector>{}).rank() == 0);
    CHECK(lat(2, {{2, 4}, {4, 8}}).basis() == IntMatrix{{2, 4}});
    CHECK_THROWS_AS(Sublattice::from_generators(2, std::vector<IntVector>{{1, 2, 3}}), InputError);
}

TEST_CASE("index") {
    CHECK(index(lat(2, {{2, 0}, {0, 2}}), Sublattice::full(2)).to_string() == "4");
    CHECK_FALSE(index(lat(2, {{1, 0}}), Sublattice::full(2)).is_finite());
    CHECK(index(lat(2, {{1, 0}}), Sublattice::full(2)).to_string() == "infinite");
    const auto l = lat(2, {{2, 0}, {1, 3}});
    const auto six = bredim::oracle::parallelepiped_count({{2, 0}, {1, 3}});
    CHECK(six == 6);
    CHECK(*index(l, Sublattice::full(2)).value == six);
    CHECK_THROWS_AS(index(Sublattice::full(2), l), InputError);
}

TEST_CASE("index is multiplicative along chains") {
    auto rng = testing::rng_for(13);
    for (int trial = 0; trial < 80; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
        const IntMatrix a = testing::random_matrix(rng, n, n, -3, 3);
        const IntMatrix b = testing::random_matrix(rng, n, n, -3, 3);
        if (determinant(a) == 0 || determinant(b) == 0)
            continue;
        const auto p = Sublattice::full(n);
        const auto m = Sublattice::from_generators(n, a);
        const auto l = Sublattice::from_generators(n, b * a); // rows of b*a lie in m
        REQUIRE(m.contains(l));
        CHECK(*index(l, p).value == *index(l, m).value * *index(m, p).value);
    }
}

TEST_CASE("intersection and sum") {
    CHECK(intersect(lat(2, {{2, 0}, {0, 1}}), lat(2, {{1, 0}, {0, 3}})) == lat(2, {{2, 0}, {0, 3}}));
    const auto l = lat(3, {{1, 2, 3}, {0, 4, 1}});
    CHECK(intersect(l, l) == l);
    CHECK(intersect(lat(2, {{1, 1}}), lat(2, {{1, -1}})).rank() == 0);
    CHECK(sum(lat(2, {{2, 0}}), lat(2, {{0, 2}})) == lat(2, {{2, 0}, {0, 2}}));
    CHECK(sum(l, Sublattice(3)) == l);
    CHECK(sum(lat(2, {{2, 0}}), lat(2, {{3, 0}})) == lat(2, {{1, 0}}));
    CHECK_THROWS_AS(intersect(lat(2, {{1, 0}}), lat(3, {{1, 0, 0}})), InputError);
}

TEST_CASE("intersection agrees with membership") {
    auto rng = testing::rng_for(14);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
        const auto a = Sublattice::from_generators(n, testing::random_matrix(rng, n, n, -3, 3));
        const auto b = Sublattice::from_generators(n, testing::random_matrix(rng, n, n, -3, 3));
        const auto both = intersect(a, b);
        CHECK(a.contains(both));
        CHECK(b.contains(both));
        // every small vector in both lattices lies in the intersection
        for (long x = -6; x <= 6; ++x)
            for (long y = -6; y <= 6; ++y) {
                IntVector v{Integer(x)};
                if (n >= 2)
                    v.emplace_back(y);
                if (n == 3)
                    v.emplace_back(x - y);
                if (a.contains(v) && b.contains(v))
                    CHECK(both.contains(v));
            }
    }
}

TEST_CASE("commensurability") {
    CHECK(commensurable(lat(2, {{3, 0}, {0, 1}}), lat(2, {{1, 0}, {0, 5}})));
    CHECK_FALSE(commensurable(lat(2, {{1, 0}}), lat(2, {{0, 1}})));
    CHECK(commensurable(lat(2, {{2, 2}}), lat(2, {{3, 3}})));
    CHECK(intersect(lat(2, {{2, 2}}), lat(2, {{3, 3}})) == lat(2, {{6, 6}}));
}

TEST_CASE("commensurability is an equivalence relation matching saturation") {
    auto rng = testing::rng_for(15);
    std::vector<Sublattice> pool;
    for (int i = 0; i < 40; ++i) {
        // rank-1 lattices in Z^2 along a few directions, so classes overlap
        const long dirs[4][2] = {{1, 2}, {2, -1}, {1, 1}, {3, 1}};
        const auto& d = dirs[testing::uniform(rng, 0, 3)];
        const long s = testing::uniform(rng, 1, 4);
        pool.push_back(lat(2, {{d[0] * s, d[1] * s}}));
    }
    for (const auto& a : pool) {
        CHECK(commensurable(a, a));
        for (const auto& b : pool) {
            CHECK(commensurable(a, b) == commensurable(b, a));
            CHECK(commensurable(a, b) == (saturation(a) == saturation(b)));
            for (const auto& c : pool)
                if (commensurable(a, b) && commensurable(b, c))
                    CHECK(commensurable(a, c));
        }
    }
}

TEST_CASE("saturation") {
    CHECK(saturation(lat(2, {{2, 4}})) == lat(2, {{1, 2}}));
    CHECK(saturation(Sublattice::full(2)) == Sublattice::full(2));
    CHECK(saturation(lat(3, {{2, 0, 0}, {0, 2, 0}})) == lat(3, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(saturation(Sublattice(3)) == Sublattice(3));
}

TEST_CASE("saturation is a closure operator") {
    auto rng = testing::rng_for(16);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 4));
        const auto g = static_cast<std::size_t>(testing::uniform(rng, 0, 4));
        const auto l = Sublattice::from_generators(n, testing::random_matrix(rng, g, n, -6, 6));
        const auto s = saturation(l);
        CAPTURE(l.basis());
        CHECK(s.contains(l));
        CHECK(saturation(s) == s);
        CHECK(s.rank() == l.rank());
        CHECK(index(l, s).is_finite());
        if (s.rank() > 0) {
            CHECK(is_maximal(s));
            // the whole saturation lies in the rational span of L
            for (const auto& row : s.basis_vectors())
                CHECK(bredim::oracle::in_rational_span(rows_of(l.basis()), row));
        }
    }
}

TEST_CASE("saturated lattices of equal rank absorb each other") {
    auto rng = testing::rng_for(17);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 2, 4));
        const auto r = static_cast<std::size_t>(testing::uniform(rng, 1, static_cast<long>(n)));
        const auto m = saturation(Sublattice::from_generators(n, testing::random_matrix(rng, r, n, -4, 4)));
        // a second saturated lattice sharing a finite-index piece with m half of the time
        Sublattice nn = m;
        if (trial % 2 == 0)
            nn = saturation(Sublattice::from_generators(n, testing::random_matrix(rng, m.rank(), n, -4, 4)));
        if (nn.rank() != m.rank() || m.rank() == 0)
            continue;
        if (index(intersect(m, nn), m).is_finite())
            CHECK(sum(nn, m).rank() == m.rank());
    }
}

TEST_CASE("maximality") {
    CHECK(is_maximal(lat(2, {{1, 2}})));
    CHECK_FALSE(is_maximal(lat(2, {{2, 0}})));
    // det 2 in Z^2: a proper finite-index sublattice, so not a direct summand
    const auto l = lat(2, {{2, 1}, {0, 1}});
    CHECK_FALSE(is_maximal(l));
    CHECK(bredim::oracle::invariant_factors({{2, 1}, {0, 1}}) == std::vector<mpz_class>{1, 2});
    CHECK(is_maximal(lat(3, {{1, 0, 2}, {0, 1, 3}})));
    // a rank-2 summand of Z^3 whose 2x2 minors (4, 6, 9) all exceed 1
    CHECK(is_maximal(lat(3, {{2, 3, 0}, {0, 2, 3}})));
    CHECK_THROWS_AS(is_maximal(Sublattice(2)), InputError);
}

TEST_CASE("direct complements") {
    CHECK(direct_complement(lat(2, {{1, 0}})) == lat(2, {{0, 1}}));
    CHECK(direct_complement(Sublattice::full(3)).rank() == 0);
    const auto c = direct_complement(lat(2, {{1, 2}}));
    REQUIRE(c.rank() == 1);
    CHECK(abs_is_one(bredim::oracle::cofactor_determinant({{1, 2}, c.basis().row(0)})));
    CHECK_THROWS_AS(direct_complement(lat(2, {{2, 0}})), InputError);
    CHECK(direct_complement(Sublattice(3)) == Sublattice::from_generators(3, IntMatrix::identity(3)));
    CHECK(mapping_automorphism(Sublattice(3), Sublattice(3)) == IntMatrix::identity(3));

    auto rng = testing::rng_for(18);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
        const auto r = static_cast<std::size_t>(testing::uniform(rng, 1, static_cast<long>(n)));
        const auto l = saturation(Sublattice::from_generators(n, testing::random_matrix(rng, r, n, -5, 5)));
        if (l.rank() == 0)
            continue;
        const auto comp = direct_complement(l);
        CHECK(comp.rank() == n - l.rank());
        CHECK(sum(l, comp) == Sublattice::full(n));
        CHECK(intersect(l, comp).rank() == 0);
        CHECK(direct_complement(l) == comp); // deterministic
    }
}

TEST_CASE("mapping automorphisms") {
    CHECK(mapping_automorphism(lat(2, {{1, 2}}), lat(2, {{1, 2}})) == IntMatrix::identity(2));
    CHECK(mapping_automorphism(lat(2, {{1, 0}}), lat(2, {{0, 1}})) == IntMatrix{{0, 1}, {1, 0}});
    const auto a = mapping_automorphism(lat(2, {{1, 2}}), lat(2, {{1, 0}}));
    CHECK(abs_is_one(determinant(a)));
    const Integer x = a(0, 0) * 1 + a(0, 1) * 2;
    const Integer y = a(1, 0) * 1 + a(1, 1) * 2;
    CHECK(abs_is_one(x));
    CHECK(y == 0);
    CHECK_THROWS_AS(mapping_automorphism(lat(2, {{1, 0}}), Sublattice::full(2)), InputError);
    CHECK_THROWS_AS(mapping_automorphism(lat(2, {{2, 0}}), lat(2, {{1, 0}})), InputError);
}

TEST_CASE("lattice text format") {
    const auto l = parse_lattice("# comment\n2 2\n2 4\n4 8\n");
    CHECK(l == lat(2, {{2, 4}}));
    CHECK(format_lattice(saturation(parse_lattice("2 1\n2 4"))) == "2 1\n1 2\n");
    CHECK(parse_lattice(format_lattice(lat(3, {{1, 2, 3}, {0, 5, 7}}))) == lat(3, {{1, 2, 3}, {0, 5, 7}}));
    CHECK(parse_lattice("3 0\n") == Sublattice(3));

    auto message = [](const char* text) {
        try {
            parse_lattice(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("2 1\n1 2 3\n") == "line 2: dimension mismatch: expected 2 entries, found 3");
    CHECK(message("2 2\n1 2\n") == "line 2: expected 2 generator rows, found 1");
    CHECK(message("2 1\n1 x\n") == "line 2: expected an integer, got 'x'");
    CHECK(message("") == "line 1: empty lattice description; expected header 'n r'");
}

TEST_CASE("arbitrary precision") {
    // entries far beyond 64 bits survive normal forms and saturation
    const Integer big("123456789012345678901234567890");
    IntMatrix m(1, 2);
    m(0, 0) = big * 6;
    m(0, 1) = big * 10;
    const auto l = Sublattice::from_generators(2, m);
    CHECK(saturation(l) == lat(2, {{3, 5}}));
    CHECK(*index(l, saturation(l)).value == big * 2);
}
