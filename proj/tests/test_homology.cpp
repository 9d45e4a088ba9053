#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bredim/errors.hpp"
#include "bredim/homology.hpp"
#include "bredim/lattice.hpp"
#include "bredim/oracles.hpp"
#include "support.hpp"

using namespace bredim::homology;
using bredim::InputError;
using bredim::IntMatrix;
using bredim::Integer;
namespace lattice = bredim::lattice;
namespace oracle = bredim::oracle;

namespace {

ChainComplex circle() { return ChainComplex({1, 1}, {IntMatrix{{0}}}); }
ChainComplex torus2() { return ChainComplex::with_zero_boundaries({1, 2, 1}); }
ChainComplex projective_plane() { return ChainComplex({1, 1, 1}, {IntMatrix{{0}}, IntMatrix{{2}}}); }

// A complex built from free summands and elementary pieces Z --m--> Z, with a
// random unimodular change of basis in every degree. Its homology is known
// from the pieces alone.
struct KnownComplex {
    ChainComplex complex;
    std::vector<std::size_t> betti;
    std::vector<std::vector<Integer>> torsion; // of H_k
};

KnownComplex random_known_complex(std::mt19937_64& rng) {
    const auto d = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    std::vector<std::size_t> free(d + 1);
    for (auto& f : free)
        f = static_cast<std::size_t>(testing::uniform(rng, 0, 2));
    // pieces[k] = multipliers of elementary pieces C_{k+1} -> C_k
    std::vector<std::vector<long>> pieces(d);
    for (auto& p : pieces) {
        const long count = testing::uniform(rng, 0, 2);
        for (long i = 0; i < count; ++i)
            p.push_back(testing::uniform(rng, 1, 6));
    }
    std::vector<std::size_t> counts(d + 1);
    for (std::size_t k = 0; k <= d; ++k)
        counts[k] = free[k] + (k < d ? pieces[k].size() : 0) + (k > 0 ? pieces[k - 1].size() : 0);

    // basis of C_k: [free | targets of pieces[k] | sources of pieces[k-1]]
    std::vector<IntMatrix> boundaries;
    for (std::size_t k = 1; k <= d; ++k) {
        IntMatrix m(counts[k - 1], counts[k]);
        const std::size_t row0 = free[k - 1];
        const std::size_t col0 = free[k] + (k < d ? pieces[k].size() : 0);
        for (std::size_t i = 0; i < pieces[k - 1].size(); ++i)
            m(row0 + i, col0 + i) = pieces[k - 1][i];
        boundaries.push_back(m);
    }
    std::vector<IntMatrix> change;
    for (std::size_t k = 0; k <= d; ++k)
        change.push_back(testing::random_unimodular(rng, counts[k]));
    for (std::size_t k = 1; k <= d; ++k)
        boundaries[k - 1] = change[k - 1] * boundaries[k - 1] * lattice::unimodular_inverse(change[k]);

    KnownComplex out{ChainComplex(counts, boundaries), free, {}};
    for (std::size_t k = 0; k <= d; ++k) {
        std::vector<Integer> t;
        if (k < d && !pieces[k].empty()) {
            oracle::Rows diag(pieces[k].size(), oracle::Vec(pieces[k].size(), 0));
            for (std::size_t i = 0; i < pieces[k].size(); ++i)
                diag[i][i] = pieces[k][i];
            for (auto& f : oracle::invariant_factors(diag))
                if (f > 1)
                    t.push_back(f);
        }
        out.torsion.push_back(t);
    }
    return out;
}

} // namespace

TEST_CASE("validation") {
    CHECK(validate({1, 1}, {IntMatrix{{0}}}));
    CHECK(validate({1, 2, 1}, {IntMatrix(1, 2), IntMatrix(2, 1)}));
    // d1 * d2 = [1 1] * [1; 0] != 0
    CHECK_FALSE(validate({1, 2, 1}, {IntMatrix{{1, 1}}, IntMatrix{{1}, {0}}}));
    CHECK_FALSE(validate({1, 2}, {IntMatrix(1, 3)}));
    CHECK_THROWS_AS(ChainComplex({1, 2, 1}, {IntMatrix{{1, 1}}, IntMatrix{{1}, {0}}}), InputError);
}

TEST_CASE("homology of standard complexes") {
    CHECK(homology(torus2(), 1) == HomologyGroup{1, 2, {}});
    CHECK(homology(circle(), 0).betti == 1);
    const auto h1 = homology(projective_plane(), 1);
    CHECK(h1.betti == 0);
    CHECK(h1.torsion == std::vector<Integer>{2});
    CHECK(describe(h1) == "Z/2");
    CHECK(describe(homology(projective_plane(), 2)) == "0");
    CHECK_THROWS_AS(homology(circle(), 2), InputError);
}

TEST_CASE("cohomology of standard complexes") {
    CHECK(cohomology(projective_plane(), 2).torsion == std::vector<Integer>{2});
    CHECK(cohomology(projective_plane(), 1) == CohomologyGroup{1, 0, {}});
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<std::size_t> counts;
        for (std::size_t k = 0; k <= n; ++k)
            counts.push_back(oracle::binomial(n, k).get_ui());
        const auto t = ChainComplex::with_zero_boundaries(counts);
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(cohomology(t, k) == CohomologyGroup{k, counts[k], {}});
    }
    // a connected complex has H^0 = Z
    const ChainComplex interval({2, 1}, {IntMatrix{{-1}, {1}}});
    CHECK(cohomology(interval, 0).betti == 1);
    CHECK(describe(CohomologyGroup{0, 2, {Integer(2), Integer(6)}}) == "Z^2 + Z/2 + Z/6");
}

TEST_CASE("homology of complexes with known answers") {
    auto rng = testing::rng_for(21);
    for (int trial = 0; trial < 150; ++trial) {
        const auto known = random_known_complex(rng);
        const auto& c = known.complex;
        CAPTURE(format_chain_complex(c));
        long long chi = 0;
        std::vector<oracle::Rows> rows;
        for (const auto& b : c.boundaries())
            rows.push_back(testing::rows_of(b));
        const auto rational = oracle::rational_betti(c.cell_counts(), rows);
        for (std::size_t k = 0; k <= c.top_degree(); ++k) {
            const auto h = homology(c, k);
            const auto co = cohomology(c, k);
            CHECK(h.betti == known.betti[k]);
            CHECK(h.betti == rational[k]);
            CHECK(h.torsion == known.torsion[k]);
            CHECK(co.betti == h.betti);
            CHECK(co.torsion == (k == 0 ? std::vector<Integer>{} : known.torsion[k - 1]));
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(h.betti);
        }
        CHECK(euler_characteristic(c) == chi);
    }
}

TEST_CASE("zero boundaries give betti numbers equal to cell counts") {
    auto rng = testing::rng_for(22);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::size_t> counts;
        const long d = testing::uniform(rng, 0, 4);
        for (long k = 0; k <= d; ++k)
            counts.push_back(static_cast<std::size_t>(testing::uniform(rng, 0, 5)));
        const auto c = ChainComplex::with_zero_boundaries(counts);
        for (std::size_t k = 0; k < counts.size(); ++k)
            CHECK(homology(c, k) == HomologyGroup{k, counts[k], {}});
    }
}

TEST_CASE("chain complex text format") {
    const std::string rp2 = "degrees 2\n1 1 1\n# boundary 1\n1 1\n0\n# boundary 2\n1 1\n2\n";
    const auto c = parse_chain_complex(rp2);
    CHECK(homology(c, 1).torsion == std::vector<Integer>{2});
    CHECK(format_chain_complex(c) == rp2);
    CHECK(format_chain_complex(parse_chain_complex(format_chain_complex(torus2()))) ==
          format_chain_complex(torus2()));
    // empty matrices carry no rows
    const auto point_pair = parse_chain_complex("degrees 1\n2 0\n# boundary 1\n0 2\n");
    CHECK(homology(point_pair, 0).betti == 2);

    auto message = [](const std::string& text) {
        try {
            parse_chain_complex(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("degrees 1\n1 1\n# boundary 2\n1 1\n0\n") == "line 3: expected '# boundary 1'");
    CHECK(message("degrees 1\n1 1\n# boundary 1\n2 1\n0 0\n") == "line 4: boundary 1 must be 1 x 1");
    CHECK(message("degrees 2\n1 2 1\n# boundary 1\n2 1\n1 1\n# boundary 2\n1 2\n1\n0\n").find("not a chain complex") !=
          std::string::npos);
}
