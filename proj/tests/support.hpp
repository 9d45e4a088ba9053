#pragma once

// Seeded generators and small conversions shared by the test binaries.

#include <random>
#include <vector>

#include "bredim/int_matrix.hpp"
#include "bredim/oracles.hpp"
#include "bredim/raag.hpp"

namespace testing {

using bredim::IntMatrix;
using bredim::IntVector;
using bredim::Integer;

inline std::mt19937_64 rng_for(std::uint64_t salt) { return std::mt19937_64(0x7e57 ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntVector random_vector(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    IntVector v;
    for (std::size_t j = 0; j < n; ++j)
        v.emplace_back(uniform(rng, lo, hi));
    return v;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = uniform(rng, lo, hi);
    return m;
}

// Product of random elementary operations: always unimodular.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2)
        return u;
    for (int s = 0; s < steps; ++s) {
        const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
        if (b >= a)
            ++b;
        switch (uniform(rng, 0, 2)) {
        case 0:
            u.swap_rows(a, b);
            break;
        case 1:
            u.negate_row(a);
            break;
        default:
            u.add_row_multiple(a, b, Integer(uniform(rng, -2, 2)));
        }
    }
    return u;
}

inline bredim::oracle::Rows rows_of(const IntMatrix& m) {
    bredim::oracle::Rows out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(m.row(i));
    return out;
}

inline bredim::raag::SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    bredim::raag::SimpleGraph g(n);
    std::bernoulli_distribution edge(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (edge(rng))
                g.add_edge(u, v);
    return g;
}

inline bredim::oracle::Adjacency adjacency_of(const bredim::raag::SimpleGraph& g) {
    bredim::oracle::Adjacency adj(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
    for (const auto& [u, v] : g.edges())
        adj[u][v] = adj[v][u] = true;
    return adj;
}

inline bool abs_is_one(const Integer& x) { return x == 1 || x == -1; }

} // namespace testing
