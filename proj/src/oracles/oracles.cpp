#include "bredim/oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bredim::oracle {

namespace {

using QRow = std::vector<mpq_class>;

QRow to_rational(const Vec& v) { return QRow(v.begin(), v.end()); }

// Row-reduces `m` in place over Q and returns the rank.
std::size_t row_reduce(std::vector<QRow>& m) {
    if (m.empty())
        return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> pick(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            f(pick);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

} // namespace

std::size_t rational_rank(const Rows& rows) {
    std::vector<QRow> m;
    for (const auto& r : rows)
        m.push_back(to_rational(r));
    return row_reduce(m);
}

bool in_rational_span(const Rows& rows, const Vec& v) {
    Rows with = rows;
    with.push_back(v);
    return rational_rank(with) == rational_rank(rows);
}

Rows independent_rows(const Rows& rows) {
    Rows out;
    for (const auto& r : rows) {
        Rows trial = out;
        trial.push_back(r);
        if (rational_rank(trial) == trial.size())
            out = std::move(trial);
    }
    return out;
}

std::optional<std::vector<mpq_class>> rational_coordinates(const Rows& basis, const Vec& v) {
    // solve c * B = v via the augmented system B^T c^T = v^T
    const std::size_t r = basis.size();
    const std::size_t n = v.size();
    std::vector<QRow> aug(n, QRow(r + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < r; ++i)
            aug[j][i] = basis[i][j];
        aug[j][r] = v[j];
    }
    const std::size_t rank = row_reduce(aug);
    std::vector<mpq_class> c(r);
    // after full reduction each nonzero row has a single pivot among the first r columns
    for (std::size_t row = 0; row < rank; ++row) {
        std::size_t pivot = 0;
        while (pivot <= r && aug[row][pivot] == 0)
            ++pivot;
        if (pivot == r)
            return std::nullopt; // 0 = nonzero: inconsistent
        c[pivot] = aug[row][r] / aug[row][pivot];
    }
    return c;
}

bool in_integer_span(const Rows& basis, const Vec& v) {
    const auto c = rational_coordinates(basis, v);
    if (!c)
        return false;
    return std::all_of(c->begin(), c->end(), [](const mpq_class& q) { return q.get_den() == 1; });
}

mpz_class cofactor_determinant(const Rows& a) {
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    mpz_class det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0)
            continue;
        Rows minor;
        for (std::size_t i = 1; i < n; ++i) {
            Vec row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(a[i][c]);
            minor.push_back(std::move(row));
        }
        const mpz_class term = a[0][j] * cofactor_determinant(minor);
        det += (j % 2 == 0) ? term : mpz_class(-term);
    }
    return det;
}

std::vector<mpz_class> determinantal_divisors(const Rows& m) {
    std::vector<mpz_class> out;
    if (m.empty())
        return out;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        mpz_class g = 0;
        for_each_subset(rows, k, [&](const std::vector<std::size_t>& ri) {
            for_each_subset(cols, k, [&](const std::vector<std::size_t>& ci) {
                Rows sub;
                for (std::size_t i : ri) {
                    Vec row;
                    for (std::size_t j : ci)
                        row.push_back(m[i][j]);
                    sub.push_back(std::move(row));
                }
                g = gcd(g, cofactor_determinant(sub));
            });
        });
        if (g == 0)
            break;
        out.push_back(g);
    }
    return out;
}

std::vector<mpz_class> invariant_factors(const Rows& m) {
    const auto d = determinantal_divisors(m);
    std::vector<mpz_class> out;
    mpz_class prev = 1;
    for (const auto& x : d) {
        out.push_back(x / prev);
        prev = x;
    }
    return out;
}

mpz_class parallelepiped_count(const Rows& b) {
    const std::size_t n = b.size();
    const mpz_class det = cofactor_determinant(b);
    if (det == 0)
        throw std::invalid_argument("parallelepiped_count: singular matrix");
    // adj(B) = det * B^{-1}; p lies in the box iff every coordinate of p * adj(B) / det is in [0, 1)
    Rows adj(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rows minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j)
                    continue;
                Vec row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i)
                        row.push_back(b[r][c]);
                minor.push_back(std::move(row));
            }
            const mpz_class m = cofactor_determinant(minor);
            adj[i][j] = ((i + j) % 2 == 0) ? m : mpz_class(-m);
        }
    std::vector<long> lo(n, 0), hi(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const long e = b[i][j].get_si();
            (e < 0 ? lo[j] : hi[j]) += e;
        }
    mpz_class count = 0;
    std::vector<long> p(lo);
    while (true) {
        bool inside = true;
        for (std::size_t j = 0; j < n && inside; ++j) {
            mpz_class t = 0;
            for (std::size_t i = 0; i < n; ++i)
                t += p[i] * adj[i][j];
            inside = det > 0 ? (t >= 0 && t < det) : (t <= 0 && t > det);
        }
        if (inside)
            ++count;
        std::size_t j = 0;
        while (j < n && p[j] == hi[j]) {
            p[j] = lo[j];
            ++j;
        }
        if (j == n)
            break;
        ++p[j];
    }
    return count;
}

std::vector<std::size_t> clique_counts_exhaustive(const Adjacency& adj) {
    const std::size_t n = adj.size();
    if (n > 20)
        throw std::invalid_argument("clique_counts_exhaustive: at most 20 vertices");
    std::vector<std::size_t> counts(n + 1, 0);
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        bool clique = true;
        for (std::size_t u = 0; u < n && clique; ++u) {
            if (!(mask >> u & 1))
                continue;
            for (std::size_t v = u + 1; v < n; ++v)
                if ((mask >> v & 1) && !adj[u][v]) {
                    clique = false;
                    break;
                }
        }
        if (clique)
            ++counts[static_cast<std::size_t>(__builtin_popcountl(mask))];
    }
    while (counts.size() > 1 && counts.back() == 0)
        counts.pop_back();
    return counts;
}

std::size_t clique_number_exhaustive(const Adjacency& adj) { return clique_counts_exhaustive(adj).size() - 1; }

std::vector<std::size_t> rational_betti(const std::vector<std::size_t>& counts, const std::vector<Rows>& boundaries) {
    std::vector<std::size_t> ranks(counts.size() + 1, 0); // ranks[k] = rank of boundary k
    for (std::size_t k = 1; k < counts.size(); ++k)
        ranks[k] = rational_rank(boundaries[k - 1]);
    std::vector<std::size_t> betti;
    for (std::size_t k = 0; k < counts.size(); ++k)
        betti.push_back(counts[k] - ranks[k] - ranks[k + 1]);
    return betti;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace bredim::oracle
