#pragma once

// Right-angled Artin groups: the defining graph, its cliques, the Salvetti
// complex and the dimension formulas that follow from them.

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "bredim/dims.hpp"
#include "bredim/homology.hpp"
#include "bredim/int_matrix.hpp"

namespace bredim::raag {

/// Finite simple graph on vertices 0..n-1.
class SimpleGraph {
  public:
    explicit SimpleGraph(std::size_t vertex_count = 0);

    /// Throws InputError on loops, repeated edges and unknown vertices.
    void add_edge(std::size_t u, std::size_t v);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool adjacent(std::size_t u, std::size_t v) const;
    /// Sorted neighbour list.
    std::vector<std::size_t> neighbors(std::size_t v) const;
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  private:
    std::vector<std::vector<bool>> adjacency_;
    std::size_t edge_count_ = 0;
};

SimpleGraph complete_graph(std::size_t n);
SimpleGraph edgeless_graph(std::size_t n);

/// Reads "V E" followed by E lines "u v" (0-based), or DIMACS .col
/// ("c" comments, "p edge V E", "e u v" with 1-based vertices).
SimpleGraph parse_graph(std::string_view text);
std::string format_graph(const SimpleGraph& g);

using Clique = std::vector<std::size_t>;

struct CliqueTable {
    /// by_size[k] = all k-vertex cliques, each sorted, the list in lexicographic
    /// order. by_size[0] holds the empty clique; the table stops at the clique number.
    std::vector<std::vector<Clique>> by_size;

    std::size_t count(std::size_t k) const { return k < by_size.size() ? by_size[k].size() : 0; }
    std::size_t max_size() const { return by_size.size() - 1; }
};

CliqueTable cliques(const SimpleGraph& g);

/// Maximal cliques by Bron-Kerbosch with pivoting over a degeneracy ordering,
/// each sorted, listed lexicographically.
std::vector<Clique> maximal_cliques(const SimpleGraph& g);

std::size_t clique_number(const SimpleGraph& g);

/// Cellular chain complex of the Salvetti complex: one k-cell per k-clique,
/// every boundary map zero, top degree = clique number.
homology::ChainComplex salvetti_complex(const SimpleGraph& g);

/// Boundary C_k -> C_{k-1} assembled cube face by cube face: the face of the
/// cube on clique c opposite to vertex c[i] occurs twice, with signs
/// (-1)^i and -(-1)^i, and both copies are glued to the same (k-1)-cell.
/// The result is the zero matrix; it is kept as an independent check on the
/// hard-coded boundaries of salvetti_complex. 1 <= k <= table.max_size().
IntMatrix salvetti_face_boundary(const CliqueTable& table, std::size_t k);

/// cd(A_Gamma) = gd(A_Gamma) = clique number; 0 for the empty graph.
std::size_t cd_raag(const SimpleGraph& g);

/// Rank of the largest standard torus Z^m inside A_Gamma.
std::size_t embedded_torus_rank(const SimpleGraph& g);

/// gd_{F_k}(A_Gamma) = cd(A_Gamma) + k for 0 <= k < cd; OutOfRangeError
/// otherwise. The empty graph (trivial group) yields a degenerate 0.
dims::DimResult gd_fk_raag(const SimpleGraph& g, std::size_t k);

} // namespace bredim::raag
