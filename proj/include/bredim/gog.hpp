#pragma once

// Graphs of groups with virtually abelian vertex groups and the dimension
// bounds coming from their Bass-Serre trees.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bredim/dims.hpp"

namespace bredim::gog {

struct VertexGroupDesc {
    std::string name;
    std::size_t rank = 0; // rank of a finite-index free abelian subgroup
    bool infinite = false;
};

struct EdgeDesc {
    std::size_t source = 0;
    std::size_t target = 0;
    std::size_t rank = 0; // 0 for a finite edge group
    bool finite = false;
};

/// Validated description: edge ranks never exceed either endpoint rank and
/// the underlying graph is connected. Acylindricity is asserted by the input.
class GraphOfGroups {
  public:
    GraphOfGroups(std::vector<VertexGroupDesc> vertices, std::vector<EdgeDesc> edges, bool acylindrical);

    const std::vector<VertexGroupDesc>& vertices() const noexcept { return vertices_; }
    const std::vector<EdgeDesc>& edges() const noexcept { return edges_; }
    bool acylindrical() const noexcept { return acylindrical_; }
    std::optional<std::size_t> find_vertex(std::string_view name) const;

  private:
    std::vector<VertexGroupDesc> vertices_;
    std::vector<EdgeDesc> edges_;
    bool acylindrical_;
};

// Line format, '#' starts a comment:
//   vertex <name> rank=<r>
//   edge <name1> <name2> rank=<r>|finite
//   acylindrical = true|false        (false when absent)
GraphOfGroups parse_gog(std::string_view text);
std::string format_gog(const GraphOfGroups& y);

/// m = max vertex rank.
std::size_t max_vertex_rank(const GraphOfGroups& y);

enum class CellLocation { Tree, Cone };
enum class StabilizerClass { VertexGroup, EdgeGroup, VirtuallyCyclic };

std::string to_string(CellLocation l);
std::string to_string(StabilizerClass s);

/// One orbit type of cells in the coned-off Bass-Serre tree.
struct CellClass {
    std::size_t dim = 0;
    CellLocation location = CellLocation::Tree;
    StabilizerClass stabilizer = StabilizerClass::VertexGroup;
    std::string label;             // vertex or edge name, or "cone"
    std::size_t count = 1;         // orbits of this type (unbounded cone families count as 1)
    dims::DimBound stabilizer_gd;  // F_k-restricted gd of the stabilizer
    dims::DimBound term;           // stabilizer_gd + dim
};

struct CellCensus {
    std::vector<CellClass> cells;
};

struct BoundsResult {
    dims::DimBound bound;
    CellCensus census;
    dims::DerivationPtr derivation;
    std::vector<std::string> citations;
    std::vector<std::string> notes;
};

/// Two-sided bounds for gd_{F_k}(pi_1 Y): the lower bound is the largest
/// restricted dimension of a vertex or edge group, the upper bound comes from
/// the cell-stabilizer inequality on the coned-off tree. Requires an
/// acylindrical splitting (OutOfRangeError otherwise).
BoundsResult bass_serre_bounds(const GraphOfGroups& y, std::size_t k);

struct GdResult {
    dims::DimBound bound;
    bool exact = false; // closed form applied; otherwise `bound` is the fallback interval
    std::vector<std::string> citations;
    std::vector<std::string> notes; // diagnostics when the closed form does not apply
    std::optional<BoundsResult> fallback;
};

/// m + k when the splitting is acylindrical, every vertex group is infinite,
/// every edge rank is below both endpoint ranks and 1 <= k < m. Otherwise the
/// result is the bass_serre_bounds interval with a diagnostic.
GdResult gog_gd(const GraphOfGroups& y, std::size_t k);

} // namespace bredim::gog
