#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bredim/int_matrix.hpp"

namespace bredim::homology {

/// True iff the boundary matrices have the shapes implied by the cell counts
/// (boundary k is c_{k-1} x c_k, k = 1..d) and every composite vanishes.
bool validate(const std::vector<std::size_t>& cell_counts, const std::vector<IntMatrix>& boundaries);

/// Finite chain complex of free abelian groups C_0 <- C_1 <- ... <- C_d.
/// Construction checks the chain condition, so every instance is valid.
class ChainComplex {
  public:
    ChainComplex(std::vector<std::size_t> cell_counts, std::vector<IntMatrix> boundaries);

    /// Complex with the given cell counts and all boundaries zero.
    static ChainComplex with_zero_boundaries(std::vector<std::size_t> cell_counts);

    std::size_t top_degree() const noexcept { return cell_counts_.size() - 1; }
    std::size_t cell_count(std::size_t k) const { return cell_counts_.at(k); }
    const std::vector<std::size_t>& cell_counts() const noexcept { return cell_counts_; }
    /// Boundary map C_k -> C_{k-1}, 1 <= k <= top_degree.
    const IntMatrix& boundary(std::size_t k) const { return boundaries_.at(k - 1); }
    const std::vector<IntMatrix>& boundaries() const noexcept { return boundaries_; }

  private:
    std::vector<std::size_t> cell_counts_;
    std::vector<IntMatrix> boundaries_;
};

/// Finitely generated abelian group Z^betti + (+)_i Z/torsion_i in a given degree.
/// Torsion coefficients are >= 2 and listed in divisibility order.
struct CohomologyGroup {
    std::size_t degree = 0;
    std::size_t betti = 0;
    std::vector<Integer> torsion;

    friend bool operator==(const CohomologyGroup&, const CohomologyGroup&) = default;
};
using HomologyGroup = CohomologyGroup;

/// H_k = ker d_k / im d_{k+1}.
HomologyGroup homology(const ChainComplex& c, std::size_t k);

/// H^k of the dual cochain complex, computed from the transposed boundaries.
CohomologyGroup cohomology(const ChainComplex& c, std::size_t k);

long long euler_characteristic(const ChainComplex& c);

std::string describe(const CohomologyGroup& g);

// Text format:
//   degrees d
//   c_0 c_1 ... c_d
//   # boundary k         (k = 1..d, in order)
//   <cols> <rows>        (c_k c_{k-1}, as in the lattice format)
//   rows of integers
ChainComplex parse_chain_complex(std::string_view text);
std::string format_chain_complex(const ChainComplex& c);

} // namespace bredim::homology
