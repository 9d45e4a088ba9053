#pragma once

// Citation anchors attached to every formula-derived result. Each string is
// "<anchor>: <statement>" so derivations and reports can be audited against
// the underlying theorem statements.

#include <string_view>

namespace bredim::cite {

inline constexpr std::string_view kVirtuallyAbelian =
    "virtually-abelian-dimension: gd_{F_k}(G) = cd_{F_k}(G) = n + k for G virtually Z^n, 0 <= k < n";
inline constexpr std::string_view kSubgroupLowerBound =
    "subgroup-lower-bound: G with a virtually Z^n subgroup has gd_{F_k}(G) >= n + k and cd_{F_k}(G) >= n + k, "
    "0 <= k < n";
inline constexpr std::string_view kZkF2 = "zk-f2: gd_{F_2}(Z^k) = k + 2 for k >= 3";
inline constexpr std::string_view kBraid =
    "braid-dimension: gd_{F_k}(G) = cd_{F_k}(G) = vcd(G) + k = n + k - 1 for G = B_n or P_n, 0 <= k < n - 1";
inline constexpr std::string_view kBraidVcd = "braid-vcd: vcd(B_n) = vcd(P_n) = n - 1";
inline constexpr std::string_view kRaagCd =
    "raag-cd: gd(A_Gamma) = cd(A_Gamma) = dim(S_Gamma) = max size of a complete subgraph of Gamma";
inline constexpr std::string_view kRaagFk =
    "raag-dimension: gd_{F_k}(A_Gamma) = cd_{F_k}(A_Gamma) = dim(S_Gamma) + k = cd(A_Gamma) + k, "
    "0 <= k < cd(A_Gamma)";
inline constexpr std::string_view kEmbeddedTorus =
    "embedded-torus: S_Gamma contains a dim(S_Gamma)-torus, so Z^{dim(S_Gamma)} <= A_Gamma";
inline constexpr std::string_view kSalvettiCells =
    "salvetti-cells: S_Gamma has one k-cube per k-vertex complete subgraph; H^{dim}(S_Gamma) is free abelian on "
    "the top cells";
inline constexpr std::string_view kOutFn =
    "out-fn-lower: gd_{F_k}(Out(F_n)) >= vcd(Out(F_n)) + k >= 2n + k - 3, n >= 2, 0 <= k < 2n - 3";
inline constexpr std::string_view kOutDiamonds =
    "out-diamonds-lower: gd_{F_k}(Out(A_d)) >= vcd(Out(A_d)) + k >= 4d + k - 1, 0 <= k < 4d - 1";
inline constexpr std::string_view kSubFamily =
    "sub-family: gd_{SUB(L)}(Z^n) <= n - t for L saturated of rank t < n, via E(Z^n / L) = R^{n-t}";
inline constexpr std::string_view kLwPushout =
    "lw-pushout: gd_{F_m cap H}(G) <= max{gd_{F_{m-1} cap H}(G) + 1, gd_{(F_m cap H)[L]}(N_G[L]) : [L] in I}";
inline constexpr std::string_view kUnionMax =
    "union-of-families: gd_{F u G}(X) <= max{gd_F(X), gd_G(X), gd_{F n G}(X)}";
inline constexpr std::string_view kUnionPushout =
    "union-of-families, push-out form: gd_{F u G}(X) <= max{gd_F(X), gd_G(X), gd_{F n G}(X) + 1}";
inline constexpr std::string_view kNestedFamilies =
    "nested-families: F subset G and gd_{F cap K}(K) <= d for all K in G imply gd_F(X) <= gd_G(X) + d";
inline constexpr std::string_view kCellStabilizer =
    "cell-stabilizers: F subset G, Y a model for E_G X imply gd_F(X) <= max{gd_{F cap X_s}(X_s) + dim(s) : s a "
    "cell of Y}";
inline constexpr std::string_view kEgSandwich = "eilenberg-ganea: cd_F(G) <= gd_F(G) <= max{cd_F(G), 3}";
inline constexpr std::string_view kInductionBase = "induction-base: gd_{F_0 cap H}(Z^n) = gd(Z^n) = n";
inline constexpr std::string_view kFiberBound =
    "fiber-bound: gd_{F_{m-1} cap K}(K) <= m + (m - 1) = 2m - 1 for K virtually Z^m";
inline constexpr std::string_view kGraphOfGroups =
    "graph-of-groups: acylindrical, vertex groups infinite f.g. virtually abelian, rank(G_e) < rank(G_v) imply "
    "gd_{F_k}(G) = m + k for 1 <= k < m, m = max rank(G_v)";
inline constexpr std::string_view kFiniteEdgeGroups =
    "graph-of-groups, finite edge groups: gd_{F_k}(G) = m + k for 1 <= k < m";
inline constexpr std::string_view kBassSerreBounds =
    "bass-serre-bounds: acylindrical splitting implies max{gd_{F_k cap G_s}(G_s)} <= gd_{F_k}(G) <= max{2, "
    "gd_{F_k cap G_v}(G_v), gd_{F_k cap G_e}(G_e) + 1}";
inline constexpr std::string_view kConedOffTree =
    "coned-off-tree: coning off the tree geodesics with cocompact virtually cyclic stabilizers gives a "
    "2-dimensional model whose isotropy family contains F_k";
inline constexpr std::string_view kSubgroupMonotone = "monotonicity: gd_{F cap H}(H) <= gd_F(G) for H <= G";
inline constexpr std::string_view kDegenerate =
    "degenerate: the group lies in F_k, so a point is a model and the dimension is 0";
inline constexpr std::string_view kMeet = "interval-meet: lower and upper bounds on one quantity";

} // namespace bredim::cite
