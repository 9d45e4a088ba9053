#pragma once

// Dimension-bound calculus for classifying spaces with isotropy in the
// families F_k (subgroups that are virtually Z^r, r <= k).
//
// Every quantity is an interval [lower, upper]; upper may be unbounded.
// Combinators mirror the standard push-out and restriction inequalities and
// can be recorded as Derivation trees that re-check themselves.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bredim::dims {

class DimBound {
  public:
    /// [0, +inf)
    DimBound() = default;
    /// Throws InputError when lower > upper.
    DimBound(std::size_t lower, std::optional<std::size_t> upper);

    static DimBound exact(std::size_t n) { return {n, n}; }
    static DimBound at_most(std::size_t n) { return {0, n}; }
    static DimBound at_least(std::size_t n) { return {n, std::nullopt}; }
    static DimBound unknown() { return {}; }

    std::size_t lower() const noexcept { return lower_; }
    const std::optional<std::size_t>& upper() const noexcept { return upper_; }
    bool is_exact() const noexcept { return upper_ && *upper_ == lower_; }
    bool has_upper() const noexcept { return upper_.has_value(); }

    /// Meet of two intervals on the same quantity; disjoint intervals are an error.
    DimBound intersect(const DimBound& other) const;

    std::string to_string() const;
    friend bool operator==(const DimBound&, const DimBound&) = default;

  private:
    std::size_t lower_ = 0;
    std::optional<std::size_t> upper_;
};

// ---------------------------------------------------------------------------
// Families, symbolically.

struct FamilyTag {
    enum class Kind {
        Fk,           // F_k of the subject group
        Restricted,   // F_k cap H, completed to a family of the ambient group
        Generated,    // family generated by a commensurability class [L]
        Subgroups,    // all subgroups of L
        Union,
        Intersection,
    };

    Kind kind = Kind::Fk;
    std::size_t k = 0;
    std::string subgroup; // H for Restricted, L for Generated / Subgroups
    std::vector<FamilyTag> operands;

    static FamilyTag fk(std::size_t k) { return {Kind::Fk, k, {}, {}}; }
    static FamilyTag restricted(std::size_t k, std::string h) { return {Kind::Restricted, k, std::move(h), {}}; }
    static FamilyTag generated(std::string l) { return {Kind::Generated, 0, std::move(l), {}}; }
    static FamilyTag subgroups(std::string l) { return {Kind::Subgroups, 0, std::move(l), {}}; }
    static FamilyTag union_of(FamilyTag a, FamilyTag b);
    static FamilyTag intersection_of(FamilyTag a, FamilyTag b);

    std::string to_string() const;
};

// ---------------------------------------------------------------------------
// Bound combinators (upper bounds only unless stated).

/// cd <= gd <= max(cd, 3).
DimBound eg_sandwich(const DimBound& cd);

/// max(base_prev + 1, class bounds) from the commensurator push-out.
DimBound lw_pushout_bound(const DimBound& base_prev, std::span<const DimBound> class_bounds);

struct UnionBounds {
    DimBound plain;   // max(a, b, a_and_b)
    DimBound pushout; // max(a, b, a_and_b + 1)
};

/// Two bounds for a union of families F u G from F, G and F n G.
UnionBounds union_families_bound(const DimBound& a, const DimBound& b, const DimBound& a_and_b);

/// F subset G, every member of G has F-restricted dimension <= fiber:
/// gd_F <= gd_G + fiber.
DimBound nested_families_bound(const DimBound& g, const DimBound& fiber);

struct CellTerm {
    DimBound stabilizer;
    std::size_t dim = 0;
};

/// max over cells of (stabilizer bound + cell dimension). Empty input is an InputError.
DimBound cell_stabilizer_bound(std::span<const CellTerm> cells);

// ---------------------------------------------------------------------------
// Derivations.

enum class Rule {
    Cited,           // leaf: an established value, carried with its citation
    EgSandwich,
    LwPushout,
    UnionMax,
    UnionPushout,
    NestedFamilies,
    CellStabilizer,
    SubgroupMonotone, // lower bound: max of the premises' lower bounds
    Meet,             // interval intersection of all premises
};

std::string rule_id(Rule r);

struct Conclusion {
    std::string subject;
    FamilyTag family;
    DimBound bound;
};

class Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

/// One rule application. Premises may be shared between nodes, so a
/// derivation is a finite DAG; rendering prints repeated nodes by reference.
class Derivation {
  public:
    static DerivationPtr leaf(Conclusion conclusion, std::string citation);
    /// Applies `rule` to the premises and records the result. For CellStabilizer
    /// `cell_dims[i]` is the dimension of the cell whose stabilizer is premise i.
    static DerivationPtr apply(Rule rule, std::string subject, FamilyTag family, std::vector<DerivationPtr> premises,
                               std::string citation, std::vector<std::size_t> cell_dims = {});

    Rule rule() const noexcept { return rule_; }
    const Conclusion& conclusion() const noexcept { return conclusion_; }
    const DimBound& bound() const noexcept { return conclusion_.bound; }
    const std::vector<DerivationPtr>& premises() const noexcept { return premises_; }
    const std::string& citation() const noexcept { return citation_; }
    const std::vector<std::size_t>& cell_dims() const noexcept { return cell_dims_; }

    /// Re-evaluates this node from its premises' stored bounds.
    DimBound evaluate() const;
    /// True iff every node in the DAG re-evaluates to its stored bound.
    bool recheck() const;

    /// Number of distinct nodes.
    std::size_t node_count() const;
    /// Longest root-to-leaf path, counting nodes.
    std::size_t depth() const;

    std::string render_text() const;
    std::string render_structured() const;

    // Internal: construction goes through leaf()/apply().
    Derivation(Rule rule, Conclusion conclusion, std::vector<DerivationPtr> premises, std::string citation,
               std::vector<std::size_t> cell_dims);

  private:
    Rule rule_;
    Conclusion conclusion_;
    std::vector<DerivationPtr> premises_;
    std::string citation_;
    std::vector<std::size_t> cell_dims_;
};

/// Evaluates `rule` on premise bounds without building a node.
DimBound evaluate_rule(Rule rule, std::span<const DimBound> premises, std::span<const std::size_t> cell_dims = {});

// ---------------------------------------------------------------------------
// Closed forms.

struct DimResult {
    DimBound bound;
    std::vector<std::string> citations;
    std::vector<std::string> notes;
    bool degenerate = false;
};

/// gd = cd = n + k for a virtually Z^n group, 0 <= k < n.
DimResult virtually_abelian_gd(std::size_t n, std::size_t k);

/// k >= n: the group itself lies in F_k, so a point is a model and gd = 0.
DimResult virtually_abelian_degenerate(std::size_t n, std::size_t k);

/// F_k-restricted dimension of a virtually Z^rank group for any k: the closed
/// form when k < rank, the degenerate value 0 otherwise (including rank 0).
DimResult restricted_virtually_abelian(std::size_t rank, std::size_t k);

/// gd_{F_2}(Z^k) = k + 2 for k >= 3.
DimResult zk_f2_special(std::size_t k);

/// A group containing a virtually Z^n subgroup has gd, cd >= n + k, 0 <= k < n.
DimResult subgroup_lower_bound(std::size_t n, std::size_t k);

/// Full or pure braid group on n strands: n + k - 1 for 0 <= k < n - 1.
DimResult braid_gd(std::size_t n, std::size_t k, bool pure);

/// Out(F_n): gd_{F_k} >= 2n + k - 3 for n >= 2, 0 <= k < 2n - 3.
DimResult out_fn_lower(std::size_t n, std::size_t k);

/// Out(A_d), A_d the RAAG on a string of d diamonds: >= 4d + k - 1, 0 <= k < 4d - 1.
DimResult out_diamonds_lower(std::size_t d, std::size_t k);

/// gd_{SUB(L)}(Z^n) <= n - t for a saturated rank-t sublattice L, 0 <= t < n.
DimResult sub_family_gd(std::size_t n, std::size_t t);

struct DerivedBound {
    DimBound bound;
    DerivationPtr derivation;
    /// Number of induction levels replayed (k + 1).
    std::size_t induction_levels = 0;
};

/// Replays the induction on k proving gd_{F_k}(Z^n) <= n + k, 0 <= k < n.
DerivedBound derive_zn_upper(std::size_t n, std::size_t k);

} // namespace bredim::dims
