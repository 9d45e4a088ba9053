#include "bredim/dims.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bredim/citations.hpp"
#include "bredim/errors.hpp"

namespace bredim::dims {

namespace {

using Upper = std::optional<std::size_t>;

Upper max_upper(const Upper& a, const Upper& b) {
    if (!a || !b)
        return std::nullopt;
    return std::max(*a, *b);
}

Upper add_upper(const Upper& a, const Upper& b) {
    if (!a || !b)
        return std::nullopt;
    return *a + *b;
}

Upper add_upper(const Upper& a, std::size_t d) {
    if (!a)
        return std::nullopt;
    return *a + d;
}

std::string str(std::string_view s) { return std::string(s); }

[[noreturn]] void out_of_range(const std::string& what) { throw OutOfRangeError(what); }

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

// ---------------------------------------------------------------------------

DimBound::DimBound(std::size_t lower, std::optional<std::size_t> upper) : lower_(lower), upper_(upper) {
    if (upper_ && *upper_ < lower_)
        throw InputError("invalid dimension bound: lower " + std::to_string(lower_) + " exceeds upper " +
                         std::to_string(*upper_));
}

DimBound DimBound::intersect(const DimBound& other) const {
    const std::size_t lo = std::max(lower_, other.lower_);
    Upper hi = upper_;
    if (other.upper_)
        hi = hi ? std::min(*hi, *other.upper_) : other.upper_;
    if (hi && *hi < lo)
        throw InputError("incompatible bounds " + to_string() + " and " + other.to_string() +
                         " on the same quantity");
    return {lo, hi};
}

std::string DimBound::to_string() const {
    if (is_exact())
        return "= " + std::to_string(lower_);
    if (upper_ && lower_ == 0)
        return "<= " + std::to_string(*upper_);
    if (!upper_ && lower_ > 0)
        return ">= " + std::to_string(lower_);
    if (!upper_)
        return "unbounded";
    return "in [" + std::to_string(lower_) + ", " + std::to_string(*upper_) + "]";
}

FamilyTag FamilyTag::union_of(FamilyTag a, FamilyTag b) {
    FamilyTag t{Kind::Union, 0, {}, {}};
    t.operands.push_back(std::move(a));
    t.operands.push_back(std::move(b));
    return t;
}

FamilyTag FamilyTag::intersection_of(FamilyTag a, FamilyTag b) {
    FamilyTag t{Kind::Intersection, 0, {}, {}};
    t.operands.push_back(std::move(a));
    t.operands.push_back(std::move(b));
    return t;
}

std::string FamilyTag::to_string() const {
    switch (kind) {
    case Kind::Fk:
        return "F_" + std::to_string(k);
    case Kind::Restricted:
        return "F_" + std::to_string(k) + " cap " + subgroup;
    case Kind::Generated:
        return "<[" + subgroup + "]>";
    case Kind::Subgroups:
        return "SUB(" + subgroup + ")";
    case Kind::Union:
        return "(" + operands.at(0).to_string() + ") u (" + operands.at(1).to_string() + ")";
    case Kind::Intersection:
        return "(" + operands.at(0).to_string() + ") n (" + operands.at(1).to_string() + ")";
    }
    return {};
}

// ---------------------------------------------------------------------------

DimBound eg_sandwich(const DimBound& cd) {
    return {cd.lower(), cd.upper() ? Upper(std::max<std::size_t>(*cd.upper(), 3)) : std::nullopt};
}

DimBound lw_pushout_bound(const DimBound& base_prev, std::span<const DimBound> class_bounds) {
    Upper u = add_upper(base_prev.upper(), 1);
    for (const auto& c : class_bounds)
        u = max_upper(u, c.upper());
    return {0, u};
}

UnionBounds union_families_bound(const DimBound& a, const DimBound& b, const DimBound& a_and_b) {
    const Upper ab = max_upper(a.upper(), b.upper());
    return {DimBound(0, max_upper(ab, a_and_b.upper())), DimBound(0, max_upper(ab, add_upper(a_and_b.upper(), 1)))};
}

DimBound nested_families_bound(const DimBound& g, const DimBound& fiber) {
    return {0, add_upper(g.upper(), fiber.upper())};
}

DimBound cell_stabilizer_bound(std::span<const CellTerm> cells) {
    if (cells.empty())
        throw InputError("cell-stabilizer bound needs at least one cell");
    Upper u = add_upper(cells.front().stabilizer.upper(), cells.front().dim);
    for (const auto& c : cells.subspan(1))
        u = max_upper(u, add_upper(c.stabilizer.upper(), c.dim));
    return {0, u};
}

// ---------------------------------------------------------------------------

std::string rule_id(Rule r) {
    switch (r) {
    case Rule::Cited:
        return "cited";
    case Rule::EgSandwich:
        return "eg-sandwich";
    case Rule::LwPushout:
        return "lw-pushout";
    case Rule::UnionMax:
        return "union-max";
    case Rule::UnionPushout:
        return "union-pushout";
    case Rule::NestedFamilies:
        return "nested-families";
    case Rule::CellStabilizer:
        return "cell-stabilizer";
    case Rule::SubgroupMonotone:
        return "subgroup-monotone";
    case Rule::Meet:
        return "meet";
    }
    return "unknown";
}

DimBound evaluate_rule(Rule rule, std::span<const DimBound> p, std::span<const std::size_t> cell_dims) {
    auto need = [&](std::size_t count) {
        if (p.size() != count)
            throw std::logic_error("rule " + rule_id(rule) + " expects " + std::to_string(count) + " premises");
    };
    switch (rule) {
    case Rule::Cited:
        throw std::logic_error("cited leaves carry their bound; nothing to evaluate");
    case Rule::EgSandwich:
        need(1);
        return eg_sandwich(p[0]);
    case Rule::LwPushout:
        if (p.empty())
            throw std::logic_error("lw-pushout needs the previous-level bound");
        return lw_pushout_bound(p[0], p.subspan(1));
    case Rule::UnionMax:
        need(3);
        return union_families_bound(p[0], p[1], p[2]).plain;
    case Rule::UnionPushout:
        need(3);
        return union_families_bound(p[0], p[1], p[2]).pushout;
    case Rule::NestedFamilies:
        need(2);
        return nested_families_bound(p[0], p[1]);
    case Rule::CellStabilizer: {
        if (cell_dims.size() != p.size())
            throw std::logic_error("cell-stabilizer needs one cell dimension per premise");
        std::vector<CellTerm> cells;
        for (std::size_t i = 0; i < p.size(); ++i)
            cells.push_back({p[i], cell_dims[i]});
        return cell_stabilizer_bound(cells);
    }
    case Rule::SubgroupMonotone: {
        std::size_t lo = 0;
        for (const auto& b : p)
            lo = std::max(lo, b.lower());
        return DimBound::at_least(lo);
    }
    case Rule::Meet: {
        DimBound out;
        for (const auto& b : p)
            out = out.intersect(b);
        return out;
    }
    }
    throw std::logic_error("unknown rule");
}

Derivation::Derivation(Rule rule, Conclusion conclusion, std::vector<DerivationPtr> premises, std::string citation,
                       std::vector<std::size_t> cell_dims)
    : rule_(rule), conclusion_(std::move(conclusion)), premises_(std::move(premises)), citation_(std::move(citation)),
      cell_dims_(std::move(cell_dims)) {}

DerivationPtr Derivation::leaf(Conclusion conclusion, std::string citation) {
    return std::make_shared<const Derivation>(Rule::Cited, std::move(conclusion), std::vector<DerivationPtr>{},
                                              std::move(citation), std::vector<std::size_t>{});
}

DerivationPtr Derivation::apply(Rule rule, std::string subject, FamilyTag family, std::vector<DerivationPtr> premises,
                                std::string citation, std::vector<std::size_t> cell_dims) {
    std::vector<DimBound> bounds;
    for (const auto& p : premises)
        bounds.push_back(p->bound());
    DimBound result = evaluate_rule(rule, bounds, cell_dims);
    return std::make_shared<const Derivation>(rule, Conclusion{std::move(subject), std::move(family), result},
                                              std::move(premises), std::move(citation), std::move(cell_dims));
}

DimBound Derivation::evaluate() const {
    if (rule_ == Rule::Cited)
        return conclusion_.bound;
    std::vector<DimBound> bounds;
    for (const auto& p : premises_)
        bounds.push_back(p->bound());
    return evaluate_rule(rule_, bounds, cell_dims_);
}

namespace {

// Distinct nodes in preorder; index in the vector is the node id.
std::vector<const Derivation*> preorder(const Derivation& root) {
    std::vector<const Derivation*> order;
    std::map<const Derivation*, std::size_t> seen;
    std::function<void(const Derivation&)> visit = [&](const Derivation& d) {
        if (seen.count(&d))
            return;
        seen.emplace(&d, order.size());
        order.push_back(&d);
        for (const auto& p : d.premises())
            visit(*p);
    };
    visit(root);
    return order;
}

std::string headline(const Derivation& d) {
    return "gd_{" + d.conclusion().family.to_string() + "}(" + d.conclusion().subject + ") " +
           d.bound().to_string();
}

} // namespace

bool Derivation::recheck() const {
    for (const Derivation* d : preorder(*this)) {
        if (d->citation().empty())
            return false;
        try {
            if (!(d->evaluate() == d->bound()))
                return false;
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

std::size_t Derivation::node_count() const { return preorder(*this).size(); }

std::size_t Derivation::depth() const {
    std::size_t best = 0;
    for (const auto& p : premises_)
        best = std::max(best, p->depth());
    return best + 1;
}

std::string Derivation::render_text() const {
    const auto order = preorder(*this);
    std::map<const Derivation*, std::size_t> ids;
    for (std::size_t i = 0; i < order.size(); ++i)
        ids.emplace(order[i], i);
    std::ostringstream os;
    std::vector<bool> printed(order.size(), false);
    std::function<void(const Derivation&, std::size_t)> emit = [&](const Derivation& d, std::size_t indent) {
        const std::size_t id = ids.at(&d);
        const std::string pad(indent * 2, ' ');
        if (printed[id]) {
            os << pad << "#" << id << " (see above) " << headline(d) << '\n';
            return;
        }
        printed[id] = true;
        os << pad << "#" << id << " [" << rule_id(d.rule()) << "] " << headline(d) << '\n';
        os << pad << "   cite: " << d.citation() << '\n';
        for (const auto& p : d.premises())
            emit(*p, indent + 1);
    };
    emit(*this, 0);
    return os.str();
}

std::string Derivation::render_structured() const {
    const auto order = preorder(*this);
    std::map<const Derivation*, std::size_t> ids;
    for (std::size_t i = 0; i < order.size(); ++i)
        ids.emplace(order[i], i);
    std::ostringstream os;
    os << "derivation:\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Derivation& d = *order[i];
        os << "  node=" << i << " rule=" << rule_id(d.rule()) << " subject=" << quoted(d.conclusion().subject)
           << " family=" << quoted(d.conclusion().family.to_string()) << " lower=" << d.bound().lower()
           << " upper=" << (d.bound().upper() ? std::to_string(*d.bound().upper()) : std::string("inf"))
           << " premises=[";
        for (std::size_t j = 0; j < d.premises().size(); ++j)
            os << (j ? "," : "") << ids.at(d.premises()[j].get());
        os << "]";
        if (!d.cell_dims().empty()) {
            os << " cell_dims=[";
            for (std::size_t j = 0; j < d.cell_dims().size(); ++j)
                os << (j ? "," : "") << d.cell_dims()[j];
            os << "]";
        }
        os << " citation=" << quoted(d.citation()) << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------

DimResult virtually_abelian_gd(std::size_t n, std::size_t k) {
    if (k >= n)
        out_of_range("virtually Z^n formula needs 0 <= k < n (got n=" + std::to_string(n) + ", k=" +
                     std::to_string(k) + "); for k >= n the group lies in F_k and gd = 0 (degenerate)");
    return {DimBound::exact(n + k), {str(cite::kVirtuallyAbelian)}, {"gd = cd"}, false};
}

DimResult virtually_abelian_degenerate(std::size_t n, std::size_t k) {
    if (k < n)
        throw InputError("degenerate case requires k >= n");
    return {DimBound::exact(0), {str(cite::kDegenerate)}, {"not a closed-form result: G itself belongs to F_k"}, true};
}

DimResult restricted_virtually_abelian(std::size_t rank, std::size_t k) {
    return k < rank ? virtually_abelian_gd(rank, k) : virtually_abelian_degenerate(rank, k);
}

DimResult zk_f2_special(std::size_t k) {
    if (k < 3)
        out_of_range("gd_{F_2}(Z^k) = k + 2 is stated for k >= 3 (got k=" + std::to_string(k) + ")");
    auto r = virtually_abelian_gd(k, 2);
    r.citations.insert(r.citations.begin(), str(cite::kZkF2));
    return r;
}

DimResult subgroup_lower_bound(std::size_t n, std::size_t k) {
    if (n < 1 || k >= n)
        out_of_range("subgroup lower bound needs n >= 1 and 0 <= k < n (got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
    return {DimBound::at_least(n + k), {str(cite::kSubgroupLowerBound)}, {"applies to both gd and cd"}, false};
}

DimResult braid_gd(std::size_t n, std::size_t k, bool pure) {
    if (n < 2 || k + 1 >= n)
        out_of_range("braid formula needs n >= 2 and 0 <= k < n - 1 (got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
    DimResult r{DimBound::exact(n + k - 1), {str(cite::kBraid), str(cite::kBraidVcd)}, {}, false};
    r.notes.push_back(std::string(pure ? "pure braid group P_" : "braid group B_") + std::to_string(n) +
                      ": vcd = " + std::to_string(n - 1) + ", gd = cd");
    return r;
}

DimResult out_fn_lower(std::size_t n, std::size_t k) {
    if (n < 2 || k + 3 >= 2 * n)
        out_of_range("Out(F_n) bound needs n >= 2 and 0 <= k < 2n - 3 (got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
    return {DimBound::at_least(2 * n + k - 3), {str(cite::kOutFn)}, {"no upper bound is known"}, false};
}

DimResult out_diamonds_lower(std::size_t d, std::size_t k) {
    if (d < 1 || k + 1 >= 4 * d)
        out_of_range("Out(A_d) bound needs d >= 1 and 0 <= k < 4d - 1 (got d=" + std::to_string(d) +
                     ", k=" + std::to_string(k) + ")");
    return {DimBound::at_least(4 * d + k - 1), {str(cite::kOutDiamonds)}, {"no upper bound is known"}, false};
}

DimResult sub_family_gd(std::size_t n, std::size_t t) {
    if (t >= n)
        out_of_range("SUB(L) bound needs 0 <= t < n (got n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")");
    return {DimBound::at_most(n - t), {str(cite::kSubFamily)}, {}, false};
}

DerivedBound derive_zn_upper(std::size_t n, std::size_t k) {
    if (k >= n)
        out_of_range("the induction proves gd_{F_k}(Z^n) <= n + k for 0 <= k < n (got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
    const std::string group = "Z^" + std::to_string(n);
    const std::string h = group; // the induction runs with H = Z^n

    DerivationPtr level = Derivation::leaf({group, FamilyTag::restricted(0, h), DimBound::at_most(n)},
                                           str(cite::kInductionBase));
    for (std::size_t m = 1; m <= k; ++m) {
        const std::string l = "L_" + std::to_string(m);
        const FamilyTag generated = FamilyTag::generated(l);
        const FamilyTag previous = FamilyTag::restricted(m - 1, h);

        auto sub = Derivation::leaf({group, generated, sub_family_gd(n, m).bound}, str(cite::kSubFamily));
        auto fiber = Derivation::leaf({"K virtually Z^" + std::to_string(m), FamilyTag::restricted(m - 1, "K"),
                                       DimBound::at_most(2 * m - 1)},
                                      str(cite::kFiberBound));
        auto nested = Derivation::apply(Rule::NestedFamilies, group, FamilyTag::intersection_of(generated, previous),
                                        {sub, fiber}, str(cite::kNestedFamilies));
        auto local = Derivation::apply(Rule::UnionPushout, "N[" + l + "] = " + group,
                                       FamilyTag::union_of(generated, previous), {level, sub, nested},
                                       str(cite::kUnionPushout));
        level = Derivation::apply(Rule::LwPushout, group, FamilyTag::restricted(m, h), {level, local},
                                  str(cite::kLwPushout));
    }
    return {level->bound(), level, k + 1};
}

} // namespace bredim::dims
