#include "bredim/gog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bredim/citations.hpp"
#include "bredim/errors.hpp"
#include "text_util.hpp"

namespace bredim::gog {

namespace {

std::string edge_label(const GraphOfGroups& y, const EdgeDesc& e) {
    return y.vertices()[e.source].name + "-" + y.vertices()[e.target].name;
}

bool connected(std::size_t n, const std::vector<EdgeDesc>& edges) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : edges)
        parent[find(e.source)] = find(e.target);
    for (std::size_t v = 1; v < n; ++v)
        if (find(v) != find(0))
            return false;
    return true;
}

} // namespace

GraphOfGroups::GraphOfGroups(std::vector<VertexGroupDesc> vertices, std::vector<EdgeDesc> edges, bool acylindrical)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), acylindrical_(acylindrical) {
    if (vertices_.empty())
        throw InputError("graph of groups has no vertices");
    for (auto& v : vertices_) {
        if (v.rank > 0 && !v.infinite)
            throw InputError("vertex '" + v.name + "' has positive rank but is marked finite");
    }
    for (const auto& e : edges_) {
        if (e.source >= vertices_.size() || e.target >= vertices_.size())
            throw InputError("edge endpoint out of range");
        const std::size_t cap = std::min(vertices_[e.source].rank, vertices_[e.target].rank);
        if (e.rank > cap)
            throw InputError("edge group " + edge_label(*this, e) + " has rank " + std::to_string(e.rank) +
                             ", exceeding the endpoint rank " + std::to_string(cap) + "; it cannot embed");
    }
    if (!connected(vertices_.size(), edges_))
        throw InputError("underlying graph is not connected");
}

std::optional<std::size_t> GraphOfGroups::find_vertex(std::string_view name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].name == name)
            return i;
    return std::nullopt;
}

namespace {

std::size_t parse_rank(const std::string& token, std::size_t line) {
    if (token.rfind("rank=", 0) != 0)
        throw ParseError(line, "expected 'rank=<r>', got '" + token + "'");
    return text::parse_count(token.substr(5), line);
}

} // namespace

GraphOfGroups parse_gog(std::string_view text) {
    std::vector<VertexGroupDesc> vertices;
    std::vector<EdgeDesc> edges;
    std::optional<bool> acylindrical;
    auto index_of = [&](const std::string& name) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].name == name)
                return i;
        return std::nullopt;
    };

    for (const auto& line : text::significant_lines(text)) {
        const auto toks = text::tokens(line.content);
        if (toks[0] == "vertex") {
            if (toks.size() != 3)
                throw ParseError(line.number, "expected 'vertex <name> rank=<r>'");
            if (index_of(toks[1]))
                throw ParseError(line.number, "vertex '" + toks[1] + "' declared twice");
            const std::size_t r = parse_rank(toks[2], line.number);
            vertices.push_back({toks[1], r, r > 0});
        } else if (toks[0] == "edge") {
            if (toks.size() != 4)
                throw ParseError(line.number, "expected 'edge <name1> <name2> rank=<r>|finite'");
            const auto a = index_of(toks[1]);
            const auto b = index_of(toks[2]);
            if (!a || !b)
                throw ParseError(line.number, "unknown vertex '" + (a ? toks[2] : toks[1]) + "'");
            EdgeDesc e{*a, *b, 0, true};
            if (toks[3] != "finite") {
                e.rank = parse_rank(toks[3], line.number);
                e.finite = e.rank == 0;
            }
            const std::size_t cap = std::min(vertices[*a].rank, vertices[*b].rank);
            if (e.rank > cap)
                throw ParseError(line.number, "edge group rank " + std::to_string(e.rank) +
                                                  " exceeds the endpoint rank " + std::to_string(cap) +
                                                  "; it cannot embed");
            edges.push_back(e);
        } else if (toks[0].rfind("acylindrical", 0) == 0) {
            std::string joined;
            for (const auto& t : toks)
                joined += t;
            if (joined == "acylindrical=true")
                acylindrical = true;
            else if (joined == "acylindrical=false")
                acylindrical = false;
            else
                throw ParseError(line.number, "expected 'acylindrical = true|false'");
        } else {
            throw ParseError(line.number, "unrecognised line '" + line.content + "'");
        }
    }
    return GraphOfGroups(std::move(vertices), std::move(edges), acylindrical.value_or(false));
}

std::string format_gog(const GraphOfGroups& y) {
    std::ostringstream os;
    for (const auto& v : y.vertices())
        os << "vertex " << v.name << " rank=" << v.rank << '\n';
    for (const auto& e : y.edges()) {
        os << "edge " << y.vertices()[e.source].name << ' ' << y.vertices()[e.target].name << ' ';
        if (e.finite)
            os << "finite\n";
        else
            os << "rank=" << e.rank << '\n';
    }
    os << "acylindrical = " << (y.acylindrical() ? "true" : "false") << '\n';
    return os.str();
}

std::size_t max_vertex_rank(const GraphOfGroups& y) {
    std::size_t m = 0;
    for (const auto& v : y.vertices())
        m = std::max(m, v.rank);
    return m;
}

std::string to_string(CellLocation l) { return l == CellLocation::Tree ? "tree" : "cone"; }

std::string to_string(StabilizerClass s) {
    switch (s) {
    case StabilizerClass::VertexGroup:
        return "vertex-group";
    case StabilizerClass::EdgeGroup:
        return "edge-group";
    case StabilizerClass::VirtuallyCyclic:
        return "virtually-cyclic";
    }
    return "unknown";
}

BoundsResult bass_serre_bounds(const GraphOfGroups& y, std::size_t k) {
    using dims::Derivation;
    using dims::DerivationPtr;
    using dims::FamilyTag;
    using dims::Rule;

    if (!y.acylindrical())
        throw OutOfRangeError("the Bass-Serre bounds need an acylindrical splitting; the input does not assert one");

    BoundsResult out;
    std::vector<DerivationPtr> group_leaves; // vertex and edge groups, for the lower bound
    std::vector<DerivationPtr> cell_premises;
    std::vector<std::size_t> cell_dims;
    bool any_degenerate = false;

    auto group_leaf = [&](const std::string& subject, std::size_t rank) {
        const auto r = dims::restricted_virtually_abelian(rank, k);
        any_degenerate = any_degenerate || r.degenerate;
        return Derivation::leaf({subject, FamilyTag::restricted(k, subject), r.bound}, r.citations.front());
    };
    auto add_cell = [&](CellClass c, const DerivationPtr& stab) {
        c.stabilizer_gd = stab->bound();
        c.term = dims::cell_stabilizer_bound(std::vector<dims::CellTerm>{{c.stabilizer_gd, c.dim}});
        out.census.cells.push_back(std::move(c));
        cell_premises.push_back(stab);
        cell_dims.push_back(out.census.cells.back().dim);
    };

    for (const auto& v : y.vertices()) {
        auto leaf = group_leaf("G_" + v.name, v.rank);
        group_leaves.push_back(leaf);
        add_cell({0, CellLocation::Tree, StabilizerClass::VertexGroup, v.name, 1, {}, {}}, leaf);
    }
    for (const auto& e : y.edges()) {
        auto leaf = group_leaf("G_" + edge_label(y, e), e.rank);
        group_leaves.push_back(leaf);
        add_cell({1, CellLocation::Tree, StabilizerClass::EdgeGroup, edge_label(y, e), 1, {}, {}}, leaf);
    }
    if (!y.edges().empty()) {
        // cells added by coning off the tree geodesics; their stabilizers are
        // virtually cyclic (or smaller), bounded as rank-1 virtually abelian groups
        const auto vc = dims::restricted_virtually_abelian(1, k);
        auto leaf = Derivation::leaf({"virtually cyclic stabilizer", FamilyTag::restricted(k, "V"), vc.bound},
                                     std::string(cite::kConedOffTree));
        add_cell({0, CellLocation::Cone, StabilizerClass::VirtuallyCyclic, "cone point", 1, {}, {}}, leaf);
        add_cell({1, CellLocation::Cone, StabilizerClass::VirtuallyCyclic, "cone edge", 1, {}, {}}, leaf);
        add_cell({2, CellLocation::Cone, StabilizerClass::VirtuallyCyclic, "cone 2-cell", 1, {}, {}}, leaf);
    }

    const FamilyTag family = FamilyTag::fk(k);
    auto lower = Derivation::apply(Rule::SubgroupMonotone, "pi_1(Y)", family, group_leaves,
                                   std::string(cite::kSubgroupMonotone));
    auto upper = Derivation::apply(Rule::CellStabilizer, "pi_1(Y)", family, cell_premises,
                                   std::string(cite::kCellStabilizer), cell_dims);
    out.derivation =
        Derivation::apply(Rule::Meet, "pi_1(Y)", family, {lower, upper}, std::string(cite::kBassSerreBounds));
    out.bound = out.derivation->bound();

    out.citations.emplace_back(cite::kBassSerreBounds);
    if (!y.edges().empty())
        out.citations.emplace_back(cite::kConedOffTree);
    out.citations.emplace_back(cite::kVirtuallyAbelian);
    if (any_degenerate) {
        out.citations.emplace_back(cite::kDegenerate);
        out.notes.emplace_back("some vertex or edge group lies in F_" + std::to_string(k) +
                               "; its term is the degenerate value 0");
    }
    if (k == 0 && !y.edges().empty())
        out.notes.emplace_back("k = 0: virtually cyclic cell stabilizers contribute gd = 1");
    return out;
}

GdResult gog_gd(const GraphOfGroups& y, std::size_t k) {
    const std::size_t m = max_vertex_rank(y);
    std::vector<std::string> failures;
    if (!y.acylindrical())
        failures.emplace_back("the splitting is not asserted to be acylindrical");
    for (const auto& v : y.vertices())
        if (!v.infinite)
            failures.push_back("vertex group G_" + v.name + " is finite");
    for (const auto& e : y.edges()) {
        const auto& a = y.vertices()[e.source];
        const auto& b = y.vertices()[e.target];
        if (e.rank >= a.rank || e.rank >= b.rank)
            failures.push_back("edge group G_" + edge_label(y, e) + " of rank " + std::to_string(e.rank) +
                               " is not of smaller rank than both endpoint groups");
    }
    if (k < 1 || k >= m)
        failures.push_back("k = " + std::to_string(k) + " is outside 1 <= k < m = " + std::to_string(m));

    GdResult out;
    if (failures.empty()) {
        out.bound = dims::DimBound::exact(m + k);
        out.exact = true;
        out.citations.emplace_back(cite::kGraphOfGroups);
        const bool all_finite = std::all_of(y.edges().begin(), y.edges().end(), [](const EdgeDesc& e) { return e.finite; });
        if (all_finite && !y.edges().empty())
            out.citations.emplace_back(cite::kFiniteEdgeGroups);
        out.notes.push_back("m = " + std::to_string(m));
        return out;
    }
    for (auto& f : failures)
        out.notes.push_back("closed form not applicable: " + f);
    out.fallback = bass_serre_bounds(y, k);
    out.bound = out.fallback->bound;
    out.citations = out.fallback->citations;
    for (const auto& n : out.fallback->notes)
        out.notes.push_back(n);
    return out;
}

} // namespace bredim::gog
