#include "bredim/raag.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <sstream>

#include "bredim/citations.hpp"
#include "bredim/errors.hpp"
#include "text_util.hpp"

namespace bredim::raag {

SimpleGraph::SimpleGraph(std::size_t vertex_count)
    : adjacency_(vertex_count, std::vector<bool>(vertex_count, false)) {}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= vertex_count() || v >= vertex_count())
        throw InputError("vertex out of range: edge " + std::to_string(u) + " " + std::to_string(v) + " in a graph on " +
                         std::to_string(vertex_count()) + " vertices");
    if (u == v)
        throw InputError("loop at vertex " + std::to_string(u));
    if (adjacency_[u][v])
        throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    adjacency_[u][v] = adjacency_[v][u] = true;
    ++edge_count_;
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const { return adjacency_.at(u).at(v); }

std::vector<std::size_t> SimpleGraph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < vertex_count(); ++w)
        if (adjacency_[v][w])
            out.push_back(w);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < vertex_count(); ++u)
        for (std::size_t v = u + 1; v < vertex_count(); ++v)
            if (adjacency_[u][v])
                out.emplace_back(u, v);
    return out;
}

SimpleGraph complete_graph(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

SimpleGraph edgeless_graph(std::size_t n) { return SimpleGraph(n); }

namespace {

void add_parsed_edge(SimpleGraph& g, std::size_t u, std::size_t v, std::size_t line) {
    try {
        g.add_edge(u, v);
    } catch (const InputError& e) {
        throw ParseError(line, e.what());
    }
}

SimpleGraph parse_dimacs(std::string_view text) {
    const auto lines = text::significant_lines(text, false);
    std::optional<SimpleGraph> g;
    std::size_t declared = 0;
    std::size_t last_line = 1;
    for (const auto& line : lines) {
        last_line = line.number;
        const auto toks = text::tokens(line.content);
        if (toks[0] == "c")
            continue;
        if (toks[0] == "p") {
            if (g)
                throw ParseError(line.number, "second problem line");
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
                throw ParseError(line.number, "expected 'p edge V E'");
            g.emplace(text::parse_count(toks[2], line.number));
            declared = text::parse_count(toks[3], line.number);
            continue;
        }
        if (toks[0] == "e") {
            if (!g)
                throw ParseError(line.number, "edge before the 'p edge V E' line");
            if (toks.size() != 3)
                throw ParseError(line.number, "expected 'e u v'");
            const std::size_t u = text::parse_count(toks[1], line.number);
            const std::size_t v = text::parse_count(toks[2], line.number);
            if (u == 0 || v == 0)
                throw ParseError(line.number, "DIMACS vertices are numbered from 1");
            add_parsed_edge(*g, u - 1, v - 1, line.number);
            continue;
        }
        throw ParseError(line.number, "unrecognised DIMACS line '" + line.content + "'");
    }
    if (!g)
        throw ParseError(last_line, "missing 'p edge V E' line");
    if (g->edge_count() != declared)
        throw ParseError(last_line, "header declares " + std::to_string(declared) + " edges, found " +
                                        std::to_string(g->edge_count()));
    return *g;
}

bool looks_like_dimacs(std::string_view text) {
    for (const auto& line : text::significant_lines(text, false)) {
        const char c = line.content.front();
        if (c == '#')
            continue;
        return (c == 'c' || c == 'p') && (line.content.size() == 1 || line.content[1] == ' ' || line.content[1] == '\t');
    }
    return false;
}

} // namespace

SimpleGraph parse_graph(std::string_view text) {
    if (looks_like_dimacs(text))
        return parse_dimacs(text);
    const auto lines = text::significant_lines(text);
    if (lines.empty())
        throw ParseError(1, "empty graph description; expected header 'V E'");
    const auto header = text::tokens(lines[0].content);
    if (header.size() != 2)
        throw ParseError(lines[0].number, "expected header 'V E'");
    SimpleGraph g(text::parse_count(header[0], lines[0].number));
    const std::size_t count = text::parse_count(header[1], lines[0].number);
    if (lines.size() - 1 < count)
        throw ParseError(lines.back().number, "expected " + std::to_string(count) + " edge lines, found " +
                                                  std::to_string(lines.size() - 1));
    if (lines.size() - 1 > count)
        throw ParseError(lines[count + 1].number, "unexpected extra line");
    for (std::size_t i = 1; i <= count; ++i) {
        const auto toks = text::tokens(lines[i].content);
        if (toks.size() != 2)
            throw ParseError(lines[i].number, "expected 'u v'");
        add_parsed_edge(g, text::parse_count(toks[0], lines[i].number), text::parse_count(toks[1], lines[i].number),
                        lines[i].number);
    }
    return g;
}

std::string format_graph(const SimpleGraph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        os << u << ' ' << v << '\n';
    return os.str();
}

CliqueTable cliques(const SimpleGraph& g) {
    CliqueTable t;
    t.by_size.push_back({Clique{}});
    // extending each clique only by vertices above its maximum keeps every level
    // duplicate-free and in lexicographic order
    while (true) {
        std::vector<Clique> next;
        for (const auto& c : t.by_size.back()) {
            const std::size_t start = c.empty() ? 0 : c.back() + 1;
            for (std::size_t v = start; v < g.vertex_count(); ++v) {
                if (std::all_of(c.begin(), c.end(), [&](std::size_t u) { return g.adjacent(u, v); })) {
                    next.push_back(c);
                    next.back().push_back(v);
                }
            }
        }
        if (next.empty())
            break;
        t.by_size.push_back(std::move(next));
    }
    return t;
}

namespace {

using VertexSet = std::vector<std::size_t>; // sorted

VertexSet intersect_sorted(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct BronKerbosch {
    const SimpleGraph& g;
    std::vector<VertexSet> nbrs;
    std::vector<Clique> found;

    void expand(Clique& r, VertexSet p, VertexSet x) {
        if (p.empty()) {
            if (x.empty()) {
                Clique c = r;
                std::sort(c.begin(), c.end());
                found.push_back(std::move(c));
            }
            return;
        }
        // pivot: the vertex of P u X with the most neighbours in P
        std::size_t pivot = p.front();
        std::size_t best = 0;
        for (const auto* side : {&p, &x}) {
            for (std::size_t u : *side) {
                const std::size_t score = intersect_sorted(nbrs[u], p).size();
                if (score > best || (score == best && u < pivot)) {
                    best = score;
                    pivot = u;
                }
            }
        }
        VertexSet candidates;
        std::set_difference(p.begin(), p.end(), nbrs[pivot].begin(), nbrs[pivot].end(),
                            std::back_inserter(candidates));
        for (std::size_t v : candidates) {
            r.push_back(v);
            expand(r, intersect_sorted(p, nbrs[v]), intersect_sorted(x, nbrs[v]));
            r.pop_back();
            p.erase(std::lower_bound(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }
};

std::vector<std::size_t> degeneracy_order(const SimpleGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v)
        degree[v] = g.neighbors(v).size();
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (pick == n || degree[v] < degree[pick]))
                pick = v;
        removed[pick] = true;
        order.push_back(pick);
        for (std::size_t w : g.neighbors(pick))
            if (!removed[w])
                --degree[w];
    }
    return order;
}

} // namespace

std::vector<Clique> maximal_cliques(const SimpleGraph& g) {
    BronKerbosch bk{g, {}, {}};
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        bk.nbrs.push_back(g.neighbors(v));
    const auto order = degeneracy_order(g);
    std::vector<std::size_t> position(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = i;
    for (std::size_t v : order) {
        VertexSet p, x;
        for (std::size_t w : bk.nbrs[v])
            (position[w] > position[v] ? p : x).push_back(w);
        Clique r{v};
        bk.expand(r, std::move(p), std::move(x));
    }
    std::sort(bk.found.begin(), bk.found.end());
    return bk.found;
}

std::size_t clique_number(const SimpleGraph& g) {
    std::size_t best = 0;
    for (const auto& c : maximal_cliques(g))
        best = std::max(best, c.size());
    return best;
}

homology::ChainComplex salvetti_complex(const SimpleGraph& g) {
    const CliqueTable t = cliques(g);
    std::vector<std::size_t> counts;
    for (const auto& level : t.by_size)
        counts.push_back(level.size());
    return homology::ChainComplex::with_zero_boundaries(std::move(counts));
}

IntMatrix salvetti_face_boundary(const CliqueTable& table, std::size_t k) {
    if (k == 0 || k > table.max_size())
        throw InputError("face boundary degree " + std::to_string(k) + " out of range 1.." +
                         std::to_string(table.max_size()));
    const auto& faces = table.by_size[k - 1];
    const auto& cubes = table.by_size[k];
    IntMatrix d(faces.size(), cubes.size());
    for (std::size_t j = 0; j < cubes.size(); ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            Clique face = cubes[j];
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            const auto it = std::lower_bound(faces.begin(), faces.end(), face);
            if (it == faces.end() || *it != face)
                throw std::logic_error("clique table is not closed under taking faces");
            const auto row = static_cast<std::size_t>(it - faces.begin());
            const long sign = i % 2 == 0 ? 1 : -1;
            d(row, j) += sign;  // front face, at coordinate 0
            d(row, j) -= sign;  // back face, at coordinate 1, identified with the front one
        }
    }
    return d;
}

std::size_t cd_raag(const SimpleGraph& g) { return clique_number(g); }

std::size_t embedded_torus_rank(const SimpleGraph& g) {
    // the vertices of a maximum clique pairwise commute and generate Z^omega
    return clique_number(g);
}

dims::DimResult gd_fk_raag(const SimpleGraph& g, std::size_t k) {
    const std::size_t cd = cd_raag(g);
    if (cd == 0) {
        return {dims::DimBound::exact(0), {std::string(cite::kDegenerate)},
                {"empty graph: A_Gamma is trivial, every dimension is 0"}, true};
    }
    if (k >= cd)
        throw OutOfRangeError("the RAAG formula holds for 0 <= k < cd(A_Gamma) = " + std::to_string(cd) + " (got k=" +
                              std::to_string(k) + ")");
    return {dims::DimBound::exact(cd + k),
            {std::string(cite::kRaagFk), std::string(cite::kRaagCd), std::string(cite::kEmbeddedTorus)},
            {"cd(A_Gamma) = " + std::to_string(cd), "gd = cd"},
            false};
}

} // namespace bredim::raag
