#include "bredim/homology.hpp"

#include <sstream>

#include "bredim/errors.hpp"
#include "bredim/lattice.hpp"
#include "text_util.hpp"

namespace bredim::homology {

namespace {

void require_degree(const ChainComplex& c, std::size_t k) {
    if (k > c.top_degree())
        throw InputError("degree " + std::to_string(k) + " out of range 0.." + std::to_string(c.top_degree()));
}

std::vector<Integer> nontrivial_factors(const IntMatrix& m) {
    std::vector<Integer> out;
    for (auto& d : lattice::invariant_factors(m))
        if (d > 1)
            out.push_back(std::move(d));
    return out;
}

} // namespace

bool validate(const std::vector<std::size_t>& cell_counts, const std::vector<IntMatrix>& boundaries) {
    if (cell_counts.empty() || boundaries.size() + 1 != cell_counts.size())
        return false;
    for (std::size_t k = 1; k <= boundaries.size(); ++k) {
        const auto& d = boundaries[k - 1];
        if (d.rows() != cell_counts[k - 1] || d.cols() != cell_counts[k])
            return false;
    }
    for (std::size_t k = 1; k < boundaries.size(); ++k) {
        const auto& lower = boundaries[k - 1];
        const auto& upper = boundaries[k];
        if (lower.rows() == 0 || upper.cols() == 0 || lower.cols() == 0)
            continue;
        if (!(lower * upper).is_zero())
            return false;
    }
    return true;
}

ChainComplex::ChainComplex(std::vector<std::size_t> cell_counts, std::vector<IntMatrix> boundaries)
    : cell_counts_(std::move(cell_counts)), boundaries_(std::move(boundaries)) {
    if (!validate(cell_counts_, boundaries_))
        throw InputError("not a chain complex: boundary shapes disagree with cell counts or a composite "
                         "of consecutive boundaries is nonzero");
}

ChainComplex ChainComplex::with_zero_boundaries(std::vector<std::size_t> cell_counts) {
    std::vector<IntMatrix> boundaries;
    for (std::size_t k = 1; k < cell_counts.size(); ++k)
        boundaries.emplace_back(cell_counts[k - 1], cell_counts[k]);
    return ChainComplex(std::move(cell_counts), std::move(boundaries));
}

HomologyGroup homology(const ChainComplex& c, std::size_t k) {
    require_degree(c, k);
    const std::size_t rank_out = k == 0 ? 0 : lattice::rank(c.boundary(k));
    HomologyGroup h;
    h.degree = k;
    std::size_t rank_in = 0;
    if (k < c.top_degree()) {
        rank_in = lattice::rank(c.boundary(k + 1));
        h.torsion = nontrivial_factors(c.boundary(k + 1));
    }
    h.betti = c.cell_count(k) - rank_out - rank_in;
    return h;
}

CohomologyGroup cohomology(const ChainComplex& c, std::size_t k) {
    require_degree(c, k);
    // coboundary delta^k : C^k -> C^{k+1} is the transpose of d_{k+1}
    CohomologyGroup h;
    h.degree = k;
    std::size_t rank_out = 0;
    if (k < c.top_degree())
        rank_out = lattice::rank(c.boundary(k + 1).transposed());
    std::size_t rank_in = 0;
    if (k > 0) {
        const IntMatrix incoming = c.boundary(k).transposed();
        rank_in = lattice::rank(incoming);
        h.torsion = nontrivial_factors(incoming);
    }
    h.betti = c.cell_count(k) - rank_out - rank_in;
    return h;
}

long long euler_characteristic(const ChainComplex& c) {
    long long chi = 0;
    for (std::size_t k = 0; k <= c.top_degree(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(c.cell_count(k));
    return chi;
}

std::string describe(const CohomologyGroup& g) {
    std::ostringstream os;
    bool first = true;
    if (g.betti > 0 || g.torsion.empty()) {
        os << (g.betti == 0 ? std::string("0") : "Z^" + std::to_string(g.betti));
        first = false;
    }
    for (const auto& t : g.torsion) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    return os.str();
}

ChainComplex parse_chain_complex(std::string_view text) {
    auto lines = text::significant_lines(text, false);
    // keep "# boundary k" headers, drop every other comment
    std::vector<text::Line> kept;
    for (auto& line : lines) {
        if (line.content.front() == '#') {
            auto toks = text::tokens(line.content.substr(1));
            if (toks.size() == 2 && toks[0] == "boundary") {
                kept.push_back({line.number, "#boundary " + toks[1]});
            }
            continue;
        }
        const auto hash = line.content.find('#');
        if (hash != std::string::npos)
            line.content.resize(hash);
        kept.push_back(std::move(line));
    }
    std::size_t pos = 0;
    auto next = [&](const char* expected) -> const text::Line& {
        if (pos >= kept.size())
            throw ParseError(kept.empty() ? 1 : kept.back().number, std::string("unexpected end of input; expected ") +
                                                                        expected);
        return kept[pos++];
    };

    const auto& head = next("'degrees d'");
    const auto head_toks = text::tokens(head.content);
    if (head_toks.size() != 2 || head_toks[0] != "degrees")
        throw ParseError(head.number, "expected 'degrees d'");
    const std::size_t d = text::parse_count(head_toks[1], head.number);

    const auto& counts_line = next("cell counts");
    const auto count_toks = text::tokens(counts_line.content);
    if (count_toks.size() != d + 1)
        throw ParseError(counts_line.number, "expected " + std::to_string(d + 1) + " cell counts");
    std::vector<std::size_t> counts;
    for (const auto& tok : count_toks)
        counts.push_back(text::parse_count(tok, counts_line.number));

    std::vector<IntMatrix> boundaries;
    for (std::size_t k = 1; k <= d; ++k) {
        const auto& header = next("'# boundary k'");
        if (header.content != "#boundary " + std::to_string(k))
            throw ParseError(header.number, "expected '# boundary " + std::to_string(k) + "'");
        const auto& shape = next("matrix shape 'cols rows'");
        const auto shape_toks = text::tokens(shape.content);
        if (shape_toks.size() != 2)
            throw ParseError(shape.number, "expected matrix shape 'cols rows'");
        const std::size_t cols = text::parse_count(shape_toks[0], shape.number);
        const std::size_t rows = text::parse_count(shape_toks[1], shape.number);
        if (cols != counts[k] || rows != counts[k - 1])
            throw ParseError(shape.number, "boundary " + std::to_string(k) + " must be " +
                                               std::to_string(counts[k - 1]) + " x " + std::to_string(counts[k]));
        IntMatrix m(rows, cols);
        if (cols > 0) {
            for (std::size_t i = 0; i < rows; ++i) {
                const auto& row = next("matrix row");
                const auto toks = text::tokens(row.content);
                if (toks.size() != cols)
                    throw ParseError(row.number, "expected " + std::to_string(cols) + " entries");
                for (std::size_t j = 0; j < cols; ++j)
                    m(i, j) = text::parse_integer(toks[j], row.number);
            }
        }
        boundaries.push_back(std::move(m));
    }
    if (pos != kept.size())
        throw ParseError(kept[pos].number, "unexpected trailing content");
    if (!validate(counts, boundaries))
        throw InputError("not a chain complex: a composite of consecutive boundaries is nonzero");
    return ChainComplex(std::move(counts), std::move(boundaries));
}

std::string format_chain_complex(const ChainComplex& c) {
    std::ostringstream os;
    os << "degrees " << c.top_degree() << '\n';
    for (std::size_t k = 0; k <= c.top_degree(); ++k)
        os << (k ? " " : "") << c.cell_count(k);
    os << '\n';
    for (std::size_t k = 1; k <= c.top_degree(); ++k) {
        const auto& m = c.boundary(k);
        os << "# boundary " << k << '\n' << m.cols() << ' ' << m.rows() << '\n';
        if (m.cols() > 0)
            os << m;
    }
    return os.str();
}

} // namespace bredim::homology
