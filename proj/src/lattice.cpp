#include "bredim/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bredim/errors.hpp"
#include "text_util.hpp"

namespace bredim::lattice {

namespace {

// Clears h(b, col) against the pivot h(a, col) by a unimodular 2x2 row
// operation, mirrored on `track`.
void eliminate_rows(IntMatrix& h, IntMatrix& track, std::size_t a, std::size_t b, std::size_t col) {
    const Integer& pa = h(a, col);
    const Integer& pb = h(b, col);
    if (sgn(pb) == 0)
        return;
    if (sgn(pa) == 0) {
        h.swap_rows(a, b);
        track.swap_rows(a, b);
        return;
    }
    if (mpz_divisible_p(pb.get_mpz_t(), pa.get_mpz_t())) {
        Integer q = -(pb / pa);
        h.add_row_multiple(b, a, q);
        track.add_row_multiple(b, a, q);
        return;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
    Integer u = -(pb / g);
    Integer v = pa / g;
    h.combine_rows(a, b, s, t, u, v);
    track.combine_rows(a, b, s, t, u, v);
}

void eliminate_cols(IntMatrix& d, IntMatrix& track, std::size_t a, std::size_t b, std::size_t row) {
    const Integer& pa = d(row, a);
    const Integer& pb = d(row, b);
    if (sgn(pb) == 0)
        return;
    if (sgn(pa) == 0) {
        d.swap_cols(a, b);
        track.swap_cols(a, b);
        return;
    }
    if (mpz_divisible_p(pb.get_mpz_t(), pa.get_mpz_t())) {
        Integer q = -(pb / pa);
        d.add_col_multiple(b, a, q);
        track.add_col_multiple(b, a, q);
        return;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
    Integer u = -(pb / g);
    Integer v = pa / g;
    d.combine_cols(a, b, s, t, u, v);
    track.combine_cols(a, b, s, t, u, v);
}

std::size_t leading_column(const IntMatrix& m, std::size_t row) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (sgn(m(row, j)) != 0)
            return j;
    return m.cols();
}

void require_same_ambient(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InputError("ambient dimension mismatch: " + std::to_string(a.ambient_dim()) + " vs " +
                         std::to_string(b.ambient_dim()));
}

void require_maximal(const Sublattice& l, const char* what) {
    if (l.rank() > 0 && !is_maximal(l))
        throw InputError(std::string(what) + ": input lattice must be a direct summand (saturated)");
}

} // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t n = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(r);
    std::size_t p = 0;
    for (std::size_t j = 0; j < n && p < r; ++j) {
        for (std::size_t i = p + 1; i < r; ++i)
            eliminate_rows(h, u, p, i, j);
        if (sgn(h(p, j)) == 0)
            continue;
        if (sgn(h(p, j)) < 0) {
            h.negate_row(p);
            u.negate_row(p);
        }
        for (std::size_t i = 0; i < p; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(p, j).get_mpz_t());
            if (sgn(q) != 0) {
                h.add_row_multiple(i, p, -q);
                u.add_row_multiple(i, p, -q);
            }
        }
        ++p;
    }
    return {std::move(h), std::move(u)};
}

SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    IntMatrix d = m;
    IntMatrix s = IntMatrix::identity(r);
    IntMatrix t = IntMatrix::identity(c);

    for (std::size_t k = 0; k < std::min(r, c); ++k) {
        // smallest nonzero entry of the trailing block becomes the pivot
        std::size_t pi = r, pj = c;
        for (std::size_t i = k; i < r; ++i)
            for (std::size_t j = k; j < c; ++j)
                if (sgn(d(i, j)) != 0 && (pi == r || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi == r)
            break;
        d.swap_rows(k, pi);
        s.swap_rows(k, pi);
        d.swap_cols(k, pj);
        t.swap_cols(k, pj);

        for (;;) {
            for (std::size_t i = k + 1; i < r; ++i)
                eliminate_rows(d, s, k, i, k);
            for (std::size_t j = k + 1; j < c; ++j)
                eliminate_cols(d, t, k, j, k);
            bool column_clear = true;
            for (std::size_t i = k + 1; i < r && column_clear; ++i)
                column_clear = sgn(d(i, k)) == 0;
            if (!column_clear)
                continue;
            // the pivot must divide the whole trailing block
            std::size_t bad = r;
            for (std::size_t i = k + 1; i < r && bad == r; ++i)
                for (std::size_t j = k + 1; j < c; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(k, k).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == r)
                break;
            d.add_row_multiple(k, bad, 1);
            s.add_row_multiple(k, bad, 1);
        }
        if (sgn(d(k, k)) < 0) {
            d.negate_row(k);
            s.negate_row(k);
        }
    }
    return {std::move(d), std::move(s), std::move(t)};
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
    const auto snf = smith_normal_form(m);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (sgn(snf.diagonal(i, i)) != 0)
            out.push_back(snf.diagonal(i, i));
    return out;
}

std::size_t rank(const IntMatrix& m) {
    const auto h = hermite_normal_form(m).hnf;
    std::size_t r = 0;
    while (r < h.rows() && !h.is_row_zero(r))
        ++r;
    return r;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw InputError("inverse of a non-square matrix");
    auto [h, u] = hermite_normal_form(m);
    if (!(h == IntMatrix::identity(m.rows())))
        throw InputError("matrix is not unimodular");
    return u;
}

// ---------------------------------------------------------------------------

Sublattice::Sublattice(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Sublattice::Sublattice(std::size_t ambient_dim, IntMatrix canonical_basis)
    : ambient_dim_(ambient_dim), basis_(std::move(canonical_basis)) {}

Sublattice Sublattice::from_generators(std::size_t ambient_dim, std::span<const IntVector> generators) {
    return from_generators(ambient_dim, IntMatrix::from_rows(ambient_dim, generators));
}

Sublattice Sublattice::from_generators(std::size_t ambient_dim, const IntMatrix& generator_rows) {
    if (generator_rows.rows() != 0 && generator_rows.cols() != ambient_dim)
        throw InputError("dimension mismatch: generators of length " + std::to_string(generator_rows.cols()) +
                         " in ambient dimension " + std::to_string(ambient_dim));
    if (generator_rows.rows() == 0)
        return Sublattice(ambient_dim);
    const auto h = hermite_normal_form(generator_rows).hnf;
    std::size_t r = 0;
    while (r < h.rows() && !h.is_row_zero(r))
        ++r;
    return Sublattice(ambient_dim, h.row_block(0, r));
}

Sublattice Sublattice::full(std::size_t ambient_dim) {
    return Sublattice(ambient_dim, IntMatrix::identity(ambient_dim));
}

std::optional<IntVector> Sublattice::coordinates(const IntVector& v) const {
    if (v.size() != ambient_dim_)
        throw InputError("dimension mismatch: vector of length " + std::to_string(v.size()) +
                         " in ambient dimension " + std::to_string(ambient_dim_));
    IntVector rest = v;
    IntVector coords(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        const std::size_t p = leading_column(basis_, i);
        const Integer& pivot = basis_(i, p);
        if (!mpz_divisible_p(rest[p].get_mpz_t(), pivot.get_mpz_t()))
            return std::nullopt;
        coords[i] = rest[p] / pivot;
        if (sgn(coords[i]) != 0)
            for (std::size_t j = p; j < ambient_dim_; ++j)
                rest[j] -= coords[i] * basis_(i, j);
    }
    for (const auto& x : rest)
        if (sgn(x) != 0)
            return std::nullopt;
    return coords;
}

bool Sublattice::contains(const Sublattice& other) const {
    require_same_ambient(*this, other);
    for (std::size_t i = 0; i < other.rank(); ++i)
        if (!contains(other.basis_.row(i)))
            return false;
    return true;
}

std::string IndexResult::to_string() const {
    return value ? value->get_str() : std::string("infinite");
}

IndexResult index(const Sublattice& inner, const Sublattice& outer) {
    require_same_ambient(inner, outer);
    if (!outer.contains(inner))
        throw InputError("index: the first lattice is not contained in the second");
    if (inner.rank() != outer.rank())
        return IndexResult::infinite();
    const std::size_t k = inner.rank();
    IntMatrix coords(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto c = *outer.coordinates(inner.basis().row(i));
        for (std::size_t j = 0; j < k; ++j)
            coords(i, j) = c[j];
    }
    Integer det = determinant(coords);
    return IndexResult::finite(abs(det));
}

Sublattice intersect(const Sublattice& a, const Sublattice& b) {
    require_same_ambient(a, b);
    const std::size_t n = a.ambient_dim();
    if (a.rank() == 0 || b.rank() == 0)
        return Sublattice(n);
    const IntMatrix stacked = a.basis().stacked(b.basis());
    const auto [h, u] = hermite_normal_form(stacked);
    std::size_t r = 0;
    while (r < h.rows() && !h.is_row_zero(r))
        ++r;
    // rows r.. of the transform span the left kernel of the stacked basis;
    // their first rank(a) coordinates give the common elements.
    IntMatrix common(stacked.rows() - r, n);
    for (std::size_t i = r; i < stacked.rows(); ++i) {
        IntVector coeff(a.rank());
        for (std::size_t j = 0; j < a.rank(); ++j)
            coeff[j] = u(i, j);
        const IntVector v = coeff * a.basis();
        for (std::size_t j = 0; j < n; ++j)
            common(i - r, j) = v[j];
    }
    return Sublattice::from_generators(n, common);
}

Sublattice sum(const Sublattice& a, const Sublattice& b) {
    require_same_ambient(a, b);
    return Sublattice::from_generators(a.ambient_dim(), a.basis().stacked(b.basis()));
}

bool commensurable(const Sublattice& a, const Sublattice& b) {
    require_same_ambient(a, b);
    return a.rank() == b.rank() && intersect(a, b).rank() == a.rank();
}

Sublattice saturation(const Sublattice& l) {
#ifdef BREDIM_INJECT_FAULT
    return l;
#endif
    if (l.rank() == 0)
        return l;
    // S * B * T = D  =>  B = S^-1 * D * T^-1, so the rational span of B is
    // spanned by the first rank rows of T^-1, which extend to a basis of Z^n.
    const auto snf = smith_normal_form(l.basis());
    const IntMatrix t_inv = unimodular_inverse(snf.right);
    return Sublattice::from_generators(l.ambient_dim(), t_inv.row_block(0, l.rank()));
}

bool is_maximal(const Sublattice& l) {
    if (l.rank() == 0)
        throw InputError("maximality is only defined for sublattices of rank >= 1");
    const auto factors = invariant_factors(l.basis());
    return std::all_of(factors.begin(), factors.end(), [](const Integer& d) { return d == 1; });
}

Sublattice direct_complement(const Sublattice& l) {
    require_maximal(l, "direct complement");
    const std::size_t n = l.ambient_dim();
    const std::size_t k = l.rank();
    if (k == 0)
        return Sublattice::from_generators(n, IntMatrix::identity(n));
    // U * B^T = [C; 0] with C unimodular; the last n - k columns of U^-1
    // complete the basis of L to a basis of Z^n.
    const auto [h, u] = hermite_normal_form(l.basis().transposed());
    const IntMatrix w = unimodular_inverse(u);
    IntMatrix rest(n - k, n);
    for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rest(i, j) = w(j, k + i);
    return Sublattice::from_generators(n, rest);
}

IntMatrix mapping_automorphism(const Sublattice& l, const Sublattice& t) {
    require_same_ambient(l, t);
    if (l.rank() != t.rank())
        throw InputError("mapping automorphism: rank mismatch (" + std::to_string(l.rank()) + " vs " +
                         std::to_string(t.rank()) + ")");
    require_maximal(l, "mapping automorphism");
    require_maximal(t, "mapping automorphism");
    // columns of x_l: basis of L followed by a basis of its complement
    const IntMatrix x_l = l.basis().stacked(direct_complement(l).basis()).transposed();
    const IntMatrix x_t = t.basis().stacked(direct_complement(t).basis()).transposed();
    IntMatrix a = x_t * unimodular_inverse(x_l);
    if (abs(determinant(a)) != 1 || !(image(a, l) == t))
        throw std::logic_error("mapping automorphism failed its postcondition");
    return a;
}

Sublattice image(const IntMatrix& a, const Sublattice& l) {
    if (a.rows() != l.ambient_dim() || a.cols() != l.ambient_dim())
        throw InputError("automorphism size does not match the ambient dimension");
    return Sublattice::from_generators(l.ambient_dim(), l.basis() * a.transposed());
}

// ---------------------------------------------------------------------------

GeneratorList parse_generators(std::string_view text) {
    const auto lines = text::significant_lines(text);
    if (lines.empty())
        throw ParseError(1, "empty lattice description; expected header 'n r'");
    const auto header = text::tokens(lines[0].content);
    if (header.size() != 2)
        throw ParseError(lines[0].number, "expected header 'n r'");
    GeneratorList out;
    out.ambient_dim = text::parse_count(header[0], lines[0].number);
    const std::size_t count = text::parse_count(header[1], lines[0].number);
    if (lines.size() - 1 < count)
        throw ParseError(lines.back().number, "expected " + std::to_string(count) + " generator rows, found " +
                                                  std::to_string(lines.size() - 1));
    if (lines.size() - 1 > count)
        throw ParseError(lines[count + 1].number, "unexpected extra row");
    for (std::size_t i = 1; i <= count; ++i) {
        const auto toks = text::tokens(lines[i].content);
        if (toks.size() != out.ambient_dim)
            throw ParseError(lines[i].number, "dimension mismatch: expected " + std::to_string(out.ambient_dim) +
                                                  " entries, found " + std::to_string(toks.size()));
        IntVector v;
        v.reserve(toks.size());
        for (const auto& tok : toks)
            v.push_back(text::parse_integer(tok, lines[i].number));
        out.generators.push_back(std::move(v));
    }
    return out;
}

Sublattice parse_lattice(std::string_view text) {
    const auto g = parse_generators(text);
    return Sublattice::from_generators(g.ambient_dim, g.generators);
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream os;
    os << m.cols() << ' ' << m.rows() << '\n' << m;
    return os.str();
}

std::string format_lattice(const Sublattice& l) {
    std::ostringstream os;
    os << l.ambient_dim() << ' ' << l.rank() << '\n' << l.basis();
    return os.str();
}

} // namespace bredim::lattice
