#include "bredim/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "bredim/citations.hpp"
#include "bredim/dims.hpp"
#include "bredim/errors.hpp"
#include "bredim/gog.hpp"
#include "bredim/homology.hpp"
#include "bredim/lattice.hpp"
#include "bredim/raag.hpp"

namespace bredim::cli {

namespace {

struct Entry {
    std::string text;                    // human-readable line
    std::vector<std::string> structured; // key=value lines
};

struct Block {
    std::string label;
    std::string body; // newline-terminated lines
};

class Report {
  public:
    void value(const std::string& key, const std::string& v) { entries_.push_back({key + " = " + v, {key + "=" + v}}); }
    void value(const std::string& key, std::size_t v) { value(key, std::to_string(v)); }
    void flag(const std::string& key, bool v) { value(key, std::string(v ? "true" : "false")); }
    void bound(const std::string& key, const dims::DimBound& b) {
        entries_.push_back({key + " " + b.to_string(),
                            {key + "_lower=" + std::to_string(b.lower()),
                             key + "_upper=" + (b.upper() ? std::to_string(*b.upper()) : std::string("inf"))}});
    }
    void block(std::string label, std::string body) { blocks_.push_back({std::move(label), std::move(body)}); }
    void cite(std::string_view c) { citations_.emplace_back(c); }
    void cite_all(const std::vector<std::string>& cs) { citations_.insert(citations_.end(), cs.begin(), cs.end()); }
    void note(std::string n) { notes_.push_back(std::move(n)); }
    void notes(const std::vector<std::string>& ns) { notes_.insert(notes_.end(), ns.begin(), ns.end()); }
    void tree(const dims::Derivation& d) {
        tree_text_ = d.render_text();
        tree_structured_ = d.render_structured();
    }

    void print(std::ostream& os, bool structured, const std::string& command, const std::string& digest) const {
        if (structured) {
            os << "command=" << command << '\n';
            if (!digest.empty())
                os << "input_digest=" << digest << '\n';
            for (const auto& e : entries_)
                for (const auto& line : e.structured)
                    os << line << '\n';
            for (const auto& b : blocks_) {
                os << b.label << ":\n";
                std::istringstream lines(b.body);
                for (std::string line; std::getline(lines, line);)
                    os << "  " << line << '\n';
            }
            for (const auto& c : citations_)
                os << "citation=" << c << '\n';
            for (const auto& n : notes_)
                os << "note=" << n << '\n';
            os << tree_structured_;
            return;
        }
        os << "# " << command << '\n';
        if (!digest.empty())
            os << "# input " << digest << '\n';
        for (const auto& b : blocks_)
            os << "# " << b.label << '\n' << b.body;
        for (const auto& e : entries_)
            os << e.text << '\n';
        for (const auto& c : citations_)
            os << "citation: " << c << '\n';
        for (const auto& n : notes_)
            os << "note: " << n << '\n';
        if (!tree_text_.empty())
            os << "derivation:\n" << tree_text_;
        if (!tree_structured_.empty() && !tree_text_.empty())
            os << tree_structured_;
    }

  private:
    std::vector<Entry> entries_;
    std::vector<Block> blocks_;
    std::vector<std::string> citations_;
    std::vector<std::string> notes_;
    std::string tree_text_;
    std::string tree_structured_;
};

class Inputs {
  public:
    explicit Inputs(std::istream& in) : in_(in) {}

    std::string read(const std::string& path) {
        std::string text;
        if (path == "-") {
            if (stdin_used_)
                throw InputError("standard input can be read only once");
            stdin_used_ = true;
            std::ostringstream ss;
            ss << in_.rdbuf();
            text = ss.str();
        } else {
            std::ifstream f(path, std::ios::binary);
            if (!f)
                throw InputError("cannot read '" + path + "'");
            std::ostringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        for (unsigned char c : text) {
            hash_ ^= c;
            hash_ *= 0x100000001b3ULL;
        }
        hash_ ^= 0xff; // separator between inputs
        hash_ *= 0x100000001b3ULL;
        used_ = true;
        return text;
    }

    std::string digest() const {
        if (!used_)
            return {};
        std::ostringstream os;
        os << "fnv1a64=" << std::hex << std::setw(16) << std::setfill('0') << hash_;
        return os.str();
    }

  private:
    std::istream& in_;
    bool stdin_used_ = false;
    bool used_ = false;
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::string join(const std::vector<Integer>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + v[i].get_str();
    return out;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

IntMatrix generator_matrix(const std::string& text) {
    const auto g = lattice::parse_generators(text);
    return IntMatrix::from_rows(g.ambient_dim, g.generators);
}

void add_dim_result(Report& r, const dims::DimResult& d) {
    r.bound("gd", d.bound);
    if (d.degenerate)
        r.flag("degenerate", true);
    r.cite_all(d.citations);
    r.notes(d.notes);
}

struct Options {
    std::string format = "text";
    std::vector<std::string> files;
    std::size_t n = 0, k = 0, d = 0;
    bool pure = false;
    bool tree = false;
    bool cohomology = false;
    std::string suite;
    std::optional<verify::Seed> seed;
};

} // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dimension formulas for classifying spaces with virtually abelian isotropy", "bredim"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));

    Inputs inputs(in);
    std::function<int(Report&)> action;
    auto file_args = [&](CLI::App* sub, std::size_t count) {
        if (count == 1)
            sub->add_option("file", o.files, "Input file, '-' for standard input")->expected(0, 1);
        else
            sub->add_option("files", o.files, "Input files")->expected(static_cast<int>(count))->required();
    };
    auto one_file = [&]() { return inputs.read(o.files.empty() ? std::string("-") : o.files.front()); };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::size_t files,
                    std::function<int(Report&)> body) {
        CLI::App* sub = parent->add_subcommand(name, help);
        if (files > 0)
            file_args(sub, files);
        sub->callback([&action, body] { action = body; });
        return sub;
    };

    // lattice ---------------------------------------------------------------
    CLI::App* lat = app.add_subcommand("lattice", "Sublattices of Z^n");
    lat->require_subcommand(1);
    leaf(lat, "hnf", "Row Hermite normal form of a generator matrix", 1, [&](Report& r) {
        const auto h = lattice::hermite_normal_form(generator_matrix(one_file()));
        r.block("hnf", lattice::format_matrix(h.hnf));
        r.block("transform", lattice::format_matrix(h.transform));
        r.value("rank", lattice::rank(h.hnf));
        return kOk;
    });
    leaf(lat, "snf", "Smith normal form of a generator matrix", 1, [&](Report& r) {
        const auto s = lattice::smith_normal_form(generator_matrix(one_file()));
        r.block("diagonal", lattice::format_matrix(s.diagonal));
        r.block("left", lattice::format_matrix(s.left));
        r.block("right", lattice::format_matrix(s.right));
        r.value("invariant_factors", join(lattice::invariant_factors(s.diagonal)));
        return kOk;
    });
    leaf(lat, "saturate", "Saturation of a sublattice", 1, [&](Report& r) {
        const auto l = lattice::parse_lattice(one_file());
        const auto s = lattice::saturation(l);
        r.block("saturation", lattice::format_lattice(s));
        r.value("rank", s.rank());
        r.value("index", lattice::index(l, s).to_string());
        return kOk;
    });
    leaf(lat, "index", "Index [M : L] for L contained in M", 2, [&](Report& r) {
        const auto l = lattice::parse_lattice(inputs.read(o.files[0]));
        const auto m = lattice::parse_lattice(inputs.read(o.files[1]));
        r.value("index", lattice::index(l, m).to_string());
        return kOk;
    });
    leaf(lat, "commensurable", "Whether two sublattices are commensurable", 2, [&](Report& r) {
        const auto a = lattice::parse_lattice(inputs.read(o.files[0]));
        const auto b = lattice::parse_lattice(inputs.read(o.files[1]));
        r.flag("commensurable", lattice::commensurable(a, b));
        return kOk;
    });
    leaf(lat, "complement", "Direct complement of a saturated sublattice", 1, [&](Report& r) {
        const auto l = lattice::parse_lattice(one_file());
        const auto c = lattice::direct_complement(l);
        r.block("complement", lattice::format_lattice(c));
        r.value("rank", c.rank());
        return kOk;
    });
    leaf(lat, "map-auto", "Unimodular automorphism of Z^n taking L onto T", 2, [&](Report& r) {
        const auto l = lattice::parse_lattice(inputs.read(o.files[0]));
        const auto t = lattice::parse_lattice(inputs.read(o.files[1]));
        const auto a = lattice::mapping_automorphism(l, t);
        std::ostringstream body;
        body << a;
        r.block("automorphism", body.str());
        r.value("det", determinant(a).get_str());
        r.flag("maps_onto", lattice::image(a, l) == t);
        return kOk;
    });

    // raag ------------------------------------------------------------------
    CLI::App* ra = app.add_subcommand("raag", "Right-angled Artin groups");
    ra->require_subcommand(1);
    leaf(ra, "cliques", "Clique table of the defining graph", 1, [&](Report& r) {
        const auto g = raag::parse_graph(one_file());
        const auto t = raag::cliques(g);
        std::vector<std::size_t> counts;
        for (const auto& level : t.by_size)
            counts.push_back(level.size());
        std::ostringstream body;
        for (const auto& c : raag::maximal_cliques(g))
            body << join(c) << '\n';
        r.block("maximal cliques", body.str());
        r.value("clique_number", t.max_size());
        r.value("clique_counts", join(counts));
        return kOk;
    });
    leaf(ra, "cd", "Cohomological dimension of A_Gamma", 1, [&](Report& r) {
        const auto g = raag::parse_graph(one_file());
        r.value("cd", raag::cd_raag(g));
        r.value("torus_rank", raag::embedded_torus_rank(g));
        r.cite(cite::kRaagCd);
        r.cite(cite::kEmbeddedTorus);
        return kOk;
    });
    leaf(ra, "gd", "gd_{F_k}(A_Gamma)", 1, [&](Report& r) {
        const auto g = raag::parse_graph(one_file());
        add_dim_result(r, raag::gd_fk_raag(g, o.k));
        return kOk;
    })->add_option("--k", o.k, "Family index k")->required();
    leaf(ra, "salvetti", "Cells (and cohomology) of the Salvetti complex", 1, [&](Report& r) {
        const auto g = raag::parse_graph(one_file());
        const auto s = raag::salvetti_complex(g);
        r.value("dimension", s.top_degree());
        r.value("cell_counts", join(s.cell_counts()));
        if (o.cohomology) {
            for (std::size_t k = 0; k <= s.top_degree(); ++k)
                r.value("H^" + std::to_string(k), homology::describe(homology::cohomology(s, k)));
            r.cite(cite::kSalvettiCells);
        }
        return kOk;
    })->add_flag("--cohomology", o.cohomology, "Also report integral cohomology");

    // homology --------------------------------------------------------------
    leaf(&app, "homology", "Integral homology and cohomology of a chain complex", 1, [&](Report& r) {
        const auto c = homology::parse_chain_complex(one_file());
        r.value("euler_characteristic", std::to_string(homology::euler_characteristic(c)));
        for (std::size_t k = 0; k <= c.top_degree(); ++k) {
            r.value("H_" + std::to_string(k), homology::describe(homology::homology(c, k)));
            if (o.cohomology)
                r.value("H^" + std::to_string(k), homology::describe(homology::cohomology(c, k)));
        }
        return kOk;
    })->add_flag("--cohomology", o.cohomology, "Also report cohomology");

    // dims ------------------------------------------------------------------
    CLI::App* dm = app.add_subcommand("dims", "Closed-form dimension bounds");
    dm->require_subcommand(1);
    auto nk = [&](CLI::App* sub, const char* n_name) {
        sub->add_option(n_name, std::string(n_name) == "--d" ? o.d : o.n, "Group parameter")->required();
        sub->add_option("--k", o.k, "Family index k")->required();
        return sub;
    };
    nk(leaf(dm, "vab", "Virtually Z^n groups", 0,
            [&](Report& r) {
                add_dim_result(r, dims::virtually_abelian_gd(o.n, o.k));
                return kOk;
            }),
       "--n");
    nk(leaf(dm, "braid", "Braid groups B_n and pure braid groups P_n", 0,
            [&](Report& r) {
                add_dim_result(r, dims::braid_gd(o.n, o.k, o.pure));
                return kOk;
            }),
       "--n")
        ->add_flag("--pure", o.pure, "Pure braid group");
    nk(leaf(dm, "out-fn", "Lower bound for Out(F_n)", 0,
            [&](Report& r) {
                add_dim_result(r, dims::out_fn_lower(o.n, o.k));
                return kOk;
            }),
       "--n");
    nk(leaf(dm, "out-diamonds", "Lower bound for Out of the diamond-string RAAG", 0,
            [&](Report& r) {
                add_dim_result(r, dims::out_diamonds_lower(o.d, o.k));
                return kOk;
            }),
       "--d");
    nk(leaf(dm, "derive-zn", "Replay the induction bounding gd_{F_k}(Z^n)", 0,
            [&](Report& r) {
                const auto d = dims::derive_zn_upper(o.n, o.k);
                r.bound("gd", d.bound);
                r.value("induction_levels", d.induction_levels);
                r.value("nodes", d.derivation->node_count());
                r.flag("rechecked", d.derivation->recheck());
                r.cite(d.derivation->citation());
                if (o.tree)
                    r.tree(*d.derivation);
                return kOk;
            }),
       "--n")
        ->add_flag("--tree", o.tree, "Print the derivation");

    // gog -------------------------------------------------------------------
    CLI::App* gg = app.add_subcommand("gog", "Graphs of groups with virtually abelian vertex groups");
    gg->require_subcommand(1);
    auto census_block = [](const gog::CellCensus& c) {
        std::ostringstream body;
        for (const auto& cell : c.cells)
            body << "dim=" << cell.dim << " location=" << gog::to_string(cell.location)
                 << " stabilizer=" << gog::to_string(cell.stabilizer) << " label=\"" << cell.label << '"'
                 << " count=" << cell.count << " stabilizer_gd=\"" << cell.stabilizer_gd.to_string() << '"'
                 << " term=\"" << cell.term.to_string() << "\"\n";
        return body.str();
    };
    leaf(gg, "gd", "gd_{F_k} of the fundamental group", 1, [&](Report& r) {
        const auto y = gog::parse_gog(one_file());
        const auto g = gog::gog_gd(y, o.k);
        r.bound("gd", g.bound);
        r.flag("exact", g.exact);
        r.value("m", gog::max_vertex_rank(y));
        r.cite_all(g.citations);
        r.notes(g.notes);
        return kOk;
    })->add_option("--k", o.k, "Family index k")->required();
    leaf(gg, "bounds", "Two-sided Bass-Serre bounds", 1, [&](Report& r) {
        const auto y = gog::parse_gog(one_file());
        const auto b = gog::bass_serre_bounds(y, o.k);
        r.bound("gd", b.bound);
        r.value("m", gog::max_vertex_rank(y));
        r.block("census", census_block(b.census));
        r.cite_all(b.citations);
        r.notes(b.notes);
        return kOk;
    })->add_option("--k", o.k, "Family index k")->required();
    leaf(gg, "census", "Cells of the coned-off Bass-Serre tree", 1, [&](Report& r) {
        const auto y = gog::parse_gog(one_file());
        const auto b = gog::bass_serre_bounds(y, o.k);
        r.block("census", census_block(b.census));
        r.value("cell_classes", b.census.cells.size());
        r.cite(cite::kConedOffTree);
        r.cite(cite::kCellStabilizer);
        return kOk;
    })->add_option("--k", o.k, "Family index k")->required();

    // verify ----------------------------------------------------------------
    CLI::App* ver = app.add_subcommand("verify", "Run the oracle cross-check suites");
    ver->add_option("suite", o.suite, "lattice, raag, homology, dims or all")
        ->required()
        ->check(CLI::IsMember({"lattice", "raag", "homology", "dims", "all"}));
    ver->add_option("--seed", o.seed, "Random seed (default: BREDIM_SEED or built-in)");
    ver->callback([&] {
        action = [&](Report& r) {
            const verify::Seed seed = o.seed.value_or(verify::seed_from_env());
            auto results = verify::run_suite(o.suite, seed);
            if (o.suite == "all")
                results.push_back(negative_controls());
            bool ok = true;
            std::ostringstream body;
            for (const auto& c : results) {
                ok = ok && c.passed;
                body << "criterion " << c.id << " (" << c.name << "): " << (c.passed ? "pass" : "FAIL") << ", "
                     << c.checked << " checks; " << c.detail << '\n';
            }
            r.block("results", body.str());
            r.value("seed", std::to_string(seed));
            r.value("verify", std::string(ok ? "pass" : "fail"));
            return ok ? kOk : kVerifyFailed;
        };
    });

    std::string command = "bredim";
    for (const auto& a : args)
        command += " " + a;

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }
    if (!action) {
        err << app.help();
        return kUsage;
    }

    try {
        Report report;
        const int status = action(report);
        report.print(out, o.format == "structured", command, inputs.digest());
        return status;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const OutOfRangeError& e) {
        err << "out of range: " << e.what() << '\n';
        return kOutOfRange;
    }
}

verify::CriterionResult negative_controls() {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    verify::CriterionResult result{9, "negative controls", true, 0, 0, {}};
    auto expect = [&](std::vector<std::string> args, const std::string& input, int status, const std::string& needle) {
        std::istringstream in(input);
        std::ostringstream out, err;
        const int got = run(args, in, out, err);
        ++result.checked;
        if (got != status || err.str().find(needle) == std::string::npos) {
            if (result.passed) {
                std::string cmd;
                for (const auto& a : args)
                    cmd += " " + a;
                result.detail = "'" + cmd.substr(1) + "' exited " + std::to_string(got) + " (expected " +
                                std::to_string(status) + ") with '" + err.str() + "'";
            }
            result.passed = false;
        }
    };
    auto expect_throw = [&](auto&& f, auto tag, const std::string& what) {
        ++result.checked;
        try {
            f();
        } catch (const decltype(tag)&) {
            return;
        } catch (...) {
        }
        if (result.passed)
            result.detail = what;
        result.passed = false;
    };

    // loop edges
    expect({"raag", "cd", "-"}, "2 1\n0 0\n", kInputError, "line 2: loop");
    expect({"raag", "cliques", "-"}, "p edge 3 1\ne 2 2\n", kInputError, "loop");
    expect_throw([] { raag::parse_graph("2 1\n0 0"); }, ParseError(0, ""), "loop edge must raise ParseError");
    expect_throw([] { raag::SimpleGraph(3).add_edge(1, 1); }, InputError(""), "add_edge loop must raise InputError");
    // rank-violating graph-of-groups edges
    const std::string bad_gog = "vertex A rank=2\nvertex B rank=2\nedge A B rank=4\nacylindrical = true\n";
    expect({"gog", "gd", "--k", "1", "-"}, bad_gog, kInputError, "line 3");
    expect({"gog", "bounds", "--k", "1", "-"}, bad_gog, kInputError, "cannot embed");
    expect_throw([&] { gog::parse_gog(bad_gog); }, ParseError(0, ""), "rank violation must raise ParseError");
    // out-of-range k
    expect({"dims", "vab", "--n", "3", "--k", "3"}, "", kOutOfRange, "0 <= k < n");
    expect({"dims", "braid", "--n", "4", "--k", "3"}, "", kOutOfRange, "k < n - 1");
    expect({"raag", "gd", "--k", "3", "-"}, "3 3\n0 1\n0 2\n1 2\n", kOutOfRange, "cd(A_Gamma) = 3");
    expect({"dims", "derive-zn", "--n", "2", "--k", "2"}, "", kOutOfRange, "0 <= k < n");
    expect_throw([] { dims::virtually_abelian_gd(2, 2); }, OutOfRangeError(""), "k = n must raise OutOfRangeError");
    expect_throw([] { dims::braid_gd(5, 4, false); }, OutOfRangeError(""), "braid k = n - 1 must raise OutOfRangeError");
    // usage
    expect({"lattice", "frobnicate"}, "", kUsage, "usage");
    expect({}, "", kUsage, "usage");

    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (result.passed)
        result.detail = "loop edges, rank-violating edges and out-of-range k rejected with exit codes 2/3";
    return result;
}

} // namespace bredim::cli
