#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "latcoh/json_io.hpp"
#include "latcoh/path.hpp"
#include "latcoh/reduce.hpp"
#include "latcoh/weightfn.hpp"

namespace {

using namespace latcoh;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    expect(in.good(), Err::BadInput, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Point parse_point(const std::string& text) {
    Point p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            p.push_back(std::stoll(item, &used));
            expect(used == item.size(), Err::BadInput, "bad coordinate list: " + text);
        } catch (const Error&) {
            throw;
        } catch (...) {
            fail(Err::BadInput, "bad coordinate list: " + text);
        }
    }
    expect(!p.empty(), Err::BadInput, "empty coordinate list");
    return p;
}

std::vector<int> resolve_ids(const PlumbingGraph& g, const std::vector<std::string>& ids) {
    std::vector<int> out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back(g.index_of(id));
    return out;
}

// Options shared across subcommands; each leaf reads only what it declared.
struct Shared {
    std::string file;
    std::string site_a;
    std::string site_b;
    std::string c;
    std::vector<std::string> bad;
    std::string dual = "sym";
    std::string h1;
    bool dot = false;
    bool json = false;
    bool module = false;
    bool stability = false;
    std::optional<int64_t> lmax;
    int64_t cap = 1024;
    std::string truncate;
    std::string v0;
    std::string dir = "fixtures";
    bool properties = false;
    uint64_t seed = 1234;
};

std::optional<Cycle> parse_bound(const Shared& s, size_t rank) {
    if (s.c.empty()) return std::nullopt;
    Point p = parse_point(s.c);
    expect(p.size() == rank, Err::ShapeMismatch, "--c length does not match the rectangle rank");
    return p;
}

// The weight table a `top` command works on: full by default, reduced when
// --bad names a vertex subset. Returns the axis ids alongside.
WeightTable top_table(const Shared& s, const PlumbingGraph& g, std::vector<std::string>* axis_ids,
                      int extra = 0) {
    std::vector<int> bar = resolve_ids(g, s.bad);
    const size_t rank = s.bad.empty() ? static_cast<size_t>(g.size()) : bar.size();
    std::optional<Cycle> bound = parse_bound(s, rank);
    if (extra != 0) {
        if (!bound) {
            Cycle full = default_bound(g);
            if (s.bad.empty()) {
                bound = full;
            } else {
                Cycle restricted;
                for (int v : bar) restricted.push_back(full[static_cast<size_t>(v)]);
                bound = restricted;
            }
        }
        for (auto& x : *bound) x = checked_add(x, extra);
    }
    if (axis_ids) {
        axis_ids->clear();
        if (s.bad.empty())
            for (const Vertex& v : g.vertices()) axis_ids->push_back(v.id);
        else
            axis_ids->assign(s.bad.begin(), s.bad.end());
    }
    if (s.bad.empty()) return top_weight(g, std::move(bound));
    return reduced_top_weight(g, bar, std::move(bound));
}

DualTable dual_of(const Shared& s, const HilbertTable& h) {
    if (s.dual == "sym") return symmetric_dual(h);
    return read_dual(read_file(s.dual));
}

// ---------------------------------------------------------------------------
// Property smoke suites for `verify --properties`.

struct PropertyRunner {
    std::mt19937_64 rng;
    int64_t cases = 0;

    explicit PropertyRunner(uint64_t seed) : rng(seed) {}

    int64_t ri(int64_t lo, int64_t hi) {
        return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
    }

    HilbertTable random_hilbert(int max_rank, int64_t cmax, int64_t step) {
        int rank = static_cast<int>(ri(1, max_rank));
        Point c(static_cast<size_t>(rank));
        for (auto& x : c) x = ri(1, cmax);
        Rect r(Point(static_cast<size_t>(rank), 0), c);
        Table t(r);
        Point p = r.lo();
        while (true) {
            int64_t base = 0;
            bool origin = true;
            for (int a = 0; a < rank; ++a)
                if (p[static_cast<size_t>(a)] > r.lo()[static_cast<size_t>(a)]) {
                    origin = false;
                    Point q = p;
                    --q[static_cast<size_t>(a)];
                    base = std::max(base, t.at(q));
                }
            t.at(p) = origin ? 0 : base + ri(0, step);
            if (!r.next(p)) break;
        }
        return make_hilbert(std::move(t));
    }

    WeightTable random_weight(int max_rank, int64_t cmax) {
        HilbertTable h = random_hilbert(max_rank, cmax, 2);
        DualTable d = symmetric_dual(h);
        return combinatorial_weight(h, d);
    }

    PlumbingGraph random_negdef_tree(int max_vertices) {
        while (true) {
            int n = static_cast<int>(ri(2, max_vertices));
            std::vector<Vertex> vs;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i) {
                vs.push_back(Vertex{"v" + std::to_string(i), -ri(2, 5), 0});
                if (i > 0) edges.emplace_back(static_cast<int>(ri(0, i - 1)), i);
            }
            PlumbingGraph g(std::move(vs), std::move(edges));
            if (check_graph(g).negative_definite) return g;
        }
    }

    static int64_t rect_cells(const Cycle& bound) {
        int64_t total = 1;
        for (int64_t c : bound) {
            total = checked_mul(total, c + 1);
            if (total > 200000) return total;
        }
        return total;
    }

    void suite_eu_identity(int n) {
        for (int k = 0; k < n; ++k) {
            euler_report(random_weight(3, 4)); // asserts the cube identity internally
            ++cases;
        }
    }

    void suite_root_module(int n) {
        for (int k = 0; k < n; ++k) {
            WeightTable w = random_weight(2, 6);
            UModule um = u_module(w);
            UModule rm = module_of_root(graded_root_of(w));
            expect(rm.parts[0] == um.parts[0] && rm.min_w == um.min_w, Err::Internal,
                   "graded-root module disagrees with q0");
            ++cases;
        }
    }

    void suite_pathmin(int n) {
        for (int k = 0; k < n; ++k) {
            WeightTable w = random_weight(2, 4);
            const Rect& r = w.t.rect();
            std::vector<int> dirs;
            for (int a = 0; a < r.rank(); ++a)
                for (int64_t i = r.lo()[static_cast<size_t>(a)];
                     i < r.hi()[static_cast<size_t>(a)]; ++i)
                    dirs.push_back(a);
            std::sort(dirs.begin(), dirs.end());
            int64_t lowest = std::numeric_limits<int64_t>::max();
            do {
                std::vector<Point> pts{r.lo()};
                for (int d : dirs) {
                    Point q = pts.back();
                    ++q[static_cast<size_t>(d)];
                    pts.push_back(q);
                }
                PathEu pe = eu_path(w, make_path(pts));
                // the weight starts at zero, so every increasing path is >= 0
                expect(pe.eu >= 0, Err::Internal, "negative path eu");
                expect(pe.eu == eu_of(pe.module), Err::Internal,
                       "path eu disagrees with its module");
                lowest = std::min(lowest, pe.eu);
            } while (std::next_permutation(dirs.begin(), dirs.end()));
            expect(min_eu_increasing(w).value == lowest, Err::Internal,
                   "minimal path eu disagrees with enumeration");
            ++cases;
        }
    }

    void suite_chi_symmetry(int n) {
        for (int k = 0; k < n; ++k) {
            PlumbingGraph g = random_negdef_tree(6);
            QCycle zk = canonical_cycle(g);
            QCycle l(static_cast<size_t>(g.size()));
            QCycle dual(static_cast<size_t>(g.size()));
            for (int v = 0; v < g.size(); ++v) {
                l[static_cast<size_t>(v)] = Rational(ri(-2, 4));
                dual[static_cast<size_t>(v)] = zk[static_cast<size_t>(v)] - l[static_cast<size_t>(v)];
            }
            expect(chi_q(g, l) == chi_q(g, dual), Err::Internal,
                   "chi not symmetric about the canonical cycle");
            ++cases;
        }
    }

    void suite_blowup(int n) {
        int done = 0;
        while (done < n) {
            PlumbingGraph g = random_negdef_tree(5);
            if (rect_cells(default_bound(g)) > 20000) continue;
            UModule before = u_module(top_weight(g));
            BlowUpResult b = [&] {
                if (!g.edges().empty() && ri(0, 1) == 1) {
                    auto [u, v] = g.edges()[static_cast<size_t>(
                        ri(0, static_cast<int64_t>(g.edges().size()) - 1))];
                    return blow_up(g, g.vertices()[static_cast<size_t>(u)].id,
                                   g.vertices()[static_cast<size_t>(v)].id);
                }
                return blow_up(g, g.vertices()[static_cast<size_t>(ri(0, g.size() - 1))].id,
                               std::nullopt);
            }();
            if (rect_cells(default_bound(b.graph)) > 200000) continue;
            UModule after = u_module(top_weight(b.graph));
            expect(before == after, Err::Internal, "blow-up changed the module");
            ++done;
            ++cases;
        }
    }

    void run_all(int per_suite) {
        suite_eu_identity(per_suite);
        suite_root_module(per_suite);
        suite_pathmin(per_suite);
        suite_chi_symmetry(per_suite);
        suite_blowup(per_suite);
    }
};

// ---------------------------------------------------------------------------
// verify: run each manifest case through the dispatcher, compare bytes.

[[noreturn]] void fixture_diff(const std::string& name, const std::string& got,
                               const std::string& want) {
    try {
        Table a = read_table(got);
        Table b = read_table(want);
        if (a.rect() == b.rect())
            for (int64_t i = 0; i < a.size(); ++i)
                if (a.at_index(i) != b.at_index(i))
                    fail(Err::FixtureMismatch, "case " + name + ": first difference at " +
                                                   point_str(a.rect().point(i)));
    } catch (const Error& e) {
        if (e.code() == Err::FixtureMismatch) throw;
    }
    fail(Err::FixtureMismatch, "case " + name + ": output differs");
}

int verify_cmd(const Shared& s, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    nlohmann::ordered_json summary;
    int64_t fixtures = 0;

    const std::string manifest_path = s.dir + "/manifest.json";
    if (fs::exists(manifest_path)) {
        nlohmann::ordered_json mj;
        try {
            mj = nlohmann::ordered_json::parse(read_file(manifest_path));
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            fail(Err::BadInput, std::string("manifest: ") + e.what());
        }
        expect(mj.contains("cases") && mj["cases"].is_array(), Err::BadInput,
               "manifest must contain a case array");
        for (const auto& cj : mj["cases"]) {
            std::string name = cj.at("name").get<std::string>();
            std::vector<std::string> case_args;
            for (const auto& a : cj.at("args")) {
                std::string arg = a.get<std::string>();
                // "@name" refers to a file inside the fixtures directory.
                if (!arg.empty() && arg[0] == '@') arg = s.dir + "/" + arg.substr(1);
                case_args.push_back(std::move(arg));
            }
            std::string expect_path = s.dir + "/" + cj.at("expect").get<std::string>();
            std::string expected;
            try {
                expected = read_file(expect_path);
            } catch (const Error&) {
                fail(Err::FixtureMismatch, "case " + name + ": missing expected file");
            }
            std::ostringstream captured;
            std::ostringstream discard;
            int rc = run(case_args, captured, discard);
            expect(rc == 0, Err::FixtureMismatch, "case " + name + ": command failed");
            if (captured.str() != expected) fixture_diff(name, captured.str(), expected);
            ++fixtures;
        }
    } else {
        err << "warning: no fixture manifest at " << manifest_path << "\n";
    }
    summary["fixtures"] = fixtures;

    if (s.properties) {
        PropertyRunner pr(s.seed);
        pr.run_all(200);
        summary["property_cases"] = pr.cases;
    }
    summary["passed"] = true;
    out << summary.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lattice cohomology of normal surface singularities"};
    app.require_subcommand(1);
    Shared s;

    auto* graph = app.add_subcommand("graph", "plumbing graph queries");
    graph->require_subcommand(1);
    auto* g_check = graph->add_subcommand("check", "validate and classify the graph");
    auto* g_zk = graph->add_subcommand("zk", "anti-canonical cycle");
    auto* g_zmin = graph->add_subcommand("zmin", "minimal (fundamental) cycle");
    auto* g_rat = graph->add_subcommand("rational", "rationality via the Laufer criterion");
    auto* g_blow = graph->add_subcommand("blowup", "blow up a vertex or an edge");
    auto* g_bad = graph->add_subcommand("badset", "test a vertex subset for the reduction property");
    for (CLI::App* c : {g_check, g_zk, g_zmin, g_rat, g_blow, g_bad})
        c->add_option("file", s.file, "graph json file")->required();
    g_blow->add_option("site", s.site_a, "vertex id, or first edge endpoint")->required();
    g_blow->add_option("site2", s.site_b, "second edge endpoint");
    g_bad->add_option("vertex", s.bad, "candidate vertex ids");
    g_bad->add_option("--cap", s.cap, "largest Euler-number decrement to try");

    auto* top = app.add_subcommand("top", "topological lattice cohomology");
    top->require_subcommand(1);
    auto* t_weight = top->add_subcommand("weight", "weight table chi over the rectangle");
    auto* t_module = top->add_subcommand("module", "Z[U]-module decomposition");
    auto* t_root = top->add_subcommand("root", "graded root of degree 0");
    auto* t_pathmin = top->add_subcommand("pathmin", "minimal eu over increasing paths");
    auto* t_reduce = top->add_subcommand("reduce", "reduced weight table on a vertex subset");
    auto* t_sw = top->add_subcommand("sw", "normalized Seiberg-Witten invariant");
    for (CLI::App* c : {t_weight, t_module, t_root, t_pathmin, t_reduce, t_sw}) {
        c->add_option("file", s.file, "graph json file")->required();
        c->add_option("--c", s.c, "rectangle bound, comma separated");
    }
    for (CLI::App* c : {t_weight, t_module, t_root, t_reduce})
        c->add_option("--bad", s.bad, "vertex subset for the reduced pipeline");
    t_module->add_flag("--stability-check", s.stability,
                       "recompute on the grown rectangle and require the same module");
    t_root->add_flag("--dot", s.dot, "emit graphviz instead of json");
    t_root->add_flag("--json", s.json, "emit json (default)");

    auto* comb = app.add_subcommand("comb", "combinatorial lattice cohomology");
    comb->require_subcommand(1);
    auto* c_weight = comb->add_subcommand("weight", "weight table from h and its dual");
    auto* c_module = comb->add_subcommand("module", "Z[U]-module decomposition");
    auto* c_root = comb->add_subcommand("root", "graded root of degree 0");
    auto* c_cdp = comb->add_subcommand("cdp", "matroid, stability and cdp checks");
    auto* c_newton = comb->add_subcommand("newton", "graded space from a Newton diagram");
    auto* c_semi = comb->add_subcommand("semigroup", "semigroup of a Hilbert function");
    auto* c_poin = comb->add_subcommand("poincare", "Poincare numerator coefficients");
    auto* c_pathmin = comb->add_subcommand("pathmin", "minimal eu over increasing paths");
    auto* c_hilb = comb->add_subcommand("hilbert", "hilbert table of a graded vector space");
    for (CLI::App* c : {c_weight, c_module, c_root, c_cdp, c_semi, c_poin, c_pathmin})
        c->add_option("file", s.file, "hilbert table json file")->required();
    c_newton->add_option("file", s.file, "newton diagram json file")->required();
    c_hilb->add_option("file", s.file, "graded vector space json file")->required();
    for (CLI::App* c : {c_weight, c_module, c_root, c_cdp, c_poin, c_pathmin})
        c->add_option("--dual", s.dual, "dual table: sym or a file (default sym)");
    c_newton->add_flag("--module", s.module, "run the full pipeline down to the module");
    c_root->add_flag("--dot", s.dot, "emit graphviz instead of json");
    c_root->add_flag("--json", s.json, "emit json (default)");
    c_poin->add_option("--truncate", s.truncate, "coefficient bound, comma separated");

    auto* an = app.add_subcommand("an", "analytic lattice cohomology");
    an->require_subcommand(1);
    auto* a_reduce = an->add_subcommand("reduce", "reduced analytic weight table");
    a_reduce->add_option("file", s.file, "hilbert table json file")->required();
    a_reduce->add_option("--h1", s.h1, "h^1 table json file")->required();

    auto* ar = app.add_subcommand("ar", "one-vertex reduction along a base vertex");
    ar->require_subcommand(1);
    auto* ar_tau_cmd = ar->add_subcommand("tau", "counting function and universal cycles");
    auto* ar_root_cmd = ar->add_subcommand("root", "graded root and eu of the tau sequence");
    for (CLI::App* c : {ar_tau_cmd, ar_root_cmd}) {
        c->add_option("file", s.file, "graph json file")->required();
        c->add_option("v0", s.v0, "base vertex id")->required();
        c->add_option("--lmax", s.lmax, "window length");
    }
    ar_root_cmd->add_flag("--dot", s.dot, "emit graphviz instead of json");
    ar_root_cmd->add_flag("--json", s.json, "emit json (default)");

    auto* verify = app.add_subcommand("verify", "recompute fixtures and compare bytes");
    verify->add_option("dir", s.dir, "fixtures directory (default fixtures)");
    verify->add_flag("--properties", s.properties, "also run randomized property suites");
    verify->add_option("--seed", s.seed, "seed for the property generators");

    // graph ------------------------------------------------------------
    g_check->callback([&] { out << write_graph_report(check_graph(read_graph(read_file(s.file)))); });
    g_zk->callback([&] { out << write_qcycle("zk", canonical_cycle(read_graph(read_file(s.file)))); });
    g_zmin->callback(
        [&] { out << write_cycle("zmin", fundamental_cycle(read_graph(read_file(s.file)))); });
    g_rat->callback([&] { out << write_bool("rational", is_rational(read_graph(read_file(s.file)))); });
    g_blow->callback([&] {
        PlumbingGraph g = read_graph(read_file(s.file));
        std::optional<std::string> second;
        if (!s.site_b.empty()) second = s.site_b;
        out << write_graph(blow_up(g, s.site_a, second).graph);
    });
    g_bad->callback([&] {
        PlumbingGraph g = read_graph(read_file(s.file));
        out << write_bad_set(is_bad_set(g, resolve_ids(g, s.bad), s.cap));
    });

    // top ----------------------------------------------------------------
    t_weight->callback([&] {
        PlumbingGraph g = read_graph(read_file(s.file));
        out << write_table(top_table(s, g, nullptr).t, "weight");
    });
    t_reduce->callback([&] {
        PlumbingGraph g = read_graph(read_file(s.file));
        expect(!s.bad.empty(), Err::BadSubset, "top reduce needs --bad with at least one vertex");
        out << write_table(top_table(s, g, nullptr).t, "weight");
    });
    t_module->callback([&] {
        PlumbingGraph g = read_graph(read_file(s.file));
        UModule m = u_module(top_table(s, g, nullptr));
        if (s.stability) {
            UModule grown = u_module(top_table(s, g, nullptr, 1));
            expect(grown == m, Err::BadInput, "module changes when the rectangle grows");
        }
        out << write_module(m);
    });
    t_root->callback([&] {
        PlumbingGraph g = read_graph(read_file(s.file));
        GradedRoot r = graded_root_of(top_table(s, g, nullptr));
        out << (s.dot ? to_dot(r) : write_root(r));
    });
    t_pathmin->callback([&] {
        PlumbingGraph g = read_graph(read_file(s.file));
        std::vector<std::string> ids;
        WeightTable w = top_table(s, g, &ids);
        out << write_pathmin(min_eu_increasing(w), ids);
    });
    t_sw->callback([&] {
        PlumbingGraph g = read_graph(read_file(s.file));
        int64_t eu = eu_of(u_module(top_table(s, g, nullptr)));
        out << write_sw(eu, sw_normalized(g, eu));
    });

    // comb -----------------------------------------------------------
    auto comb_weight = [&] {
        HilbertTable h = read_hilbert(read_file(s.file));
        return combinatorial_weight(h, dual_of(s, h));
    };
    c_weight->callback([&] { out << write_table(comb_weight().t, "weight"); });
    c_module->callback([&] { out << write_module(u_module(comb_weight())); });
    c_root->callback([&] {
        GradedRoot r = graded_root_of(comb_weight());
        out << (s.dot ? to_dot(r) : write_root(r));
    });
    c_cdp->callback([&] {
        HilbertTable h = read_hilbert(read_file(s.file));
        DualTable d = dual_of(s, h);
        out << write_property_report(check_properties(h, d));
    });
    c_pathmin->callback([&] { out << write_pathmin(min_eu_increasing(comb_weight()), {}); });
    c_hilb->callback([&] {
        out << write_table(hilbert_from_graded(read_graded(read_file(s.file))).t, "hilbert");
    });
    c_newton->callback([&] {
        GradedSpace m = graded_from_newton(read_newton(read_file(s.file)));
        if (!s.module) {
            out << write_graded(m);
            return;
        }
        HilbertTable h = hilbert_from_graded(m);
        DualTable d = symmetric_dual(h);
        out << write_module(u_module(combinatorial_weight(h, d)));
    });
    c_semi->callback([&] {
        HilbertTable h = read_hilbert(read_file(s.file));
        out << write_semigroup(semigroup_from_hilbert(h), h.t.rect().hi());
    });
    c_poin->callback([&] {
        HilbertTable h = read_hilbert(read_file(s.file));
        WeightTable w = combinatorial_weight(h, dual_of(s, h));
        Point bound;
        if (!s.truncate.empty()) {
            bound = parse_point(s.truncate);
        } else {
            for (int64_t x : h.t.rect().hi()) bound.push_back(std::max<int64_t>(x - 1, 0));
        }
        out << write_table(poincare_numerator(w, bound));
    });

    // an -------------------------------------------------------------
    a_reduce->callback([&] {
        HilbertTable h = read_hilbert(read_file(s.file));
        Table h1 = read_table(read_file(s.h1));
        out << write_table(reduced_an_weight(h, h1).t, "weight");
    });

    // ar -------------------------------------------------------------
    ar_tau_cmd->callback([&] {
        PlumbingGraph g = read_graph(read_file(s.file));
        out << write_tau(ar_tau(g, g.index_of(s.v0), s.lmax), g);
    });
    ar_root_cmd->callback([&] {
        PlumbingGraph g = read_graph(read_file(s.file));
        ArRootEu r = ar_root_eu(g, g.index_of(s.v0), s.lmax);
        out << (s.dot ? to_dot(r.root) : write_ar(r));
    });

    // verify ---------------------------------------------------------
    int verify_rc = 0;
    verify->callback([&] { verify_rc = verify_cmd(s, out, err); });

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("latcoh");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const auto& a : full) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        out << write_error(e);
        return 1;
    }
    return verify_rc;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}
