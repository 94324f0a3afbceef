#include "latcoh/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "json.hpp"

namespace latcoh {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail(Err::BadInput, std::string("json parse: ") + e.what());
    }
}

const ordered_json& field(const ordered_json& j, const char* key) {
    expect(j.is_object(), Err::BadInput, "expected a json object");
    auto it = j.find(key);
    expect(it != j.end(), Err::BadInput, std::string("missing field \"") + key + "\"");
    return *it;
}

int64_t as_int(const ordered_json& v, const char* what) {
    expect(v.is_number_integer(), Err::BadInput, std::string(what) + " must be an integer");
    if (v.is_number_unsigned())
        expect(v.get<uint64_t>() <=
                   static_cast<uint64_t>(std::numeric_limits<int64_t>::max()),
               Err::BadInput, std::string(what) + " out of range");
    return v.get<int64_t>();
}

std::string as_str(const ordered_json& v, const char* what) {
    expect(v.is_string(), Err::BadInput, std::string(what) + " must be a string");
    return v.get<std::string>();
}

const ordered_json& as_array(const ordered_json& v, const char* what) {
    expect(v.is_array(), Err::BadInput, std::string(what) + " must be an array");
    return v;
}

Point as_point(const ordered_json& v, const char* what) {
    Point p;
    for (const auto& x : as_array(v, what)) p.push_back(as_int(x, what));
    return p;
}

ordered_json from_point(const Point& p) {
    ordered_json a = ordered_json::array();
    for (int64_t x : p) a.push_back(x);
    return a;
}

std::string emit(const ordered_json& j) { return j.dump() + "\n"; }

} // namespace

PlumbingGraph read_graph(const std::string& text) {
    ordered_json j = parse_json(text);
    std::vector<Vertex> vs;
    for (const auto& vj : as_array(field(j, "vertices"), "vertices")) {
        Vertex v;
        v.id = as_str(field(vj, "id"), "vertex id");
        v.e = as_int(field(vj, "e"), "vertex e");
        v.g = vj.contains("g") ? as_int(vj["g"], "vertex g") : 0;
        vs.push_back(std::move(v));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& ej : as_array(field(j, "edges"), "edges")) {
        const auto& pr = as_array(ej, "edge");
        expect(pr.size() == 2, Err::BadInput, "edge must have two endpoints");
        edges.emplace_back(as_str(pr[0], "edge endpoint"), as_str(pr[1], "edge endpoint"));
    }
    return PlumbingGraph(std::move(vs), edges);
}

std::string write_graph(const PlumbingGraph& g) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const Vertex& v : g.vertices())
        j["vertices"].push_back(ordered_json{{"id", v.id}, {"e", v.e}, {"g", v.g}});
    j["edges"] = ordered_json::array();
    for (const auto& [a, b] : g.edges())
        j["edges"].push_back(ordered_json::array(
            {g.vertices()[static_cast<size_t>(a)].id, g.vertices()[static_cast<size_t>(b)].id}));
    return emit(j);
}

Table read_table(const std::string& text) {
    ordered_json j = parse_json(text);
    int64_t rank = as_int(field(j, "rank"), "rank");
    expect(rank >= 1 && rank <= 30, Err::BadInput, "rank out of range");
    Point c = as_point(field(j, "c"), "c");
    expect(static_cast<int64_t>(c.size()) == rank, Err::BadInput, "c has wrong length");
    Point lo(c.size(), 0);
    if (j.contains("lo")) {
        lo = as_point(j["lo"], "lo");
        expect(lo.size() == c.size(), Err::BadInput, "lo has wrong length");
    }
    expect(as_str(field(j, "order"), "order") == "row-major-last-fastest", Err::BadInput,
           "unsupported value order");
    std::vector<int64_t> values;
    for (const auto& v : as_array(field(j, "values"), "values"))
        values.push_back(as_int(v, "value"));
    Rect r(std::move(lo), std::move(c));
    expect(static_cast<int64_t>(values.size()) == r.count(), Err::BadInput,
           "values length does not match the rectangle");
    return Table(std::move(r), std::move(values));
}

HilbertTable read_hilbert(const std::string& text) { return make_hilbert(read_table(text)); }
DualTable read_dual(const std::string& text) { return make_dual(read_table(text)); }
WeightTable read_weight(const std::string& text) { return WeightTable{read_table(text)}; }

std::string write_table(const Table& t, const std::string& kind) {
    const Rect& r = t.rect();
    ordered_json j;
    j["rank"] = r.rank();
    j["c"] = from_point(r.hi());
    if (std::any_of(r.lo().begin(), r.lo().end(), [](int64_t x) { return x != 0; }))
        j["lo"] = from_point(r.lo());
    j["order"] = "row-major-last-fastest";
    if (!kind.empty()) j["kind"] = kind;
    j["values"] = t.values();
    return emit(j);
}

GradedSpace read_graded(const std::string& text) {
    ordered_json j = parse_json(text);
    int64_t rank = as_int(field(j, "rank"), "rank");
    expect(rank >= 1 && rank <= 30, Err::BadInput, "rank out of range");
    Point c = as_point(field(j, "c"), "c");
    std::vector<GradedEntry> entries;
    for (const auto& ej : as_array(field(j, "graded"), "graded"))
        entries.push_back(
            GradedEntry{as_point(field(ej, "deg"), "deg"), as_int(field(ej, "dim"), "dim")});
    return make_graded(static_cast<int>(rank), std::move(c), std::move(entries));
}

std::string write_graded(const GradedSpace& m) {
    ordered_json j;
    j["rank"] = m.rank;
    j["c"] = from_point(m.c);
    j["graded"] = ordered_json::array();
    for (const GradedEntry& e : m.entries)
        j["graded"].push_back(ordered_json{{"deg", from_point(e.deg)}, {"dim", e.dim}});
    return emit(j);
}

NewtonDiagram read_newton(const std::string& text) {
    ordered_json j = parse_json(text);
    int64_t dim = as_int(field(j, "dim"), "dim");
    expect(dim >= 1 && dim <= 30, Err::BadInput, "dim out of range");
    std::vector<NewtonFace> faces;
    for (const auto& fj : as_array(field(j, "faces"), "faces"))
        faces.push_back(
            NewtonFace{as_point(field(fj, "normal"), "normal"), as_int(field(fj, "m"), "m")});
    return make_newton(static_cast<int>(dim), std::move(faces));
}

std::string write_newton(const NewtonDiagram& n) {
    ordered_json j;
    j["dim"] = n.dim;
    j["faces"] = ordered_json::array();
    for (const NewtonFace& f : n.faces)
        j["faces"].push_back(ordered_json{{"normal", from_point(f.normal)}, {"m", f.m}});
    return emit(j);
}

GradedRoot read_root(const std::string& text) {
    ordered_json j = parse_json(text);
    GradedRoot r;
    r.min_level = as_int(field(j, "min"), "min");
    std::vector<int64_t> offsets{0};
    int64_t expected_n = r.min_level;
    for (const auto& lj : as_array(field(j, "levels"), "levels")) {
        expect(as_int(field(lj, "n"), "level n") == expected_n, Err::BadInput,
               "levels must be consecutive from min");
        ++expected_n;
        int64_t count = as_int(field(lj, "count"), "level count");
        expect(count >= 1, Err::BadInput, "level count must be positive");
        r.parent.emplace_back(static_cast<size_t>(count), -1);
        offsets.push_back(checked_add(offsets.back(), count));
    }
    expect(!r.parent.empty(), Err::BadInput, "root has no levels");
    const int levels = r.level_count();
    for (const auto& ej : as_array(field(j, "edges"), "edges")) {
        const auto& pr = as_array(ej, "edge");
        expect(pr.size() == 2, Err::BadInput, "edge must have two endpoints");
        int64_t c = as_int(pr[0], "edge child");
        int64_t p = as_int(pr[1], "edge parent");
        expect(c >= 0 && c < offsets.back(), Err::BadInput, "edge child out of range");
        int k = static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), c) -
                                 offsets.begin()) -
                1;
        expect(k + 1 < levels, Err::BadInput, "edge from the top level");
        expect(p >= offsets[static_cast<size_t>(k) + 1] &&
                   p < offsets[static_cast<size_t>(k) + 2],
               Err::BadInput, "edge must go one level up");
        int& slot = r.parent[static_cast<size_t>(k)]
                            [static_cast<size_t>(c - offsets[static_cast<size_t>(k)])];
        expect(slot == -1, Err::BadInput, "vertex with two parents");
        slot = static_cast<int>(p - offsets[static_cast<size_t>(k) + 1]);
    }
    for (int k = 0; k + 1 < levels; ++k)
        for (int v = 0; v < r.count(k); ++v)
            expect(r.parent[static_cast<size_t>(k)][static_cast<size_t>(v)] >= 0, Err::BadInput,
                   "vertex missing a parent");
    validate_root(r);
    return r;
}

namespace {

ordered_json root_json(const GradedRoot& r) {
    validate_root(r);
    ordered_json j;
    j["min"] = r.min_level;
    j["levels"] = ordered_json::array();
    std::vector<int64_t> offsets{0};
    for (int k = 0; k < r.level_count(); ++k) {
        j["levels"].push_back(ordered_json{{"n", r.level(k)}, {"count", r.count(k)}});
        offsets.push_back(offsets.back() + r.count(k));
    }
    j["edges"] = ordered_json::array();
    for (int k = 0; k + 1 < r.level_count(); ++k)
        for (int v = 0; v < r.count(k); ++v)
            j["edges"].push_back(ordered_json::array(
                {offsets[static_cast<size_t>(k)] + v,
                 offsets[static_cast<size_t>(k) + 1] +
                     r.parent[static_cast<size_t>(k)][static_cast<size_t>(v)]}));
    return j;
}

} // namespace

std::string write_root(const GradedRoot& r) { return emit(root_json(r)); }

UModule read_module(const std::string& text) {
    ordered_json j = parse_json(text);
    expect(j.is_object() && j.contains("q0"), Err::BadInput, "module must have a q0 part");
    auto q_index = [](const std::string& key) -> int {
        if (key.size() < 2 || key[0] != 'q') return -1;
        for (size_t i = 1; i < key.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(key[i]))) return -1;
        return std::stoi(key.substr(1));
    };
    UModule m;
    int maxq = 0;
    for (auto it = j.begin(); it != j.end(); ++it) maxq = std::max(maxq, q_index(it.key()));
    m.parts.resize(static_cast<size_t>(maxq) + 1);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int q = q_index(it.key());
        if (q < 0) continue;
        QPart& part = m.parts[static_cast<size_t>(q)];
        const ordered_json& pj = it.value();
        if (pj.contains("tails"))
            for (const auto& t : as_array(pj["tails"], "tails")) part.tails.push_back(as_int(t, "tail"));
        if (pj.contains("pieces"))
            for (const auto& sj : as_array(pj["pieces"], "pieces"))
                part.pieces.push_back(Piece{as_int(field(sj, "start"), "start"),
                                            as_int(field(sj, "len"), "len"),
                                            as_int(field(sj, "mult"), "mult")});
    }
    m.min_w = as_int(field(j, "min_w"), "min_w");
    if (j.contains("torsion"))
        for (const auto& tj : as_array(j["torsion"], "torsion")) {
            TorsionEntry e;
            e.level = as_int(field(tj, "n"), "torsion n");
            e.q = static_cast<int>(as_int(field(tj, "q"), "torsion q"));
            for (const auto& f : as_array(field(tj, "factors"), "factors"))
                e.factors.push_back(as_int(f, "torsion factor"));
            m.torsion.push_back(std::move(e));
        }
    if (j.contains("eu"))
        expect(as_int(j["eu"], "eu") == eu_of(m), Err::BadInput,
               "stored eu disagrees with the module");
    return m;
}

std::string write_module(const UModule& m) {
    ordered_json j;
    for (size_t q = 0; q < m.parts.size(); ++q) {
        const QPart& part = m.parts[q];
        if (q > 0 && part.tails.empty() && part.pieces.empty()) continue;
        ordered_json pj = ordered_json::object();
        if (!part.tails.empty()) pj["tails"] = part.tails;
        if (!part.pieces.empty()) {
            ordered_json arr = ordered_json::array();
            for (const Piece& p : part.pieces)
                arr.push_back(
                    ordered_json{{"start", p.start}, {"len", p.len}, {"mult", p.mult}});
            pj["pieces"] = std::move(arr);
        }
        j["q" + std::to_string(q)] = std::move(pj);
    }
    j["min_w"] = m.min_w;
    j["eu"] = eu_of(m);
    j["torsion"] = ordered_json::array();
    for (const TorsionEntry& e : m.torsion)
        j["torsion"].push_back(
            ordered_json{{"n", e.level}, {"q", e.q}, {"factors", e.factors}});
    return emit(j);
}

std::string write_graph_report(const GraphReport& r) {
    ordered_json j;
    j["negative_definite"] = r.negative_definite;
    j["is_tree"] = r.is_tree;
    j["all_genus_zero"] = r.all_genus_zero;
    j["qhs3_link"] = r.qhs3_link;
    j["group_order"] = r.group_order;
    j["numerically_gorenstein"] = r.numerically_gorenstein;
    return emit(j);
}

std::string write_qcycle(const std::string& key, const QCycle& x) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const Rational& r : x) arr.push_back(r.str());
    j[key] = std::move(arr);
    return emit(j);
}

std::string write_cycle(const std::string& key, const Cycle& x) {
    ordered_json j;
    j[key] = x;
    return emit(j);
}

std::string write_bool(const std::string& key, bool value) {
    ordered_json j;
    j[key] = value;
    return emit(j);
}

std::string write_property_report(const PropertyReport& r) {
    ordered_json j;
    j["matroid"] = r.matroid;
    if (r.matroid_witness)
        j["matroid_witness"] = ordered_json{{"l1", from_point(r.matroid_witness->first)},
                                            {"l2", from_point(r.matroid_witness->second)}};
    j["stability"] = r.stability;
    if (r.stability_witness)
        j["stability_witness"] =
            ordered_json{{"l", from_point(std::get<0>(*r.stability_witness))},
                         {"v", std::get<1>(*r.stability_witness)},
                         {"lbar", from_point(std::get<2>(*r.stability_witness))}};
    j["cdp"] = r.cdp;
    if (r.cdp_witness)
        j["cdp_witness"] = ordered_json{{"l", from_point(r.cdp_witness->first)},
                                        {"v", r.cdp_witness->second}};
    return emit(j);
}

std::string write_semigroup(const SemigroupResult& s, const Point& c) {
    ordered_json j;
    j["c"] = from_point(c);
    j["points"] = ordered_json::array();
    for (const Point& p : s.points) j["points"].push_back(from_point(p));
    j["duality_ok"] = s.duality_ok;
    return emit(j);
}

std::string write_tau(const TauSequence& seq, const PlumbingGraph& g) {
    ordered_json j;
    j["v0"] = g.vertices()[static_cast<size_t>(seq.v0)].id;
    j["lmax"] = seq.lmax;
    j["tau"] = seq.tau;
    j["cycles"] = ordered_json::array();
    for (const Cycle& x : seq.cycles) j["cycles"].push_back(x);
    return emit(j);
}

std::string write_bad_set(const BadSetReport& r) {
    ordered_json j;
    j["verdict"] = r.yes ? "yes" : "no_up_to_bound";
    j["delta"] = r.delta;
    return emit(j);
}

std::string write_euler(const EulerReport& r) {
    ordered_json j;
    j["min_w"] = r.min_w;
    j["eu_total"] = r.eu_total;
    j["eu_h0"] = r.eu_h0;
    j["eu_cubes"] = r.eu_cubes;
    j["reduced_ranks"] = r.reduced_ranks;
    return emit(j);
}

std::string write_pathmin(const MinEuPath& p, const std::vector<std::string>& axis_ids) {
    ordered_json j;
    j["eu"] = p.value;
    ordered_json arr = ordered_json::array();
    for (int a : p.directions) {
        if (axis_ids.empty())
            arr.push_back(a);
        else
            arr.push_back(axis_ids[static_cast<size_t>(a)]);
    }
    j["path"] = std::move(arr);
    return emit(j);
}

std::string write_sw(int64_t eu, const Rational& sw) {
    ordered_json j;
    j["eu"] = eu;
    j["sw"] = sw.str();
    return emit(j);
}

std::string write_ar(const ArRootEu& r) {
    ordered_json j;
    j["eu"] = r.eu;
    j["root"] = root_json(r.root);
    return emit(j);
}

std::string write_error(const Error& e) {
    ordered_json j;
    j["error"] = e.name();
    std::string msg = e.what();
    std::string prefix = std::string(e.name()) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    j["message"] = msg;
    return emit(j);
}

} // namespace latcoh
