#pragma once

#include <string>

#include "latcoh/complex.hpp"
#include "latcoh/graph.hpp"
#include "latcoh/hilbert.hpp"
#include "latcoh/path.hpp"
#include "latcoh/reduce.hpp"
#include "latcoh/root.hpp"
#include "latcoh/table.hpp"

namespace latcoh {

// Readers throw BadInput on malformed text, wrong shapes, or missing fields;
// the semantic constructors (make_hilbert, graph validation, ...) run too.
PlumbingGraph read_graph(const std::string& text);
Table read_table(const std::string& text);
HilbertTable read_hilbert(const std::string& text);
DualTable read_dual(const std::string& text);
WeightTable read_weight(const std::string& text);
GradedSpace read_graded(const std::string& text);
NewtonDiagram read_newton(const std::string& text);
GradedRoot read_root(const std::string& text);
UModule read_module(const std::string& text);

// Writers are byte-stable: fixed field order, compact layout, one trailing
// newline. Zero-based tables omit "lo"; plain tables omit "kind".
std::string write_graph(const PlumbingGraph& g);
std::string write_table(const Table& t, const std::string& kind = "");
std::string write_graded(const GradedSpace& m);
std::string write_newton(const NewtonDiagram& n);
std::string write_root(const GradedRoot& r);
std::string write_module(const UModule& m);

std::string write_graph_report(const GraphReport& r);
std::string write_qcycle(const std::string& key, const QCycle& x);
std::string write_cycle(const std::string& key, const Cycle& x);
std::string write_bool(const std::string& key, bool value);
std::string write_property_report(const PropertyReport& r);
std::string write_semigroup(const SemigroupResult& s, const Point& c);
std::string write_tau(const TauSequence& seq, const PlumbingGraph& g);
std::string write_bad_set(const BadSetReport& r);
std::string write_euler(const EulerReport& r);
std::string write_pathmin(const MinEuPath& p, const std::vector<std::string>& axis_ids);
std::string write_sw(int64_t eu, const Rational& sw);
std::string write_ar(const ArRootEu& r);
std::string write_error(const Error& e);

} // namespace latcoh
