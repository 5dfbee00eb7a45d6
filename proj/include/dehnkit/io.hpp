#pragma once

// File formats. Every file is a JSON object with a "version" field (only
// version 1 exists) and a "type" field naming the payload:
//
//   fatgraph      {ambient, mu, gabai?, vertices: [{id, sign}],
//                  interior_edges: [[[v,slot],[w,slot]], ...],
//                  boundary_edges: [{end: [v,slot], boundary_pos: k}],
//                  suture_circles: [{vertex_sides: {"id": "+"|"-"},
//                                    edge_crossings: [n per interior edge]}]?}
//   sutured       {boundary_components: [{regions: [{id, sign, genus,
//                  boundary_circle_ids}], sutures: [{id, minus_region,
//                  plus_region}]}], beta_arcs: [{id, minus_region,
//                  plus_region}], beta_loops, declared_irreducible,
//                  declared_r_taut}
//   param-surface {pieces: [{surface: {g, b, punctures, signs?},
//                  words: [["S1","A2","C3", ...], ...]}],
//                  mu_per_edge: {"arc id": n}}
//   scenario      {delta, surface_kind, chi, alpha_intersections, flags}
//   multicurve    {terms: [{slope: "p/q", mult, orient}]}
//
// Slopes are written "p/q" everywhere. Serialization is deterministic:
// identical values produce byte-identical text.

#include <string>

#include "dehnkit/fatgraph.hpp"
#include "dehnkit/harness.hpp"
#include "dehnkit/slope.hpp"
#include "dehnkit/sutured.hpp"

namespace dehnkit {

// Parsers throw ParseError with a one-line diagnostic naming file, line and
// field. The `name` parameter is the file name used in diagnostics.
FatGraph parse_fatgraph(const std::string& text, const std::string& name);
SuturedData parse_sutured(const std::string& text, const std::string& name);
ParamSurface parse_param_surface(const std::string& text, const std::string& name);
Scenario parse_scenario(const std::string& text, const std::string& name);
OrientedMulticurve parse_multicurve(const std::string& text, const std::string& name);

std::string serialize(const FatGraph& g);
std::string serialize(const SuturedData& d);
std::string serialize(const ParamSurface& q);
std::string serialize(const Scenario& s);
std::string serialize(const OrientedMulticurve& c);

// Reads a whole file; ParseError on I/O failure.
std::string read_file(const std::string& path);

// Graphviz export of a fat graph (slot labels on edge ends).
std::string to_dot(const FatGraph& g);

} // namespace dehnkit
