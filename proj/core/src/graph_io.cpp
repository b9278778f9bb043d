// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "quatgraph/graph_io.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "quatgraph/errors.hpp"
#include "quatgraph/text_format.hpp"

namespace quatgraph {

using json = nlohmann::ordered_json;

namespace {

json quat_list(const std::vector<QuatElem>& xs) {
  json a = json::array();
  for (const QuatElem& x : xs) a.push_back(format_quat(x));
  return a;
}

template <class T>
T field_of(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("graph artifact lacks '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("graph artifact field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string graph_to_json(const QuotientGraph& g) {
  const AlgebraData& alg = *g.alg;
  const Field& f = alg.field();
  json j;
  j["format"] = "quatgraph-graph";
  j["format_version"] = kGraphFormatVersion;
  j["q"] = f.q();
  j["modulus"] = f.spec().modulus;
  json primes = json::array();
  for (const Poly& p : alg.ram().primes) primes.push_back(p.to_string());
  j["primes"] = primes;
  j["alpha"] = alg.alpha().to_string();
  j["epsilon"] = alg.epsilon().to_string();
  j["nu"] = alg.nu().to_string();
  j["g0"] = format_quat(g.g0);
  j["initial_vertex"] = format_vertex(f, g.vertices[g.initial].nf);
  j["initial"] = g.initial;
  j["levels"] = g.levels;
  j["two_vertex_case"] = g.two_vertex_case;

  json vs = json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const QuotientVertex& v = g.vertices[i];
    json jv;
    jv["id"] = i;
    jv["nf"] = format_vertex(f, v.nf);
    jv["stable"] = v.stability == Stability::kStable;
    jv["parent"] = v.parent;
    jv["level"] = v.level;
    jv["end_basis"] = quat_list(v.end_basis);
    if (v.stability == Stability::kUnstable) {
      jv["stabilizer_generator"] = format_quat(v.stabilizer_generator);
    }
    vs.push_back(std::move(jv));
  }
  j["vertices"] = std::move(vs);

  json es = json::array();
  for (const QuotientEdge& e : g.edges) {
    json je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["index"] = e.index;
    if (e.kind == EdgeKind::kTree) {
      je["label"] = "tree";
    } else if (e.kind == EdgeKind::kOpposite) {
      je["label"] = "opposite";
    } else {
      json l;
      l["pairing"] = format_quat(e.pairing);
      l["tree_edge"] = {format_vertex(f, e.tree_edge.origin),
                        format_vertex(f, e.tree_edge.target)};
      l["image"] = format_vertex(f, e.image);
      je["label"] = std::move(l);
    }
    es.push_back(std::move(je));
  }
  j["edges"] = std::move(es);
  return j.dump(2) + "\n";
}

QuotientGraph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("graph artifact is not valid JSON: ") + e.what());
  }
  if (field_of<std::string>(j, "format") != "quatgraph-graph") {
    throw InvalidInput("not a quatgraph graph artifact");
  }
  const int version = field_of<int>(j, "format_version");
  if (version != kGraphFormatVersion) {
    throw InvalidInput("graph artifact version " + std::to_string(version) +
                       ", expected " + std::to_string(kGraphFormatVersion));
  }
  const FieldSpec spec = FieldSpec::from_q(field_of<int>(j, "q"),
                                           field_of<std::vector<int>>(j, "modulus"));
  const Field& f = Field::get(spec);
  std::vector<Poly> primes;
  for (const std::string& s : field_of<std::vector<std::string>>(j, "primes")) {
    primes.push_back(parse_poly(f, s));
  }
  BuildOptions opts;
  opts.alpha = parse_poly(f, field_of<std::string>(j, "alpha"));
  auto alg = build_algebra(spec, primes, opts);
  if (alg->epsilon() != parse_poly(f, field_of<std::string>(j, "epsilon")) ||
      alg->nu() != parse_poly(f, field_of<std::string>(j, "nu"))) {
    throw InvalidInput("graph artifact structure constants do not match its algebra");
  }

  QuotientGraph g;
  g.alg = alg;
  g.g0 = parse_quat(*alg, field_of<std::string>(j, "g0"));
  g.initial = field_of<int>(j, "initial");
  g.levels = field_of<int>(j, "levels");
  g.two_vertex_case = field_of<bool>(j, "two_vertex_case");

  const json& vs = j.at("vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const json& jv = vs[i];
    if (field_of<std::size_t>(jv, "id") != i) throw InvalidInput("vertex ids out of order");
    QuotientVertex v;
    v.nf = parse_vertex(f, field_of<std::string>(jv, "nf"));
    v.stability = field_of<bool>(jv, "stable") ? Stability::kStable : Stability::kUnstable;
    v.parent = field_of<int>(jv, "parent");
    v.level = field_of<int>(jv, "level");
    for (const std::string& s : field_of<std::vector<std::string>>(jv, "end_basis")) {
      v.end_basis.push_back(parse_quat(*alg, s));
    }
    if (v.stability == Stability::kUnstable) {
      v.stabilizer_generator = parse_quat(*alg, field_of<std::string>(jv, "stabilizer_generator"));
    }
    g.add_vertex(std::move(v));
  }
  const int nv = static_cast<int>(g.vertices.size());
  if (g.initial < 0 || g.initial >= nv) throw InvalidInput("initial vertex out of range");

  const json& es = j.at("edges");
  for (const json& je : es) {
    QuotientEdge e;
    e.src = field_of<int>(je, "src");
    e.dst = field_of<int>(je, "dst");
    e.index = field_of<int>(je, "index");
    if (e.src < 0 || e.src >= nv || e.dst < 0 || e.dst >= nv) {
      throw InvalidInput("edge endpoint out of range");
    }
    const json& l = je.at("label");
    if (l.is_string()) {
      const std::string s = l.get<std::string>();
      if (s == "tree") {
        e.kind = EdgeKind::kTree;
        e.tree_edge = Edge{g.vertices[e.src].nf, g.vertices[e.dst].nf, 0};
      } else if (s == "opposite") {
        e.kind = EdgeKind::kOpposite;
        // The opposite edge directly follows its pairing edge.
        if (g.edges.empty() || g.edges.back().kind != EdgeKind::kPairing ||
            g.edges.back().src != e.dst || g.edges.back().dst != e.src) {
          throw InvalidInput("opposite edge without a preceding pairing edge");
        }
        e.pairing = g.edges.back().pairing;
        e.tree_edge = g.edges.back().tree_edge;
        e.image = g.edges.back().image;
      } else {
        throw InvalidInput("unknown edge label '" + s + "'");
      }
    } else {
      e.kind = EdgeKind::kPairing;
      e.pairing = parse_quat(*alg, field_of<std::string>(l, "pairing"));
      const auto te = field_of<std::vector<std::string>>(l, "tree_edge");
      if (te.size() != 2) throw InvalidInput("tree_edge must have two vertices");
      e.tree_edge = Edge{parse_vertex(f, te[0]), parse_vertex(f, te[1]), 0};
      e.image = parse_vertex(f, field_of<std::string>(l, "image"));
    }
    g.add_edge(std::move(e));
  }
  return g;
}

std::string graph_to_dot(const QuotientGraph& g) {
  const Field& f = g.alg->field();
  std::ostringstream os;
  os << "graph quotient {\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const QuotientVertex& v = g.vertices[i];
    os << "  v" << i << " [label=\"" << format_vertex(f, v.nf) << "\"";
    if (v.stability == Stability::kStable) {
      os << ", style=filled, fillcolor=black, fontcolor=white";
    }
    if (static_cast<int>(i) == g.initial) os << ", peripheries=2";
    os << "];\n";
  }
  int k = 0;
  for (const QuotientEdge& e : g.edges) {
    if (e.kind == EdgeKind::kTree && g.vertices[e.dst].parent == e.src) {
      os << "  v" << e.src << " -- v" << e.dst << ";\n";
    } else if (e.kind == EdgeKind::kPairing) {
      os << "  v" << e.src << " -- v" << e.dst << " [style=dashed, label=\"g" << ++k
         << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string graph_summary(const QuotientGraph& g, const StructureReport* report) {
  const AlgebraData& alg = *g.alg;
  const Field& f = alg.field();
  std::ostringstream os;
  os << "q: " << f.q() << "\n";
  os << "r: " << alg.r().to_string() << "\n";
  os << "alpha: " << alg.alpha().to_string() << "\n";
  os << "epsilon: " << alg.epsilon().to_string() << "\n";
  os << "nu: " << alg.nu().to_string() << "\n";
  os << "initial vertex: " << format_vertex(f, g.vertices[g.initial].nf) << "\n";
  os << "vertices: " << g.vertices.size() << " (" << g.terminal_vertices().size()
     << " terminal)\n";
  os << "paired edges: " << g.pairing_edges().size() << "\n";
  os << "levels: " << g.levels << "\n";
  if (report != nullptr) {
    const StructureReport& r = *report;
    os << "g(R): " << r.genus << "\n";
    os << "V_1: " << r.v1 << " (expected " << r.expected_v1 << ")\n";
    os << "V_q+1: " << r.v_q1 << " (expected " << r.expected_v_q1 << ")\n";
    os << "h_1: " << r.h1 << "\n";
    // The real-valued bound is shown as the largest integer below it.
    os << "diameter: " << r.diameter << " (bound "
       << static_cast<long long>(std::floor(r.diameter_bound + 1e-9)) << ")\n";
    os << "two-cycles: " << r.two_cycles << "\n";
    os << "max label height: " << r.max_label_height << " (bound "
       << r.global_height_bound << ")\n";
    for (const Check& c : r.checks) {
      os << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace quatgraph
