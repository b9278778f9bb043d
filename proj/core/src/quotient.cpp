// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "quatgraph/quotient.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

#include "quatgraph/errors.hpp"

namespace quatgraph {

int QuotientGraph::find(const Vertex& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int QuotientGraph::degree(int id) const {
  int d = 0;
  for (const QuotientEdge& e : edges) d += e.src == id;
  return d;
}

int QuotientGraph::add_vertex(QuotientVertex v) {
  QG_CHECK(find(v.nf) < 0, "vertex added twice");
  const int id = static_cast<int>(vertices.size());
  index_.emplace(v.nf, id);
  vertices.push_back(std::move(v));
  return id;
}

void QuotientGraph::add_edge(QuotientEdge e) { edges.push_back(std::move(e)); }

std::vector<int> QuotientGraph::terminal_vertices() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (vertices[i].stability == Stability::kUnstable) out.push_back(i);
  }
  return out;
}

std::vector<int> QuotientGraph::pairing_edges() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (edges[i].kind == EdgeKind::kPairing) out.push_back(i);
  }
  return out;
}

int QuotientGraph::multiplicity(int v, int w) const {
  int n = 0;
  for (const QuotientEdge& e : edges) n += e.src == v && e.dst == w;
  return n;
}

namespace {

bool has_order(const AlgebraData& alg, const QuatElem& x, long long order) {
  const QuatElem one = alg.one();
  if (!(alg.pow(x, order) == one)) return false;
  long long rest = order;
  for (long long p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    if (alg.pow(x, order / p) == one) return false;
  }
  return true;
}

// First nonzero End-combination of order q^2 - 1 whose (q+1)-th power is g0.
QuatElem stabilizer_generator(const AlgebraData& alg, const HomSet& end,
                              const QuatElem& g0) {
  const long long q = alg.field().q();
  for (const QuatElem& x : hom_elements(alg, end)) {
    if (!alg.is_unit(x)) continue;
    if (!(alg.pow(x, q + 1) == g0)) continue;
    if (has_order(alg, x, q * q - 1)) return x;
  }
  throw InternalError("no generator of the vertex stabilizer");
}

std::vector<EndResult> ends_parallel(const AlgebraData& alg,
                                     const std::vector<Vertex>& vs,
                                     const QuotientOptions& opts) {
  std::vector<std::optional<EndResult>> slots(vs.size());
  const int workers =
      std::max(1, std::min<int>(opts.threads, static_cast<int>(vs.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      slots[i] = end_and_classify(alg, vs[i], opts.hom);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i; (i = next++) < vs.size();) {
            slots[i] = end_and_classify(alg, vs[i], opts.hom);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<EndResult> out;
  out.reserve(vs.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct ListEntry {
  int parent;     // vertex id of v
  Vertex child;   // v'
  bool alive = true;
};

}  // namespace

QuotientGraph compute_quotient(std::shared_ptr<const AlgebraData> alg,
                               const QuotientOptions& opts) {
  QG_CHECK(alg != nullptr, "null algebra");
  const Field& f = alg->field();
  const int q = f.q();
  QuotientGraph g;
  g.alg = alg;
  g.g0 = alg->scalar(f.primitive_element());

  auto make_vertex = [&](const Vertex& nf, EndResult er, int parent,
                         int level) {
    QuotientVertex qv;
    qv.nf = nf;
    qv.stability = er.stability;
    qv.end_basis = std::move(er.end.basis);
    qv.parent = parent;
    qv.level = level;
    if (qv.stability == Stability::kUnstable) {
      HomSet e{nf, nf, qv.end_basis};
      qv.stabilizer_generator = stabilizer_generator(*alg, e, g.g0);
    }
    return qv;
  };
  auto add_tree_edges = [&](int a, int b) {
    const Vertex& va = g.vertices[a].nf;
    const Vertex& vb = g.vertices[b].nf;
    g.add_edge({a, b, g.multiplicity(a, b), EdgeKind::kTree, Edge{va, vb, 0}, {}, {}});
    g.add_edge({b, a, g.multiplicity(b, a), EdgeKind::kTree, Edge{vb, va, 0}, {}, {}});
  };

  // Step (a).
  Vertex v0(0);
  EndResult e0 = end_and_classify(*alg, v0, opts.hom);
  if (e0.stability == Stability::kUnstable) {
    Vertex v1(1);
    EndResult e1 = end_and_classify(*alg, v1, opts.hom);
    if (e1.stability == Stability::kUnstable) {
      g.initial = g.add_vertex(make_vertex(v1, std::move(e1), -1, 0));
      const int other = g.add_vertex(make_vertex(v0, std::move(e0), g.initial, 1));
      add_tree_edges(g.initial, other);
      g.two_vertex_case = true;
      return g;
    }
    v0 = v1;
    e0 = std::move(e1);
  }

  // Step (b).
  g.initial = g.add_vertex(make_vertex(v0, std::move(e0), -1, 0));
  std::vector<ListEntry> list;
  for (const Vertex& u : neighbors(f, v0)) list.push_back({g.initial, u});
  std::vector<int> out_degree{0};
  auto degree_of = [&](int id) { return out_degree[id]; };
  auto link = [&](int a, int b) {
    out_degree[a]++;
    out_degree[b]++;
  };

  std::map<std::pair<Vertex, Vertex>, HomSet> hom_cache;
  auto hom_of = [&](const Vertex& a, const Vertex& b) -> const HomSet& {
    auto key = std::make_pair(a, b);
    auto it = hom_cache.find(key);
    if (it == hom_cache.end()) {
      it = hom_cache.emplace(key, hom(*alg, a, b, opts.hom)).first;
    }
    return it->second;
  };

  // Step (c).
  int level = 0;
  while (!list.empty()) {
    ++level;
    std::vector<Vertex> children;
    for (const ListEntry& e : list) children.push_back(e.child);
    std::vector<EndResult> ends = ends_parallel(*alg, children, opts);

    std::vector<ListEntry> next;
    std::unordered_map<Vertex, std::size_t, VertexHash> next_index;

    for (std::size_t i = 0; i < list.size(); ++i) {
      ListEntry& ei = list[i];
      const int v = ei.parent;
      const Vertex& vp = ei.child;
      if (ends[i].stability == Stability::kUnstable) {
        const int id = g.add_vertex(make_vertex(vp, std::move(ends[i]), v, level));
        out_degree.push_back(0);
        add_tree_edges(v, id);
        link(v, id);
        ei.alive = false;
        continue;
      }

      bool matched = false;
      for (std::size_t j = 0; j < i && !matched; ++j) {
        ListEntry& ej = list[j];
        if (!ej.alive) continue;
        const int w_id = g.find(ej.child);
        QG_CHECK(w_id >= 0, "earlier list entry without a graph vertex");
        const HomSet& h = hom_of(vp, ej.child);
        if (h.empty()) continue;

        const QuatElem& ge = h.basis.front();
        const Vertex image = act_quat(*alg, ge, g.vertices[v].nf);
        QuotientEdge pe{v, w_id, g.multiplicity(v, w_id), EdgeKind::kPairing,
                        Edge{g.vertices[v].nf, vp, 0}, ge, image};
        QuotientEdge oe{w_id, v, g.multiplicity(w_id, v), EdgeKind::kOpposite,
                        pe.tree_edge, ge, image};
        g.add_edge(std::move(pe));
        g.add_edge(std::move(oe));
        link(v, w_id);
        ei.alive = false;
        matched = true;

        auto it = next_index.find(image);
        QG_CHECK(it != next_index.end() && next[it->second].alive &&
                     next[it->second].parent == w_id,
                 "paired neighbour missing from the next list");
        next[it->second].alive = false;
        if (degree_of(w_id) == q + 1) ej.alive = false;
      }
      if (matched) continue;

      const int id = g.add_vertex(make_vertex(vp, std::move(ends[i]), v, level));
      out_degree.push_back(0);
      add_tree_edges(v, id);
      link(v, id);
      const Vertex& parent_nf = g.vertices[v].nf;
      for (const Vertex& u : neighbors(f, vp)) {
        if (u == parent_nf) continue;
        next_index.emplace(u, next.size());
        next.push_back({id, u});
      }
    }

    list.clear();
    for (ListEntry& e : next) {
      if (e.alive) list.push_back(std::move(e));
    }
  }
  g.levels = level;
  return g;
}

// ---------------------------------------------------------------------------
// Presentation and words.

namespace {

std::string vertex_name(int k) { return "g_v" + std::to_string(k); }

void append(Word& w, int gen, long long exp) {
  if (exp == 0) return;
  if (!w.empty() && w.back().gen == gen) {
    w.back().exp += exp;
    if (w.back().exp == 0) w.pop_back();
    return;
  }
  w.push_back({gen, exp});
}

struct GeneratorIndex {
  std::vector<int> of_vertex;  // vertex id -> generator, or -1
  std::vector<int> of_edge;    // edge id -> generator, or -1
};

GeneratorIndex index_generators(const QuotientGraph& g, const Presentation& p) {
  GeneratorIndex gi{std::vector<int>(g.vertices.size(), -1),
                    std::vector<int>(g.edges.size(), -1)};
  for (int k = 0; k < static_cast<int>(p.generators.size()); ++k) {
    if (p.vertex_of[k] >= 0) gi.of_vertex[p.vertex_of[k]] = k;
    if (p.edge_of[k] >= 0) gi.of_edge[p.edge_of[k]] = k;
  }
  return gi;
}

Presentation build_presentation(const QuotientGraph& g) {
  Presentation p;
  p.names.push_back("g0");
  p.generators.push_back(g.g0);
  p.vertex_of.push_back(-1);
  p.edge_of.push_back(-1);
  int k = 0;
  for (int id : g.terminal_vertices()) {
    p.names.push_back(vertex_name(++k));
    p.generators.push_back(g.vertices[id].stabilizer_generator);
    p.vertex_of.push_back(id);
    p.edge_of.push_back(-1);
  }
  p.num_vertex_generators = k;
  k = 0;
  for (int id : g.pairing_edges()) {
    p.names.push_back("g" + std::to_string(++k));
    p.generators.push_back(g.edges[id].pairing);
    p.vertex_of.push_back(-1);
    p.edge_of.push_back(id);
  }
  p.num_edge_generators = k;
  return p;
}

}  // namespace

Presentation presentation(const QuotientGraph& g) {
  const AlgebraData& alg = *g.alg;
  const int q = alg.field().q();
  Presentation p = build_presentation(g);
  const QuatElem one = alg.one();

  QG_CHECK(alg.pow(g.g0, q - 1) == one, "g0^(q-1) != 1");
  QG_CHECK(has_order(alg, g.g0, q - 1), "g0 does not generate F_q^*");
  p.relations.push_back("g0^" + std::to_string(q - 1) + " = 1");
  for (std::size_t k = 1; k < p.generators.size(); ++k) {
    const QuatElem& x = p.generators[k];
    if (p.vertex_of[k] >= 0) {
      QG_CHECK(alg.pow(x, q + 1) == g.g0, p.names[k] + "^(q+1) != g0");
      p.relations.push_back(p.names[k] + "^" + std::to_string(q + 1) + " = g0");
    } else {
      QG_CHECK(alg.mul(x, g.g0) == alg.mul(g.g0, x), p.names[k] + " does not commute with g0");
      p.relations.push_back("[" + p.names[k] + ", g0] = 1");
    }
  }
  return p;
}

QuatElem evaluate_word(const AlgebraData& alg, const Presentation& p,
                       const Word& w) {
  QuatElem x = alg.one();
  for (const Letter& l : w) {
    QG_CHECK(l.gen >= 0 && l.gen < static_cast<int>(p.generators.size()),
             "word letter out of range");
    x = alg.mul(x, alg.pow(p.generators[l.gen], l.exp));
  }
  return x;
}

ReductionResult reduce(const QuotientGraph& g, const Presentation& p,
                       const Vertex& v) {
  const AlgebraData& alg = *g.alg;
  const Field& f = alg.field();
  const int q = f.q();
  const GeneratorIndex gi = index_generators(g, p);
  const Vertex& base = g.vertices[g.initial].nf;

  Vertex cur = v;
  QuatElem prod = alg.one();  // cur = prod * v
  std::vector<Letter> steps;  // letters of the elements applied, in order
  int last_dist = -1;
  for (;;) {
    const int id = g.find(cur);
    if (id >= 0) {
      ReductionResult res;
      res.w = cur;
      res.w_id = id;
      res.gamma = alg.inverse(prod);
      res.steps = static_cast<int>(steps.size());
      for (const Letter& l : steps) append(res.word, l.gen, -l.exp);
      return res;
    }
    const std::vector<Vertex> path = geodesic(f, cur, base);
    std::size_t at = 0;
    while (g.find(path[at]) < 0) ++at;
    QG_CHECK(at >= 1, "reduction: geodesic does not leave the graph");
    QG_CHECK(last_dist < 0 || static_cast<int>(at) < last_dist,
             "reduction did not decrease the distance");
    last_dist = static_cast<int>(at);
    const int vi = g.find(path[at]);
    const Vertex& next = path[at - 1];

    QuatElem gamma;
    Letter letter{};
    if (g.vertices[vi].stability == Stability::kUnstable) {
      const QuatElem& gv = g.vertices[vi].stabilizer_generator;
      QuatElem x = alg.one();
      bool found = false;
      for (int k = 1; k <= q && !found; ++k) {
        x = alg.mul(gv, x);
        if (g.find(act_quat(alg, x, next, g.prec_cap)) >= 0) {
          gamma = x;
          letter = {gi.of_vertex[vi], k};
          found = true;
        }
      }
      QG_CHECK(found, "reduction: no stabilizer element moves into the graph");
    } else {
      bool found = false;
      for (int eid = 0; eid < static_cast<int>(g.edges.size()) && !found; ++eid) {
        const QuotientEdge& e = g.edges[eid];
        if (e.kind != EdgeKind::kPairing) continue;
        if (e.src == vi && e.tree_edge.target == next) {
          gamma = e.pairing;  // case (ii)
          letter = {gi.of_edge[eid], 1};
          found = true;
        } else if (e.dst == vi && e.image == next) {
          gamma = alg.inverse(e.pairing);  // case (i)
          letter = {gi.of_edge[eid], -1};
          found = true;
        }
      }
      QG_CHECK(found, "reduction: no edge label moves towards the graph");
    }
    QG_CHECK(letter.gen >= 0, "reduction: label without a generator");
    cur = act_quat(alg, gamma, cur, g.prec_cap);
    prod = alg.mul(gamma, prod);
    steps.push_back(letter);
  }
}

ReductionResult reduce(const QuotientGraph& g, const Vertex& v) {
  return reduce(g, build_presentation(g), v);
}

Word express_in_generators(const QuotientGraph& g, const Presentation& p,
                           const QuatElem& gamma) {
  const AlgebraData& alg = *g.alg;
  if (!alg.is_unit(gamma)) {
    throw InvalidInput("element is not a unit of the order");
  }
  const int b = g.initial;
  const Vertex& base = g.vertices[b].nf;
  ReductionResult r = reduce(g, p, act_quat(alg, gamma, base, g.prec_cap));
  QG_CHECK(r.w_id == b, "reduction of the base orbit left the base vertex");
  // gamma = r.gamma * s with s in the stabilizer of the base vertex.
  const QuatElem s = alg.mul(alg.inverse(r.gamma), gamma);
  Word w = std::move(r.word);
  const long long q = alg.field().q();
  int gen = 0;
  QuatElem x = alg.one();
  long long order = q - 1;
  if (g.vertices[b].stability == Stability::kUnstable) {
    const GeneratorIndex gi = index_generators(g, p);
    gen = gi.of_vertex[b];
    order = q * q - 1;
  }
  const QuatElem& y = p.generators[gen];
  for (long long k = 0; k < order; ++k) {
    if (x == s) {
      append(w, gen, k);
      QG_CHECK(evaluate_word(alg, p, w) == gamma, "word does not evaluate to the input");
      return w;
    }
    x = alg.mul(x, y);
  }
  throw InternalError("stabilizer residue not a power of its generator");
}

// ---------------------------------------------------------------------------
// Verification.

bool StructureReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string eq_detail(long long got, long long want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

}  // namespace

StructureReport verify_structure(const QuotientGraph& g, const VerifyOptions& opts) {
  const AlgebraData& alg = *g.alg;
  const Field& f = alg.field();
  const long long q = f.q();
  const RamificationSet& ram = alg.ram();
  StructureReport rep;
  auto check = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const int nv = static_cast<int>(g.vertices.size());
  rep.num_vertices = nv;
  rep.num_edges = static_cast<long long>(g.edges.size());
  std::vector<int> deg(nv, 0);
  bool loops = false;
  for (const QuotientEdge& e : g.edges) {
    deg[e.src]++;
    loops = loops || e.src == e.dst;
  }
  check("no loops", !loops, loops ? "graph has a loop" : "");

  bool deg_ok = true;
  std::string deg_detail;
  for (int i = 0; i < nv; ++i) {
    const bool unstable = g.vertices[i].stability == Stability::kUnstable;
    const int want = unstable ? 1 : static_cast<int>(q + 1);
    if (deg[i] == 1) rep.v1++;
    if (deg[i] == q + 1) rep.v_q1++;
    if (deg[i] != want && deg_ok) {
      deg_ok = false;
      deg_detail = "vertex " + std::to_string(i) + " has degree " + std::to_string(deg[i]);
    }
  }
  check("degrees in {1, q+1} matching stability", deg_ok, deg_detail);

  // g(R) (q^2 - 1) = (q^2 - 1) + prod (q^deg p - 1) - q (q - 1) 2^(#R-1) odd(R).
  rep.odd = ram.odd;
  const int nr = static_cast<int>(ram.primes.size());
  long long prod = 1;
  for (const Poly& p : ram.primes) prod *= ipow(q, p.degree()) - 1;
  const long long two = 1LL << (nr - 1);
  const long long num = (q * q - 1) + prod - q * (q - 1) * two * (ram.odd ? 1 : 0);
  check("g(R) integral", num % (q * q - 1) == 0, std::to_string(num) + " / (q^2-1)");
  rep.genus = num / (q * q - 1);
  rep.expected_v1 = ram.odd ? two : 0;
  const long long vq_num = 2 * rep.genus - 2 + rep.expected_v1;
  rep.expected_v_q1 = vq_num / (q - 1);
  check("V_1 = 2^(#R-1) odd(R)", rep.v1 == rep.expected_v1, eq_detail(rep.v1, rep.expected_v1));
  check("V_(q+1) = (2g(R)-2+V_1)/(q-1)",
        vq_num % (q - 1) == 0 && rep.v_q1 == rep.expected_v_q1,
        eq_detail(rep.v_q1, rep.expected_v_q1));

  rep.h1 = rep.num_edges / 2 - nv + 1;
  rep.paired = static_cast<long long>(g.pairing_edges().size());
  check("h_1 = g(R)", rep.h1 == rep.genus, eq_detail(rep.h1, rep.genus));
  check("h_1 = #paired edges", rep.h1 == rep.paired, eq_detail(rep.paired, rep.h1));

  long long tree_edges = 0;
  for (const QuotientEdge& e : g.edges) tree_edges += e.kind == EdgeKind::kTree;
  check("tree edges span the vertices", tree_edges == 2LL * (nv - 1),
        eq_detail(tree_edges, 2LL * (nv - 1)));

  // Diameter by BFS from every vertex.
  std::vector<std::vector<int>> adj(nv);
  for (const QuotientEdge& e : g.edges) adj[e.src].push_back(e.dst);
  bool connected = true;
  for (int s = 0; s < nv; ++s) {
    std::vector<int> dist(nv, -1);
    std::deque<int> dq{s};
    dist[s] = 0;
    while (!dq.empty()) {
      const int x = dq.front();
      dq.pop_front();
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          dq.push_back(y);
        }
      }
    }
    for (int d : dist) {
      if (d < 0) connected = false;
      rep.diameter = std::max(rep.diameter, d);
    }
  }
  check("connected", connected, "");
  const double lq = std::log(static_cast<double>(q));
  const double extra = 2.0 * (2.0 * std::log(2.0) / lq + 1.0 - std::log(q - 1.0) / lq);
  rep.diameter_bound = 2.0 * ram.degree + extra;
  rep.improved_diameter_bound = 2 * ram.degree - 4;
  if (nv >= 3) {
    check("diameter bound", rep.diameter <= rep.diameter_bound,
          std::to_string(rep.diameter) + " <= " +
              std::to_string(static_cast<long long>(std::floor(rep.diameter_bound + 1e-9))));
  }

  // Label heights.
  rep.global_height_bound =
      static_cast<int>(std::floor(alg.m() + rep.diameter_bound + 1e-9));
  bool local_ok = true;
  bool global_ok = true;
  std::string local_detail;
  auto label = [&](const QuatElem& x, int bound, const std::string& what) {
    const int h = height(x);
    rep.max_label_height = std::max(rep.max_label_height, h);
    if (h > bound && local_ok) {
      local_ok = false;
      local_detail = what + " height " + std::to_string(h) + " > " + std::to_string(bound);
    }
    global_ok = global_ok && h <= rep.global_height_bound;
  };
  for (int i = 0; i < nv; ++i) {
    const QuotientVertex& v = g.vertices[i];
    const int bound = alg.m() + distance_to_base(v.nf);
    for (const QuatElem& x : v.end_basis) label(x, bound, "vertex " + std::to_string(i));
    if (v.stability == Stability::kUnstable) {
      label(v.stabilizer_generator, bound, "vertex " + std::to_string(i));
    }
  }
  for (int id : g.pairing_edges()) {
    const QuotientEdge& e = g.edges[id];
    const int n = std::max(distance_to_base(e.tree_edge.target),
                           distance_to_base(g.vertices[e.dst].nf));
    label(e.pairing, alg.m() + n, "edge " + std::to_string(id));
  }
  check("label heights <= deg(alpha)/2 + distance", local_ok, local_detail);
  check("label heights <= global bound", global_ok,
        std::to_string(rep.max_label_height) + " <= " +
            std::to_string(rep.global_height_bound));

  // Pairing labels glue back into the tree of representatives.
  bool pair_ok = true;
  for (int id : g.pairing_edges()) {
    const QuotientEdge& e = g.edges[id];
    pair_ok = pair_ok && g.find(e.tree_edge.origin) == e.src &&
              g.find(e.tree_edge.target) < 0 &&
              act_quat(alg, e.pairing, e.tree_edge.target, g.prec_cap) == g.vertices[e.dst].nf &&
              act_quat(alg, e.pairing, e.tree_edge.origin, g.prec_cap) == e.image;
  }
  check("edge pairing maps t(e) into the tree", pair_ok, "");

  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      const long long n = g.multiplicity(i, j);
      rep.two_cycles += n * (n - 1) / 2;
      rep.ordered_two_cycles += n * (n - 1);
    }
  }

  if (opts.check_presentation) {
    try {
      const Presentation p = presentation(g);
      check("presentation relations", true,
            std::to_string(p.generators.size()) + " generators");
    } catch (const InternalError& e) {
      check("presentation relations", false, e.what());
    }
  }
  return rep;
}

}  // namespace quatgraph
