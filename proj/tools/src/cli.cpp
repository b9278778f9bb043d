// Copyright 2026 The quatgraph Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "quatgraph_cli/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "quatgraph/errors.hpp"
#include "quatgraph/graph_io.hpp"
#include "quatgraph/text_format.hpp"

namespace quatgraph::cli {

namespace fs = std::filesystem;

namespace {

struct JobConfig {
  int q = 0;
  std::string modulus;
  std::string primes;
  std::string graph_path;
  std::string output;
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  bool no_verify = false;
  bool no_degree_bound = false;
  int threads = 1;
  int precision_cap = 1 << 14;
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InvalidInput("bad modulus coefficient '" + part + "'");
    }
  }
  return out;
}

FieldSpec field_spec(const JobConfig& c) {
  if (c.q == 0) throw InvalidInput("--q is required");
  return FieldSpec::from_q(c.q, c.modulus.empty() ? std::vector<int>{} : parse_int_list(c.modulus));
}

std::shared_ptr<const AlgebraData> make_algebra(const JobConfig& c) {
  const FieldSpec spec = field_spec(c);
  if (c.primes.empty()) throw InvalidInput("--primes is required");
  const std::vector<Poly> primes = parse_poly_list(Field::get(spec), c.primes);
  BuildOptions opts;
  opts.check_degree_bound = !c.no_degree_bound;
  return build_algebra(spec, primes, opts);
}

fs::path cache_root(const JobConfig& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* e = std::getenv("QUATGRAPH_CACHE_DIR"); e && *e) return e;
  if (const char* e = std::getenv("XDG_CACHE_HOME"); e && *e) return fs::path(e) / "quatgraph";
  if (const char* e = std::getenv("HOME"); e && *e) return fs::path(e) / ".cache" / "quatgraph";
  return {};
}

// FNV-1a, stable across platforms unlike std::hash.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

fs::path cache_file(const JobConfig& c, const AlgebraData& alg) {
  const fs::path root = cache_root(c);
  if (c.no_cache || root.empty()) return {};
  std::ostringstream key;
  key << "v" << kGraphFormatVersion << "|q=" << alg.field().q() << "|mod=";
  for (int m : alg.field().spec().modulus) key << m << ',';
  key << "|alpha=" << alg.alpha().to_string() << "|primes=";
  for (const Poly& p : alg.ram().primes) key << p.to_string() << ',';
  std::ostringstream name;
  name << "graph-q" << alg.field().q() << '-' << std::hex << std::setw(16) << std::setfill('0')
       << fnv1a(key.str()) << ".v" << std::dec << kGraphFormatVersion << ".json";
  return root / name.str();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& data) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write '" + p.string() + "'");
  out << data;
}

void store_cache(const fs::path& file, const std::string& json) {
  if (file.empty()) return;
  std::error_code ec;
  fs::create_directories(file.parent_path(), ec);
  if (ec) return;
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << json;
  }
  fs::rename(tmp, file, ec);
}

QuotientGraph compute_graph(const JobConfig& c, std::shared_ptr<const AlgebraData> alg) {
  QuotientOptions opts;
  opts.threads = std::max(1, c.threads);
  QuotientGraph g = compute_quotient(std::move(alg), opts);
  g.prec_cap = c.precision_cap;
  return g;
}

// The graph from --graph, the cache, or a fresh computation.
QuotientGraph obtain_graph(const JobConfig& c) {
  if (!c.graph_path.empty()) {
    QuotientGraph g = graph_from_json(read_file(c.graph_path));
    g.prec_cap = c.precision_cap;
    return g;
  }
  auto alg = make_algebra(c);
  const fs::path file = cache_file(c, *alg);
  if (!file.empty() && fs::exists(file)) {
    try {
      QuotientGraph g = graph_from_json(read_file(file));
      if (g.alg->alpha() == alg->alpha() && g.alg->ram().primes == alg->ram().primes) {
        g.prec_cap = c.precision_cap;
        return g;
      }
    } catch (const InvalidInput&) {
      // Stale or damaged cache entry; recompute below.
    }
  }
  QuotientGraph g = compute_graph(c, alg);
  store_cache(file, graph_to_json(g));
  return g;
}

std::string render(const QuotientGraph& g, const std::string& format,
                   const StructureReport* report) {
  if (format == "json") return graph_to_json(g);
  if (format == "dot") return graph_to_dot(g);
  if (format == "text") return graph_summary(g, report);
  throw InvalidInput("unknown format '" + format + "'");
}

void emit(const JobConfig& c, const std::string& data, std::ostream& out) {
  if (c.output.empty() || c.output == "-") {
    out << data;
  } else {
    write_file(c.output, data);
  }
}

int cmd_compute(const JobConfig& c, std::ostream& out, std::ostream& err) {
  auto alg = make_algebra(c);
  QuotientGraph g = compute_graph(c, alg);
  store_cache(cache_file(c, *alg), graph_to_json(g));
  std::optional<StructureReport> rep;
  if (!c.no_verify) rep = verify_structure(g);
  emit(c, render(g, c.format, rep ? &*rep : nullptr), out);
  if (rep && c.format != "text") {
    std::ostream& s = (c.output.empty() || c.output == "-") ? err : out;
    s << graph_summary(g, &*rep);
  }
  return rep && !rep->passed() ? kExitVerifyFailed : kExitOk;
}

int cmd_verify(const JobConfig& c, std::ostream& out) {
  const QuotientGraph g = obtain_graph(c);
  const StructureReport rep = verify_structure(g);
  out << graph_summary(g, &rep);
  return rep.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_export(const JobConfig& c, std::ostream& out) {
  const QuotientGraph g = obtain_graph(c);
  emit(c, render(g, c.format, nullptr), out);
  return kExitOk;
}

int cmd_reduce(const JobConfig& c, const std::string& vertex, std::ostream& out) {
  const QuotientGraph g = obtain_graph(c);
  const AlgebraData& alg = *g.alg;
  const Vertex v = parse_vertex(alg.field(), vertex);
  const Presentation p = presentation(g);
  const ReductionResult r = reduce(g, p, v);
  QG_CHECK(act_quat(alg, r.gamma, r.w, g.prec_cap) == v, "reduction self-check failed");
  QG_CHECK(evaluate_word(alg, p, r.word) == r.gamma, "reduction word self-check failed");
  out << "w: " << format_vertex(alg.field(), r.w) << "\n";
  out << "gamma: " << format_quat(r.gamma) << "\n";
  out << "word: " << format_word(p, r.word) << "\n";
  return kExitOk;
}

int cmd_present(const JobConfig& c, std::ostream& out) {
  const QuotientGraph g = obtain_graph(c);
  const Presentation p = presentation(g);
  out << "generators: " << p.generators.size() << " (1 + " << p.num_vertex_generators
      << " + " << p.num_edge_generators << ")\n";
  for (std::size_t k = 0; k < p.generators.size(); ++k) {
    out << "  " << p.names[k] << " = " << format_quat(p.generators[k]);
    if (p.vertex_of[k] >= 0) {
      out << "  [stabilizer of " << format_vertex(g.alg->field(), g.vertices[p.vertex_of[k]].nf)
          << "]";
    }
    out << "\n";
  }
  out << "relations:\n";
  for (const std::string& r : p.relations) out << "  " << r << "\n";
  return kExitOk;
}

int cmd_word(const JobConfig& c, const std::string& elem, std::ostream& out) {
  const QuotientGraph g = obtain_graph(c);
  const AlgebraData& alg = *g.alg;
  const QuatElem x = parse_quat(alg, elem);
  if (!alg.is_unit(x)) throw InvalidInput("nrd not in F_q^*");
  const Presentation p = presentation(g);
  const Word w = express_in_generators(g, p, x);
  QG_CHECK(evaluate_word(alg, p, w) == x, "word self-check failed");
  out << format_word(p, w) << "\n";
  return kExitOk;
}

int cmd_hom(const JobConfig& c, const std::string& a, const std::string& b, std::ostream& out) {
  auto alg = make_algebra(c);
  const Vertex v = parse_vertex(alg->field(), a);
  const Vertex w = parse_vertex(alg->field(), b);
  const HomSet h = hom(*alg, v, w);
  out << "dim: " << h.dim() << "\n";
  out << "#Hom: " << h.cardinality(alg->field().q()) << "\n";
  for (const QuatElem& x : h.basis) out << "  " << format_quat(x) << "\n";
  return kExitOk;
}

void add_algebra_options(CLI::App* sub, JobConfig& c) {
  sub->add_option("--q", c.q, "Field size, an odd prime power");
  sub->add_option("--modulus", c.modulus,
                  "Comma-separated coefficients of the F_q modulus, constant term first");
  sub->add_option("--primes", c.primes, "Comma-separated ramified primes, e.g. T,T+1");
  sub->add_flag("--no-degree-bound", c.no_degree_bound,
                "Allow alpha beyond the degree-bound table");
  sub->add_option("--precision-cap", c.precision_cap, "Largest working precision in pi-digits")
      ->check(CLI::PositiveNumber);
}

void add_graph_options(CLI::App* sub, JobConfig& c) {
  add_algebra_options(sub, c);
  sub->add_option("--graph", c.graph_path, "Load a JSON graph artifact instead of computing");
  sub->add_option("--cache-dir", c.cache_dir, "Directory for cached graph artifacts");
  sub->add_flag("--no-cache", c.no_cache, "Neither read nor write the artifact cache");
  sub->add_option("--threads", c.threads, "Worker threads for stabilizer solves")
      ->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App* sub, JobConfig& c) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  sub->add_option("--output,-o", c.output, "Output path, default stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quotient graphs of maximal-order unit groups acting on Bruhat-Tits trees",
               "quatgraph"};
  app.require_subcommand(1);
  JobConfig c;
  std::string vertex, elem, hom_a, hom_b;

  CLI::App* compute = app.add_subcommand("compute", "Compute the quotient graph");
  add_graph_options(compute, c);
  add_output_options(compute, c);
  compute->add_flag("--no-verify", c.no_verify, "Skip the structural verification");

  CLI::App* verify = app.add_subcommand("verify", "Run the structural verification suite");
  add_graph_options(verify, c);

  CLI::App* exp = app.add_subcommand("export", "Write a graph as JSON, DOT or text");
  add_graph_options(exp, c);
  add_output_options(exp, c);

  CLI::App* red = app.add_subcommand("reduce", "Reduce a tree vertex into the quotient graph");
  add_graph_options(red, c);
  red->add_option("vertex", vertex, "Vertex, e.g. \"(4; 0)\" or \"(2; 3*pi)\"")->required();

  CLI::App* present = app.add_subcommand("present", "Print the presentation of the group");
  add_graph_options(present, c);

  CLI::App* word = app.add_subcommand("word", "Write a unit as a word in the generators");
  add_graph_options(word, c);
  word->add_option("element", elem, "Element, e.g. \"1 + (T+1)*i + j\"")->required();

  CLI::App* homc = app.add_subcommand("hom", "Compute Hom(v, w) between two tree vertices");
  add_algebra_options(homc, c);
  homc->add_option("source", hom_a, "Source vertex")->required();
  homc->add_option("target", hom_b, "Target vertex")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  }

  try {
    if (*compute) return cmd_compute(c, out, err);
    if (*verify) return cmd_verify(c, out);
    if (*exp) return cmd_export(c, out);
    if (*red) return cmd_reduce(c, vertex, out);
    if (*present) return cmd_present(c, out);
    if (*word) return cmd_word(c, elem, out);
    if (*homc) return cmd_hom(c, hom_a, hom_b, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const InsufficientPrecision& e) {
    err << "error: " << e.what() << " (raise --precision-cap)\n";
    return kExitInternal;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUserError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace quatgraph::cli
