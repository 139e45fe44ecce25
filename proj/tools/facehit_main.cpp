#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "facehit/domatic.hpp"
#include "facehit/errors.hpp"
#include "facehit/generators.hpp"
#include "facehit/oracle.hpp"
#include "facehit/plg.hpp"
#include "facehit/triangulation.hpp"
#include "facehit/verify.hpp"

namespace {

using namespace facehit;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

// Exit codes shared with the test harness: 0 ok, 1 invalid embedding,
// 2 parse error, 3 precondition/domain error, 4 budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitEmbedding = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitBudget = 4;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

// One line of provenance per run, on stderr so stdout stays byte-stable
// for replay comparisons (timing can never be deterministic).
struct RunManifest {
  std::string command;
  std::string digest;  // fnv1a64 of the input file (or generated output)
  std::vector<std::uint64_t> seeds;
  std::string result;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  void emit() const {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    json m;
    m["command"] = command;
    m["digest"] = digest;
    m["seeds"] = seeds;
    m["result"] = result;
    m["timing_ms"] = ms;
    m["version"] = kVersion;
    std::cerr << m.dump() << "\n";
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + out_path);
  out << text;
}

std::string join_ids(const std::vector<VertexId>& ids) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ids.size(); ++i)
    os << (i ? " " : "") << ids[i];
  return os.str();
}

json ids_json(const std::vector<VertexId>& ids) {
  json a = json::array();
  for (VertexId v : ids) a.push_back(v);
  return a;
}

// --- validate ---------------------------------------------------------

int cmd_validate(const std::string& path, RunManifest& man) {
  std::string text = read_file(path);
  man.digest = hex64(fnv1a64(text));
  PlgDocument doc;
  try {
    doc = parse_plg(text);
  } catch (const ParseError& e) {
    std::cout << "parse: FAIL " << e.what() << "\n";
    man.result = "parse-error";
    return kExitParse;
  }
  std::cout << "parse: ok\n";
  PlaneMultigraph g;
  try {
    g = build_graph(doc.data);
  } catch (const InvalidEmbeddingError& e) {
    std::cout << "embedding: FAIL " << e.what() << "\n";
    man.result = "invalid-embedding";
    return kExitEmbedding;
  }
  std::cout << "embedding: ok\n";
  std::cout << "vertices=" << g.vertex_count() << " edges=" << g.edge_count()
            << " faces=" << g.global_faces().size()
            << " components=" << g.component_count() << "\n";
  auto iso = g.first_isolated_vertex();
  auto loop = g.first_self_loop();
  auto lens = g.first_forbidden_two_face();
  std::cout << "isolated-vertex: "
            << (iso ? "vertex " + std::to_string(*iso) : "none") << "\n";
  std::cout << "self-loop: " << (loop ? "edge " + std::to_string(*loop) : "none")
            << "\n";
  std::cout << "forbidden-2-face: "
            << (lens ? "face " + std::to_string(*lens) : "none") << "\n";
  man.result = "valid";
  return kExitOk;
}

// --- color ------------------------------------------------------------

int cmd_color(const std::string& path, bool check, bool as_json,
              RunManifest& man) {
  std::string text = read_file(path);
  man.digest = hex64(fnv1a64(text));
  PlaneMultigraph g = build_graph(parse_plg(text).data);

  TwoColoring psi = theorem_coloring(g);
  std::vector<VertexId> a = psi.class_of(Color::A);
  std::vector<VertexId> b = psi.class_of(Color::B);
  ColoringAudit audit = audit_two_coloring(g, psi);

  std::string check_note;
  if (check) {
    if (g.vertex_count() <= OracleBudget{}.max_vertices) {
      if (!oracle_coloring_ok(g, psi, /*require_3plus_only=*/false))
        throw InternalInvariantError("oracle audit disagrees with the run");
      check_note = "oracle agrees";
    } else {
      check_note = "skipped (" + std::to_string(g.vertex_count()) +
                   " vertices exceed the oracle budget)";
    }
  }

  if (as_json) {
    json out;
    out["n"] = g.vertex_count();
    out["class_a"] = ids_json(a);
    out["class_b"] = ids_json(b);
    out["audit"]["domatic"] = audit.domatic;
    out["audit"]["polychromatic"] = audit.polychromatic;
    out["audit"]["polychromatic_3plus"] = audit.polychromatic_3plus;
    if (check) out["check"] = check_note;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "class A (" << a.size() << "): " << join_ids(a) << "\n";
    std::cout << "class B (" << b.size() << "): " << join_ids(b) << "\n";
    std::cout << "audit: domatic=" << (audit.domatic ? "yes" : "no")
              << " polychromatic=" << (audit.polychromatic ? "yes" : "no")
              << "\n";
    if (check) std::cout << "check: " << check_note << "\n";
  }
  man.result = "ok";
  return kExitOk;
}

// --- dominate ---------------------------------------------------------

int cmd_dominate(const std::string& path, const std::string& mis,
                 std::uint64_t seed, bool exact, bool as_json,
                 RunManifest& man) {
  std::string text = read_file(path);
  man.digest = hex64(fnv1a64(text));
  PlaneMultigraph g = build_graph(parse_plg(text).data);

  std::optional<std::vector<VertexId>> given;
  if (!mis.empty()) {
    MisStrategy strategy = mis == "min"   ? MisStrategy::min_degree_first
                           : mis == "max" ? MisStrategy::max_degree_first
                                          : MisStrategy::random_order;
    if (mis == "random") man.seeds.push_back(seed);
    given = greedy_mis(g, strategy, seed);
  }
  auto [s, report] = corollary_dominating_set(g, given);

  if (exact) {
    if (!report.gamma_exact) {
      OracleBudget budget;
      budget.max_vertices = g.vertex_count();  // caller insists: try anyway
      report.gamma_exact = min_dominating_exact(g, budget).size;
    }
  } else {
    report.gamma_exact.reset();
  }

  if (as_json) {
    json out;
    out["s"] = ids_json(s);
    out["report"]["n"] = report.n;
    out["report"]["independent_size"] = report.independent_size;
    out["report"]["alpha"] = report.alpha.str();
    out["report"]["dominating_size"] = report.dominating_size;
    out["report"]["bound_mt"] = report.bound_mt.str();
    out["report"]["bound_crr"] = report.bound_crr.str();
    out["report"]["bound_ours"] = report.bound_ours.str();
    if (report.gamma_exact)
      out["report"]["gamma_exact"] = *report.gamma_exact;
    out["report"]["winner"] = report.winner;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "dominating set (" << s.size() << "): " << join_ids(s) << "\n";
    std::cout << bound_csv_header() << "\n" << bound_csv_row(report) << "\n";
  }
  man.result = "ok";
  return kExitOk;
}

// --- bench ------------------------------------------------------------

int cmd_bench(int count, int n, std::uint64_t seed, RunManifest& man) {
  std::vector<BoundReport> reports;
  std::cout << bound_csv_header() << "\n";
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    man.seeds.push_back(s);
    PlaneMultigraph g = stacked_triangulation(n, s);
    BoundReport r = corollary_dominating_set(g).second;
    reports.push_back(r);
    std::cout << bound_csv_row(r) << "\n";
  }
  BoundSummary sum = compare_bounds(reports);
  std::cout << "\nsummary: instances=" << sum.instances
            << " alpha_above_3/7=" << sum.fraction_alpha_beats_crr.str()
            << " mis_below_2n/7=" << sum.fraction_mis_below_crr.str()
            << " mean_ratio=" << sum.mean_ratio.str() << "\n";
  man.result = "ok";
  return kExitOk;
}

// --- oracle -----------------------------------------------------------

int cmd_oracle(const std::string& path, const std::string& task,
               bool three_plus_only, int max_vertices, long long max_nodes,
               bool as_json, RunManifest& man) {
  std::string text = read_file(path);
  man.digest = hex64(fnv1a64(text));
  PlaneMultigraph g = build_graph(parse_plg(text).data);
  OracleBudget budget;
  if (max_vertices > 0) budget.max_vertices = max_vertices;
  if (max_nodes > 0) budget.max_nodes = max_nodes;

  json out;
  std::ostringstream human;
  if (task == "gamma" || task == "beta" || task == "alpha") {
    OracleResult r = task == "gamma"  ? min_dominating_exact(g, budget)
                     : task == "beta" ? min_face_hitting_exact(g, budget)
                                      : max_independent_exact(g, budget);
    out[task] = r.size;
    out["witness"] = ids_json(r.witness);
    human << task << "=" << r.size << "\nwitness: " << join_ids(r.witness)
          << "\n";
    man.result = task + "=" + std::to_string(r.size);
  } else {  // exists
    std::optional<TwoColoring> found =
        exists_dp_two_coloring(g, three_plus_only, budget);
    if (found) {
      std::vector<VertexId> a = found->class_of(Color::A);
      std::vector<VertexId> b = found->class_of(Color::B);
      out["coloring"] = "found";
      out["class_a"] = ids_json(a);
      out["class_b"] = ids_json(b);
      human << "coloring: found\nclass A (" << a.size()
            << "): " << join_ids(a) << "\nclass B (" << b.size()
            << "): " << join_ids(b) << "\n";
      man.result = "coloring-found";
    } else {
      out["coloring"] = "none";
      human << "coloring: none\n";
      man.result = "coloring-none";
    }
  }
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << human.str();
  return kExitOk;
}

// --- gen --------------------------------------------------------------

int cmd_gen(const std::string& family, int n, int k, std::uint64_t seed,
            const std::string& out_path, RunManifest& man) {
  PlaneMultigraph g;
  if (family == "stacked") {
    man.seeds.push_back(seed);
    g = stacked_triangulation(n, seed);
  } else if (family == "theorem") {
    man.seeds.push_back(seed);
    g = random_theorem_instance(n, seed);
  } else if (family == "edges") {
    g = disjoint_family(FamilyKind::edges, k);
  } else if (family == "paths") {
    g = disjoint_family(FamilyKind::paths_3edge, k);
  } else if (family == "cycles") {
    g = disjoint_family(FamilyKind::cycles_4, k);
  } else if (family == "doubled-k4") {
    g = doubled_k4_family(k);
  } else if (family == "loop-gadget") {
    g = loop_gadget();
  } else {
    throw BadParameterError("unknown family " + family);
  }
  std::string text = write_plg(g.to_data());
  man.digest = hex64(fnv1a64(text));
  write_output(text, out_path);
  man.result = "ok";
  return kExitOk;
}

// --- render -----------------------------------------------------------

int cmd_render(const std::string& path, const std::string& out_path,
               RunManifest& man) {
  std::string text = read_file(path);
  man.digest = hex64(fnv1a64(text));
  PlgDocument doc = parse_plg(text);
  PlaneMultigraph g = build_graph(doc.data);

  std::map<VertexId, std::string> fills;
  try {
    TwoColoring psi = theorem_coloring(g);
    for (const auto& [v, c] : psi.assignment)
      fills[v] = c == Color::A ? "lightskyblue" : "lightsalmon";
    man.result = "ok";
  } catch (const PreconditionError& e) {
    std::cerr << "coloring skipped: " << e.what() << "\n";
    man.result = "ok (uncolored)";
  }
  write_output(write_dot(doc.data, fills, doc.kinds), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"face-hitting dominating partitions of plane multigraphs"};
  app.require_subcommand(1);

  std::string path;
  std::string out_path;
  std::string mis;
  std::string task = "gamma";
  std::string family;
  bool check = false;
  bool as_json = false;
  bool exact = false;
  bool three_plus_only = false;
  int count = 10;
  int n = 0;
  int k = 1;
  int max_vertices = 0;
  long long max_nodes = 0;
  std::uint64_t seed = 0;

  CLI::App* validate = app.add_subcommand("validate", "check a .plg file");
  validate->add_option("path", path, "input .plg")->required();

  CLI::App* color = app.add_subcommand(
      "color", "two-coloring with both classes dominating and face-hitting");
  color->add_option("path", path, "input .plg")->required();
  color->add_flag("--check", check, "cross-check with the exact oracle");
  color->add_flag("--json", as_json, "JSON output");

  CLI::App* dominate = app.add_subcommand(
      "dominate", "small dominating set of a plane triangulation");
  dominate->add_option("path", path, "input .plg")->required();
  dominate->add_option("--mis", mis, "independent-set order: min|max|random")
      ->check(CLI::IsMember({"min", "max", "random"}));
  dominate->add_option("--seed", seed, "seed for --mis random");
  dominate->add_flag("--exact", exact, "also compute the exact gamma");
  dominate->add_flag("--json", as_json, "JSON output");

  CLI::App* bench = app.add_subcommand(
      "bench", "batch of random triangulations with a bound summary");
  bench->add_option("--count", count, "instances")->check(CLI::PositiveNumber);
  bench->add_option("--n", n, "vertices per instance")->required();
  bench->add_option("--seed", seed, "base seed");

  CLI::App* oracle = app.add_subcommand("oracle", "exact solvers for small inputs");
  oracle->add_option("path", path, "input .plg")->required();
  oracle->add_option("--task", task, "gamma|beta|alpha|exists")
      ->check(CLI::IsMember({"gamma", "beta", "alpha", "exists"}));
  oracle->add_flag("--3plus-only", three_plus_only,
                   "exists: require bichromatic faces of length >= 3 only");
  oracle->add_option("--max-vertices", max_vertices, "budget override");
  oracle->add_option("--max-nodes", max_nodes, "budget override");
  oracle->add_flag("--json", as_json, "JSON output");

  CLI::App* gen = app.add_subcommand("gen", "write a generated instance as .plg");
  gen->add_option("family", family,
                  "stacked|theorem|edges|paths|cycles|doubled-k4|loop-gadget")
      ->required();
  gen->add_option("--n", n, "vertices (stacked, theorem)");
  gen->add_option("--k", k, "copies (edges, paths, cycles, doubled-k4)");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* render = app.add_subcommand("render", "DOT export with color classes");
  render->add_option("path", path, "input .plg")->required();
  render->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  RunManifest man;
  man.command = app.get_subcommands().front()->get_name();
  int code = kExitOk;
  try {
    if (validate->parsed()) {
      code = cmd_validate(path, man);
    } else if (color->parsed()) {
      code = cmd_color(path, check, as_json, man);
    } else if (dominate->parsed()) {
      code = cmd_dominate(path, mis, seed, exact, as_json, man);
    } else if (bench->parsed()) {
      code = cmd_bench(count, n, seed, man);
    } else if (oracle->parsed()) {
      code = cmd_oracle(path, task, three_plus_only, max_vertices, max_nodes,
                        as_json, man);
    } else if (gen->parsed()) {
      code = cmd_gen(family, n, k, seed, out_path, man);
    } else if (render->parsed()) {
      code = cmd_render(path, out_path, man);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    man.result = "parse-error";
    code = kExitParse;
  } catch (const InvalidEmbeddingError& e) {
    std::cerr << "invalid embedding: " << e.what() << "\n";
    man.result = "invalid-embedding";
    code = kExitEmbedding;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.assumption << " — " << e.what()
              << "\n";
    man.result = "precondition: " + e.assumption;
    code = kExitDomain;
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    man.result = "budget-exceeded";
    code = kExitBudget;
  } catch (const InternalInvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    man.result = "internal-error";
    code = 70;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    man.result = "domain-error";
    code = kExitDomain;
  }
  man.emit();
  return code;
}
