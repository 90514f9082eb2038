#include "hyperdiff/cli.hpp"

#include "hyperdiff/error.hpp"
#include "hyperdiff/geometry.hpp"
#include "hyperdiff/homology.hpp"
#include "hyperdiff/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

namespace hyperdiff::cli {

namespace {

using io::Json;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::KindMismatch:
      return kKindMismatch;
    case ErrorKind::NotSimplicial:
    case ErrorKind::NotCosimplicial:
    case ErrorKind::NotAChainMap:
      return kClosureViolation;
    case ErrorKind::GradeParity:
      return kParityViolation;
    default:
      return kParseError;
  }
}

struct Range {
  int lo = 0;
  int hi = 0;
};

// "a..b" or a single integer.
Range parse_range(const std::string& text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(ErrorKind::Parse, "bad range \"" + text + "\"; expected a..b");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  Range r{to_int(std::string_view(text).substr(0, dots)),
          to_int(std::string_view(text).substr(dots + 2))};
  if (r.lo > r.hi) throw Error(ErrorKind::Parse, "empty range \"" + text + "\"");
  return r;
}

struct Globals {
  std::string output = "-";
  int decimal_precision = 12;
  std::size_t max_vertices = kDefaultMaxVertices;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  Globals globals;

  void emit(const Json& doc) const {
    const std::string text = doc.dump(2) + "\n";
    if (globals.output == "-" || globals.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(globals.output, std::ios::binary);
    if (!file) throw Error(ErrorKind::Parse, "cannot write " + globals.output);
    file << text;
  }

  io::ComplexDocument load_complex(const std::string& path, bool verify_kind = true) const {
    return io::parse_complex(io::read_json_file(path), globals.max_vertices, verify_kind);
  }

  io::OperatorDocument load_operator(const Json& doc, const VertexSet& vertex_set) const {
    auto op = io::parse_operator(doc, vertex_set);
    if (op.declared_t) {
      const int k = op.grade();
      if (k % 2 == 0 || *op.declared_t != (k - 1) / 2) {
        err_ << "warning: declared t=" << *op.declared_t << " does not match operator grade " << k
             << "; using the grade\n";
      }
    }
    return op;
  }

  std::ostream& err() const { return err_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

int cmd_validate(Runner& r, const std::string& complex_path) {
  const auto doc = r.load_complex(complex_path, false);
  const auto& h = doc.hypergraph;
  Json report;
  report["vertices"] = h.vertex_set().size();
  report["edges"] = h.size();
  report["counts_by_dimension"] = h.counts_by_dimension();
  report["is_simplicial"] = is_simplicial(h);
  report["is_cosimplicial"] = is_cosimplicial(h);
  bool ok = true;
  if (doc.declared_kind) {
    ok = io::kind_matches(h, *doc.declared_kind);
    report["declared_kind"] = std::string(io::to_string(*doc.declared_kind));
    report["kind_matches"] = ok;
  }
  r.emit(report);
  if (!ok) {
    r.err() << "error: hypergraph is not " << io::to_string(*doc.declared_kind) << " as declared\n";
    return kKindMismatch;
  }
  return kSuccess;
}

struct DegreeLabel {
  int m;
  int n;
  int d;
};

struct BettiOptions {
  std::string complex_path;
  std::string operator_path;
  std::string degrees;
  std::optional<int> m;
  std::string n_range;
  std::string side;
  std::string map_path;
};

Side resolve_side(const std::string& requested, Variance variance) {
  const Side natural = variance == Variance::Diff ? Side::Homology : Side::Cohomology;
  if (requested.empty()) return natural;
  const Side wanted = requested == "homology" ? Side::Homology : Side::Cohomology;
  if (wanted != natural) {
    throw Error(ErrorKind::InvalidArgument,
                wanted == Side::Homology ? "homology needs a diff operator"
                                         : "cohomology needs a codiff operator");
  }
  return wanted;
}

std::vector<DegreeLabel> degree_labels(const BettiOptions& o, int grade, int top) {
  const int t = step_parameter(grade);
  std::vector<DegreeLabel> out;
  if (o.m) {
    Range n{0, std::max(0, (top - *o.m) / grade)};
    if (!o.n_range.empty()) n = parse_range(o.n_range);
    if (n.lo < 0) throw Error(ErrorKind::InvalidArgument, "n must be non-negative");
    for (int i = n.lo; i <= n.hi; ++i) out.push_back({*o.m, i, *o.m + i * grade});
    return out;
  }
  if (!o.n_range.empty()) throw Error(ErrorKind::InvalidArgument, "--n-range needs --m");
  const Range d = o.degrees.empty() ? Range{0, std::max(0, top)} : parse_range(o.degrees);
  for (int i = d.lo; i <= d.hi; ++i) {
    const auto idx = degree_decompose(i, t);
    out.push_back({idx.q, idx.lambda, i});
  }
  return out;
}

// Homology and the optional induced maps at every requested degree.
Json betti_report(Runner& r, const BettiOptions& o) {
  const auto cx = r.load_complex(o.complex_path);
  const auto& h = cx.hypergraph;
  const auto op = r.load_operator(io::read_json_file(o.operator_path), h.vertex_set());
  const Side side = resolve_side(o.side, op.variance);
  const int grade = op.grade();
  const int t = step_parameter(grade);

  std::optional<io::OperatorDocument> map;
  if (!o.map_path.empty()) {
    map = r.load_operator(io::read_json_file(o.map_path), h.vertex_set());
    if (map->variance != op.variance) {
      throw Error(ErrorKind::InvalidArgument, "map operator variance differs from the operator");
    }
    if (map->grade() % 2 != 0) {
      throw Error(ErrorKind::GradeParity,
                  "map operator needs even grade, got " + std::to_string(map->grade()));
    }
  }

  Json report;
  report["operator_grade"] = grade;
  report["t"] = t;
  report["side"] = side == Side::Homology ? "homology" : "cohomology";
  report["degree_convention"] = "d = m + n * operator_grade";
  Json degrees = Json::array();
  Json maps = Json::array();
  for (const auto& label : degree_labels(o, grade, h.top_dimension())) {
    const auto result = side == Side::Homology ? betti_at_degree(h, *op.diff, label.d)
                                               : cobetti_at_degree(h, *op.codiff, label.d);
    degrees.push_back(io::degree_entry(result, label.m, label.n));
    if (map) {
      const auto induced = side == Side::Homology
                               ? induced_map(h, *op.diff, *map->diff, label.d, 0)
                               : induced_comap(h, *op.codiff, *map->codiff, label.d, 0);
      maps.push_back(io::induced_entry(induced, label.m, label.n));
    }
  }
  report["degrees"] = std::move(degrees);
  report["induced_maps"] = std::move(maps);
  return report;
}

Json representatives_json(const std::vector<PathVector>& reps, const VertexSet& vs) {
  Json out = Json::array();
  for (const auto& x : reps) out.push_back(io::path_vector_to_json(x, vs));
  return out;
}

Json induced_report(Runner& r, const std::string& complex_path, const std::string& operator_path,
                    const std::string& map_path, int m, int n) {
  const auto cx = r.load_complex(complex_path);
  const auto& h = cx.hypergraph;
  const auto op = r.load_operator(io::read_json_file(operator_path), h.vertex_set());
  const auto map = r.load_operator(io::read_json_file(map_path), h.vertex_set());
  if (map.grade() % 2 != 0) {
    throw Error(ErrorKind::GradeParity,
                "map operator needs even grade, got " + std::to_string(map.grade()));
  }
  if (map.variance != op.variance) {
    throw Error(ErrorKind::InvalidArgument, "map operator variance differs from the operator");
  }
  const bool homology = op.variance == Variance::Diff;
  const auto induced = homology ? induced_map(h, *op.diff, *map.diff, m, n)
                                : induced_comap(h, *op.codiff, *map.codiff, m, n);
  Json report;
  report["operator_grade"] = op.grade();
  report["map_grade"] = map.grade();
  report["side"] = homology ? "homology" : "cohomology";
  const Json entry = io::induced_entry(induced, m, n);
  for (const auto& [key, value] : entry.items()) report[key] = value;
  report["source_representatives"] = representatives_json(induced.source.representatives, h.vertex_set());
  report["target_representatives"] = representatives_json(induced.target.representatives, h.vertex_set());
  return report;
}

struct ApplyOptions {
  std::string operator_path;
  std::string literal;
  std::string complex_path;
  std::vector<std::string> vertices;
};

// Vertex order: --vertices, then --complex, then the operator's own
// "vertices", then every label mentioned, in natural order.
VertexSet apply_vertex_set(const Runner& r, const ApplyOptions& o, const Json& op_doc) {
  if (!o.vertices.empty()) return VertexSet(o.vertices, r.globals.max_vertices);
  if (!o.complex_path.empty()) return r.load_complex(o.complex_path, false).hypergraph.vertex_set();
  if (auto it = op_doc.find("vertices"); it != op_doc.end() && it->is_array()) {
    std::vector<std::string> labels;
    for (const auto& l : *it) {
      if (!l.is_string()) throw Error(ErrorKind::Parse, "vertices must contain only strings");
      labels.push_back(l.get<std::string>());
    }
    return VertexSet(std::move(labels), r.globals.max_vertices);
  }
  auto labels = io::operator_labels(op_doc);
  for (auto& l : io::path_literal_labels(o.literal)) {
    if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(std::move(l));
  }
  io::natural_sort(labels);
  return VertexSet(std::move(labels), r.globals.max_vertices);
}

Json apply_report(Runner& r, const ApplyOptions& o) {
  const auto op_doc = io::read_json_file(o.operator_path);
  const auto vs = apply_vertex_set(r, o, op_doc);
  const auto op = r.load_operator(op_doc, vs);
  const auto xi = io::parse_path_literal(o.literal, vs);
  const auto image = op.diff ? apply_diff(*op.diff, xi) : apply_codiff(*op.codiff, xi);
  const auto sorted = project_sorted(image);
  const auto cyclic = cyclic_part(image);
  const auto unsorted = unsorted_regular_part(image);

  Json report;
  report["vertices"] = vs.labels();
  report["operator"] = op.diff ? io::form_to_json(*op.diff, vs) : io::form_to_json(*op.codiff, vs);
  report["input"] = io::path_vector_to_json(xi, vs);
  report["result"] = io::path_vector_to_json(image, vs);
  report["sorted_part"] = io::path_vector_to_json(sorted, vs);
  report["cyclic_part"] = io::path_vector_to_json(cyclic, vs);
  report["unsorted_regular_part"] = io::path_vector_to_json(unsorted, vs);
  report["text"] = Json{{"result", format_path_vector(image, vs)},
                        {"sorted_part", format_path_vector(sorted, vs)},
                        {"cyclic_part", format_path_vector(cyclic, vs)}};
  return report;
}

Json complement_report(Runner& r, const std::string& complex_path, const std::string& within_path) {
  const auto h1 = r.load_complex(complex_path).hypergraph;
  const Hypergraph h2 = within_path.empty() ? complete(h1.vertex_set())
                                            : r.load_complex(within_path).hypergraph;
  return io::complex_to_json(complement(h2, h1));
}

Json closure_report(Runner& r, const std::string& complex_path, bool cosimplicial) {
  const auto h = r.load_complex(complex_path, false).hypergraph;
  if (cosimplicial) return io::complex_to_json(cosimplicial_closure(h), io::DeclaredKind::Cosimplicial);
  return io::complex_to_json(simplicial_closure(h), io::DeclaredKind::Simplicial);
}

Json realize_report(Runner& r, const std::string& complex_path, bool decimal) {
  const auto h = r.load_complex(complex_path).hypergraph;
  const auto embedding = embed(h.vertex_set());
  Json report = io::realization_to_json(
      h, embedding, decimal ? std::optional<int>(r.globals.decimal_precision) : std::nullopt);
  const auto disjoint = check_disjointness(h, embedding);
  report["disjointness"] = Json{{"passed", disjoint.passed}, {"pairs_checked", disjoint.pairs_checked}};
  return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  CLI::App app{"Exact discrete differential calculus on hypergraphs", "hyperdiff"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--output", runner.globals.output, "Write JSON here instead of stdout ('-')");
  app.add_option("--decimal-precision", runner.globals.decimal_precision,
                 "Fractional digits for --decimal output")
      ->check(CLI::Range(0, 100));
  app.add_option("--max-vertices", runner.globals.max_vertices, "Refuse larger vertex sets")
      ->check(CLI::PositiveNumber);

  std::string complex_path;
  auto* validate = app.add_subcommand("validate", "Check a complex file and its declared kind");
  validate->add_option("complex", complex_path)->required();

  BettiOptions betti;
  auto* betti_cmd = app.add_subcommand("betti", "(Co)homology dimensions over a degree range");
  betti_cmd->add_option("complex", betti.complex_path)->required();
  betti_cmd->add_option("operator", betti.operator_path)->required();
  auto* degrees_opt = betti_cmd->add_option("--degrees", betti.degrees, "Absolute degrees a..b");
  auto* m_opt = betti_cmd->add_option("--m", betti.m, "Base index m; degrees are m + n * grade");
  betti_cmd->add_option("--n-range", betti.n_range, "Range of n for --m, as a..b");
  degrees_opt->excludes(m_opt);
  betti_cmd->add_option("--side", betti.side)->check(CLI::IsMember({"homology", "cohomology"}));
  betti_cmd->add_option("--map", betti.map_path, "Even-grade operator whose induced maps to report");

  std::string operator_path, map_path;
  int m = 0, n = 0;
  auto* induced_cmd = app.add_subcommand("induced", "Matrix of an induced map on (co)homology");
  induced_cmd->add_option("complex", complex_path)->required();
  induced_cmd->add_option("operator", operator_path)->required();
  induced_cmd->add_option("map", map_path)->required();
  induced_cmd->add_option("--m", m);
  induced_cmd->add_option("--n", n)->check(CLI::NonNegativeNumber);

  ApplyOptions apply;
  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to a path vector");
  apply_cmd->add_option("operator", apply.operator_path)->required();
  apply_cmd->add_option("path", apply.literal, "e.g. \"v0 v1\" or \"2 * v0 v1 - v1 v2\"")->required();
  auto* apply_complex = apply_cmd->add_option("--complex", apply.complex_path, "Take the vertex order from a complex");
  apply_cmd->add_option("--vertices", apply.vertices, "Explicit vertex order")
      ->delimiter(',')
      ->excludes(apply_complex);

  std::string within_path;
  auto* complement_cmd = app.add_subcommand("complement", "Hyperedges of a hypergraph not in the given one");
  complement_cmd->add_option("complex", complex_path)->required();
  complement_cmd->add_option("--within", within_path, "Ambient hypergraph (default: all subsets)");

  bool simplicial = false, cosimplicial = false;
  auto* closure_cmd = app.add_subcommand("closure", "Smallest closed complex containing a hypergraph");
  closure_cmd->add_option("complex", complex_path)->required();
  auto* simp_flag = closure_cmd->add_flag("--simplicial", simplicial, "Close under faces");
  auto* cosimp_flag = closure_cmd->add_flag("--cosimplicial", cosimplicial, "Close under supersets");
  simp_flag->excludes(cosimp_flag);

  bool decimal = false;
  auto* realize_cmd = app.add_subcommand("realize", "Coordinates of the geometric realization");
  realize_cmd->add_option("complex", complex_path)->required();
  realize_cmd->add_flag("--decimal", decimal, "Emit decimal strings instead of fractions");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  if (closure_cmd->parsed() && !simplicial && !cosimplicial) {
    err << "error: closure needs --simplicial or --cosimplicial\n";
    return kParseError;
  }

  try {
    if (validate->parsed()) return cmd_validate(runner, complex_path);
    if (betti_cmd->parsed()) runner.emit(betti_report(runner, betti));
    else if (induced_cmd->parsed()) runner.emit(induced_report(runner, complex_path, operator_path, map_path, m, n));
    else if (apply_cmd->parsed()) runner.emit(apply_report(runner, apply));
    else if (complement_cmd->parsed()) runner.emit(complement_report(runner, complex_path, within_path));
    else if (closure_cmd->parsed()) runner.emit(closure_report(runner, complex_path, cosimplicial));
    else if (realize_cmd->parsed()) runner.emit(realize_report(runner, complex_path, decimal));
    return kSuccess;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace hyperdiff::cli
