#include "hyperdiff/io.hpp"

#include "hyperdiff/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace hyperdiff::io {

namespace {

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorKind::Parse, message); }

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object()) parse_error("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::string> label_list(const Json& value, const char* what) {
  if (!value.is_array()) parse_error(std::string(what) + " must be an array of labels");
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_string()) parse_error(std::string(what) + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::optional<DeclaredKind> parse_kind(const Json& doc) {
  auto it = doc.find("declared_kind");
  if (it == doc.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) parse_error("declared_kind must be a string");
  const auto s = it->get<std::string>();
  if (s == "simplicial") return DeclaredKind::Simplicial;
  if (s == "cosimplicial") return DeclaredKind::Cosimplicial;
  if (s == "hypergraph") return DeclaredKind::Hypergraph;
  parse_error("unknown declared_kind \"" + s + "\"");
}

std::vector<VertexIndex> resolve(const std::vector<std::string>& labels, const VertexSet& vertex_set) {
  std::vector<VertexIndex> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(vertex_set.index_of(l));
  return out;
}

Json rational_json(const Rational& value) { return format_rational(value); }

Json point_json(const Point& p, std::optional<int> digits) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(digits ? format_decimal(x, *digits) : format_rational(x));
  return out;
}

}  // namespace

std::string_view to_string(DeclaredKind kind) noexcept {
  switch (kind) {
    case DeclaredKind::Simplicial:
      return "simplicial";
    case DeclaredKind::Cosimplicial:
      return "cosimplicial";
    case DeclaredKind::Hypergraph:
      return "hypergraph";
  }
  return "hypergraph";
}

bool kind_matches(const Hypergraph& h, DeclaredKind kind) {
  switch (kind) {
    case DeclaredKind::Simplicial:
      return is_simplicial(h);
    case DeclaredKind::Cosimplicial:
      return is_cosimplicial(h);
    case DeclaredKind::Hypergraph:
      return true;
  }
  return true;
}

ComplexDocument parse_complex(const Json& doc, std::size_t max_vertices, bool verify_kind) {
  VertexSet vertex_set(label_list(require(doc, "vertices"), "vertices"), max_vertices);
  const auto& edges = require(doc, "edges");
  if (!edges.is_array()) parse_error("edges must be an array");
  std::vector<Hyperedge> parsed;
  for (const auto& e : edges) {
    const auto labels = label_list(e, "an edge");
    if (labels.empty()) parse_error("an edge must name at least one vertex");
    parsed.push_back(Hyperedge::from_indices(resolve(labels, vertex_set)));
  }
  ComplexDocument out{Hypergraph(std::move(vertex_set), parsed), parse_kind(doc)};
  if (verify_kind && out.declared_kind && !kind_matches(out.hypergraph, *out.declared_kind)) {
    throw Error(ErrorKind::KindMismatch, "hypergraph is not " +
                                             std::string(to_string(*out.declared_kind)) +
                                             " as declared");
  }
  return out;
}

Json complex_to_json(const Hypergraph& h, std::optional<DeclaredKind> kind) {
  Json out;
  out["vertices"] = h.vertex_set().labels();
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back(hyperedge_labels(e, h.vertex_set()));
  out["edges"] = std::move(edges);
  if (kind) out["declared_kind"] = std::string(to_string(*kind));
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

Rational parse_coefficient(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(value.get<std::uint64_t>())
                                      : Rational(value.get<std::int64_t>());
  }
  parse_error("coefficients must be rational strings or integers, got " + value.dump());
}

namespace {

template <Variance V>
ExteriorForm<V> parse_terms(const Json& doc, const VertexSet& vertex_set) {
  const auto& grade_json = require(doc, "grade");
  if (!grade_json.is_number_integer() || grade_json.get<std::int64_t>() < 0) {
    parse_error("grade must be a non-negative integer");
  }
  const int grade = grade_json.get<int>();
  ExteriorForm<V> form(grade);
  const auto& terms = require(doc, "terms");
  if (!terms.is_array()) parse_error("terms must be an array");
  for (const auto& term : terms) {
    const auto labels = label_list(require(term, "vertices"), "term vertices");
    const auto indices = resolve(labels, vertex_set);
    if (std::set<VertexIndex>(indices.begin(), indices.end()).size() != indices.size()) {
      throw Error(ErrorKind::DuplicateVertex, "a term repeats a vertex");
    }
    const Rational c = term.contains("coeff") ? parse_coefficient(term["coeff"]) : Rational(1);
    form.add_monomial(indices, c);
  }
  return form;
}

template <Variance V>
ExteriorForm<V> parse_weighted(const Json& weighted, const VertexSet& vertex_set) {
  const auto& f = require(weighted, "f");
  if (!f.is_object()) parse_error("weighted.f must map labels to rationals");
  std::vector<Rational> weights(vertex_set.size(), Rational(0));
  for (const auto& [label, value] : f.items()) weights[vertex_set.index_of(label)] = parse_coefficient(value);
  return ExteriorForm<V>::weighted(weights);
}

}  // namespace

OperatorDocument parse_operator(const Json& doc, const VertexSet& vertex_set) {
  OperatorDocument out;
  const auto& variance = require(doc, "variance");
  if (variance == "diff") out.variance = Variance::Diff;
  else if (variance == "codiff") out.variance = Variance::Codiff;
  else parse_error("variance must be \"diff\" or \"codiff\"");

  const bool has_terms = doc.contains("terms");
  const bool has_weighted = doc.contains("weighted");
  if (has_terms == has_weighted) parse_error("an operator needs exactly one of \"terms\" or \"weighted\"");

  if (auto it = doc.find("t"); it != doc.end()) {
    if (!it->is_number_integer()) parse_error("t must be an integer");
    out.declared_t = it->get<int>();
  }
  if (auto it = doc.find("vertices"); it != doc.end()) out.declared_vertices = label_list(*it, "vertices");

  if (has_terms) {
    if (out.variance == Variance::Diff) out.diff = parse_terms<Variance::Diff>(doc, vertex_set);
    else out.codiff = parse_terms<Variance::Codiff>(doc, vertex_set);
  } else {
    if (auto g = doc.find("grade"); g != doc.end() && *g != 1) {
      parse_error("the weighted shorthand has grade 1");
    }
    if (out.variance == Variance::Diff) out.diff = parse_weighted<Variance::Diff>(doc["weighted"], vertex_set);
    else out.codiff = parse_weighted<Variance::Codiff>(doc["weighted"], vertex_set);
  }
  return out;
}

std::vector<std::string> operator_labels(const Json& doc) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto note = [&](const std::string& l) {
    if (seen.insert(l).second) out.push_back(l);
  };
  if (auto it = doc.find("terms"); it != doc.end() && it->is_array()) {
    for (const auto& term : *it) {
      if (auto v = term.find("vertices"); v != term.end()) {
        for (const auto& l : label_list(*v, "term vertices")) note(l);
      }
    }
  }
  if (auto it = doc.find("weighted"); it != doc.end() && it->is_object()) {
    if (auto f = it->find("f"); f != it->end() && f->is_object()) {
      for (const auto& [label, value] : f->items()) note(label);
    }
  }
  return out;
}

template <Variance V>
Json form_to_json(const ExteriorForm<V>& form, const VertexSet& vertex_set) {
  Json out;
  out["variance"] = V == Variance::Diff ? "diff" : "codiff";
  out["grade"] = form.grade();
  Json terms = Json::array();
  for (const auto& [monomial, c] : form.terms()) {
    Json labels = Json::array();
    for (auto v : monomial) labels.push_back(vertex_set.label(v));
    terms.push_back(Json{{"vertices", std::move(labels)}, {"coeff", format_rational(c)}});
  }
  out["terms"] = std::move(terms);
  return out;
}

template Json form_to_json(const DiffForm&, const VertexSet&);
template Json form_to_json(const CodiffForm&, const VertexSet&);

PathVector parse_path_terms(const Json& terms, const VertexSet& vertex_set) {
  if (!terms.is_array()) parse_error("a path vector must be an array of terms");
  PathVector out;
  for (const auto& term : terms) {
    const auto labels = label_list(require(term, "path"), "path");
    if (labels.empty()) parse_error("a path must name at least one vertex");
    const Rational c = term.contains("coeff") ? parse_coefficient(term["coeff"]) : Rational(1);
    PathVector single;
    single.add_term(ElementaryPath(resolve(labels, vertex_set)), c);
    if (!out.is_zero() && !single.is_zero() && out.grade() != single.grade()) {
      throw Error(ErrorKind::GradeMismatch, "path vector mixes grades");
    }
    out += single;
  }
  return out;
}

Json path_vector_to_json(const PathVector& xi, const VertexSet& vertex_set) {
  Json out = Json::array();
  for (const auto& [path, c] : xi.terms()) {
    Json labels = Json::array();
    for (auto v : path.vertices()) labels.push_back(vertex_set.label(v));
    out.push_back(Json{{"path", std::move(labels)}, {"coeff", format_rational(c)}});
  }
  return out;
}

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::string spaced;
  for (char c : text) {
    if (c == '*') spaced += " * ";
    else spaced += c;
  }
  std::istringstream in(spaced);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return tokens;
}

bool is_separator(const std::string& tok) { return tok == "+" || tok == "-"; }

struct TextTerm {
  Rational coeff;
  std::vector<std::string> labels;
};

std::vector<TextTerm> parse_text_terms(std::string_view text) {
  const auto tokens = tokenize(text);
  std::vector<TextTerm> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    Rational sign = 1;
    if (is_separator(tokens[i])) {
      if (tokens[i] == "-") sign = -1;
      ++i;
    } else if (!out.empty()) {
      parse_error("expected '+' or '-' between terms in path literal");
    }
    TextTerm term{sign, {}};
    if (i + 1 < tokens.size() && tokens[i + 1] == "*") {
      term.coeff *= parse_rational(tokens[i]);
      i += 2;
    }
    while (i < tokens.size() && !is_separator(tokens[i])) {
      if (tokens[i] == "*") parse_error("misplaced '*' in path literal");
      term.labels.push_back(tokens[i++]);
    }
    if (term.labels.empty()) parse_error("empty term in path literal \"" + std::string(text) + "\"");
    out.push_back(std::move(term));
  }
  if (out.empty()) parse_error("empty path literal");
  return out;
}

bool looks_like_json(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && (text[pos] == '[' || text[pos] == '{');
}

}  // namespace

PathVector parse_path_literal(std::string_view text, const VertexSet& vertex_set) {
  if (looks_like_json(text)) {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      parse_error(std::string("path literal: ") + e.what());
    }
    return parse_path_terms(doc.is_object() ? Json::array({doc}) : doc, vertex_set);
  }
  PathVector out;
  for (const auto& term : parse_text_terms(text)) {
    PathVector single;
    single.add_term(ElementaryPath(resolve(term.labels, vertex_set)), term.coeff);
    if (!out.is_zero() && !single.is_zero() && out.grade() != single.grade()) {
      throw Error(ErrorKind::GradeMismatch, "path literal mixes grades");
    }
    out += single;
  }
  return out;
}

std::vector<std::string> path_literal_labels(std::string_view text) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto note = [&](const std::string& l) {
    if (seen.insert(l).second) out.push_back(l);
  };
  if (looks_like_json(text)) {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      parse_error(std::string("path literal: ") + e.what());
    }
    if (doc.is_object()) doc = Json::array({doc});
    if (!doc.is_array()) parse_error("a path vector must be an array of terms");
    for (const auto& term : doc) {
      for (const auto& l : label_list(require(term, "path"), "path")) note(l);
    }
    return out;
  }
  for (const auto& term : parse_text_terms(text)) {
    for (const auto& l : term.labels) note(l);
  }
  return out;
}

void natural_sort(std::vector<std::string>& labels) {
  auto split = [](const std::string& s) {
    std::size_t cut = s.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
    std::string digits = s.substr(cut);
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
    return std::tuple(s.substr(0, cut), digits.size(), digits, s);
  };
  std::sort(labels.begin(), labels.end(),
            [&](const std::string& a, const std::string& b) { return split(a) < split(b); });
}

Json degree_entry(const HomologyResult& result, int m, int n) {
  Json out;
  out["d"] = result.degree;
  out["m"] = m;
  out["n"] = n;
  out["dim_chain"] = result.chain_dimension;
  out["kernel"] = result.cycle_basis.size();
  out["boundary_rank"] = result.boundary_rank;
  out["betti"] = result.dimension;
  return out;
}

Json induced_entry(const InducedMap& map, int m, int n) {
  Json out;
  out["m"] = m;
  out["n"] = n;
  out["s"] = map.s;
  out["source_degree"] = map.source.degree;
  out["target_degree"] = map.target.degree;
  out["source_dimension"] = map.source.dimension;
  out["target_dimension"] = map.target.dimension;
  Json rows = Json::array();
  for (const auto& row : map.matrix) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_json(x));
    rows.push_back(std::move(r));
  }
  out["matrix"] = std::move(rows);
  out["rank"] = map.rank;
  return out;
}

Json realization_to_json(const Hypergraph& h, const Embedding& embedding,
                         std::optional<int> decimal_digits) {
  Json out;
  Json vertices = Json::array();
  const auto& vs = h.vertex_set();
  for (VertexIndex i = 0; i < vs.size(); ++i) {
    vertices.push_back(Json{{"label", vs.label(i)}, {"point", point_json(embedding.point(i), decimal_digits)}});
  }
  out["vertices"] = std::move(vertices);
  Json cells = Json::array();
  for (const auto& c : realization_cells(h, embedding)) {
    Json entry;
    entry["vertices"] = hyperedge_labels(c.hyperedge, vs);
    entry["dimension"] = c.hyperedge.dimension();
    entry["barycenter"] = point_json(c.barycenter, decimal_digits);
    cells.push_back(std::move(entry));
  }
  out["cells"] = std::move(cells);
  return out;
}

}  // namespace hyperdiff::io
