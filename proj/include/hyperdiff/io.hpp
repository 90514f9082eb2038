#pragma once

#include "hyperdiff/calculus.hpp"
#include "hyperdiff/geometry.hpp"
#include "hyperdiff/homology.hpp"
#include "hyperdiff/hypergraph.hpp"
#include "hyperdiff/paths.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyperdiff::io {

/// Insertion-ordered so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

enum class DeclaredKind { Simplicial, Cosimplicial, Hypergraph };

std::string_view to_string(DeclaredKind kind) noexcept;
bool kind_matches(const Hypergraph& h, DeclaredKind kind);

/// { "vertices": [...], "edges": [[...], ...], "declared_kind": "simplicial" }
struct ComplexDocument {
  Hypergraph hypergraph;
  std::optional<DeclaredKind> declared_kind;
};

/// Throws Parse on schema errors, plus UnknownVertex, DuplicateVertex and
/// TooManyVertices from the hypergraph layer. With `verify_kind`, a declared
/// kind the hypergraph does not satisfy raises KindMismatch.
ComplexDocument parse_complex(const Json& doc, std::size_t max_vertices = kDefaultMaxVertices,
                              bool verify_kind = true);
Json complex_to_json(const Hypergraph& h, std::optional<DeclaredKind> kind = std::nullopt);

/// Reads a UTF-8 JSON file; throws Parse when unreadable or malformed.
Json read_json_file(const std::filesystem::path& path);

/// Coefficients are strings ("p/q", "-2", "0.5") or JSON integers.
Rational parse_coefficient(const Json& value);

/// Operator document: either explicit terms
///   { "variance": "diff", "grade": 3, "terms": [{ "vertices": [...], "coeff": "1/2" }] }
/// or the weighted shorthand expanding to sum_v f(v) d/dv (or f(v) dv)
///   { "variance": "codiff", "weighted": { "f": { "v0": "1", "v2": "-3" } } }
/// An optional "t" is only checked against the grade.
struct OperatorDocument {
  Variance variance = Variance::Diff;
  std::optional<DiffForm> diff;
  std::optional<CodiffForm> codiff;
  std::optional<int> declared_t;
  std::optional<std::vector<std::string>> declared_vertices;

  int grade() const { return diff ? diff->grade() : codiff->grade(); }
};

OperatorDocument parse_operator(const Json& doc, const VertexSet& vertex_set);
/// Labels used by an operator document, for inferring a vertex set.
std::vector<std::string> operator_labels(const Json& doc);

template <Variance V>
Json form_to_json(const ExteriorForm<V>& form, const VertexSet& vertex_set);

/// [{ "path": [labels], "coeff": "p/q" }, ...]
PathVector parse_path_terms(const Json& terms, const VertexSet& vertex_set);
Json path_vector_to_json(const PathVector& xi, const VertexSet& vertex_set);

/// Either a JSON term list, or text such as "v0 v1" or
/// "2 * v0 v1 - 1/3 * v1 v2"; "+" and "-" must stand alone as tokens.
PathVector parse_path_literal(std::string_view text, const VertexSet& vertex_set);
/// Labels mentioned by a textual path literal.
std::vector<std::string> path_literal_labels(std::string_view text);

/// Orders labels as "v2" < "v10" (numeric suffixes compared as numbers).
void natural_sort(std::vector<std::string>& labels);

/// One entry of the Betti table. (m, n) labels the absolute degree
/// d = m + n * grade.
Json degree_entry(const HomologyResult& result, int m, int n);
Json induced_entry(const InducedMap& map, int m, int n);

/// { "vertices": [{label, point}], "cells": [{vertices, dimension, barycenter}] }.
/// Coordinates are rational strings, or fixed-point decimal strings when
/// `decimal_digits` is set.
Json realization_to_json(const Hypergraph& h, const Embedding& embedding,
                         std::optional<int> decimal_digits = std::nullopt);

}  // namespace hyperdiff::io
