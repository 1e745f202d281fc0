#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ntrans/field.hpp"

namespace ntrans {

struct Arrow {
  std::string name;
  int source = -1;
  int target = -1;
};

/// Composable arrow sequence stored in application order (arrows[0] acts
/// first). The written form lists arrows right to left: "a2.a1" applies a1,
/// then a2. A length-0 path is the trivial path at `source`.
struct Path {
  int source = -1;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool operator==(const Path&) const = default;
  bool operator<(const Path& o) const {
    if (source != o.source) return source < o.source;
    return arrows < o.arrows;
  }
};

struct Term {
  Path path;
  Scalar coeff;
};

/// Homogeneous combination of parallel paths: every term shares the same
/// length, source and target. Terms are kept sorted by written path form,
/// with no zero coefficients; the zero element has no terms.
struct Element {
  int source = -1;
  int target = -1;
  int degree = 0;
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

/// A quiver with homogeneous relations of degree >= 2, an optional declared
/// level n, and optional declared translation assignments tau(i) = j.
class BoundQuiver {
 public:
  explicit BoundQuiver(Field f = Field::rationals()) : field_(f) {}

  // -- construction (throws std::invalid_argument on structural misuse) --
  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, int source, int target);
  void add_relation(Element e);
  void set_translation(int i, int j);

  // -- access --
  const Field& field() const { return field_; }
  std::optional<int> declared_n;
  std::vector<std::string> metadata;  // carried as comments by the serializer

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::string& vertex_name(int i) const { return vertices_[i]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::vector<Element>& relations() const { return relations_; }
  const std::map<int, int>& declared_translation() const { return translation_; }
  int vertex_index(const std::string& name) const;  // -1 when absent
  int arrow_index(const std::string& name) const;   // -1 when absent

  // -- paths and elements --
  /// Validates composability (throws std::invalid_argument otherwise).
  Path make_path(int source, const std::vector<int>& arrow_indices) const;
  Path trivial_path(int vertex) const { return Path{vertex, {}}; }
  Path arrow_path(int a) const { return Path{arrows_[a].source, {a}}; }
  int path_target(const Path& p) const;
  /// Every vertex the path touches, endpoints included.
  std::vector<int> path_vertices(const Path& p) const;
  /// Written form, e.g. "a2.a1"; trivial paths print as "(v)".
  std::string path_string(const Path& p) const;

  /// Canonicalize: merge duplicate paths, drop zeros, sort by written form.
  /// Throws std::invalid_argument if terms are not parallel/homogeneous.
  Element make_element(std::vector<Term> terms) const;
  Element scalar_multiple(const Element& e, const Scalar& c) const;
  Element element_sum(const Element& a, const Element& b) const;
  std::string element_string(const Element& e) const;

 private:
  Field field_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Element> relations_;
  std::map<int, int> translation_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> arrow_index_;
};

/// Parse the line-oriented quiver text format. Throws ParseError.
BoundQuiver parse_quiver(const std::string& text);

/// Deterministic inverse of parse_quiver (declaration order, canonical terms).
std::string serialize_quiver(const BoundQuiver& q);

/// Graphviz export: one node per vertex, one edge per arrow, relations in a
/// comment block. Layered names ("v@t") get one rank column per layer.
std::string quiver_to_dot(const BoundQuiver& q);

struct ValidationIssue {
  std::string message;
};

/// Structural re-check of invariants (homogeneity, endpoints, name clashes,
/// translation well-formedness). Construction enforces these; validate gives
/// a report for untrusted callers.
std::vector<ValidationIssue> validate(const BoundQuiver& q);

/// Opposite quiver: arrows reversed and starred ("a1" -> "a1*"), relation
/// terms reversed, declared translation inverted.
BoundQuiver opposite(const BoundQuiver& q);

}  // namespace ntrans
