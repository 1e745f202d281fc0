#include "ntrans/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace ntrans {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (s == "+" || s == "-" || s == "->") return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == '#' || c == ',') return false;
  return true;
}

}  // namespace

int BoundQuiver::add_vertex(const std::string& name) {
  if (!valid_name(name)) throw std::invalid_argument("bad vertex name '" + name + "'");
  if (vertex_index_.count(name)) throw std::invalid_argument("duplicate vertex '" + name + "'");
  vertices_.push_back(name);
  vertex_index_[name] = static_cast<int>(vertices_.size()) - 1;
  return vertex_index_[name];
}

int BoundQuiver::add_arrow(const std::string& name, int source, int target) {
  if (!valid_name(name)) throw std::invalid_argument("bad arrow name '" + name + "'");
  if (arrow_index_.count(name)) throw std::invalid_argument("duplicate arrow '" + name + "'");
  if (vertex_index_.count(name)) throw std::invalid_argument("arrow name '" + name + "' clashes with a vertex");
  if (source < 0 || source >= static_cast<int>(vertices_.size()) || target < 0 ||
      target >= static_cast<int>(vertices_.size()))
    throw std::invalid_argument("arrow '" + name + "' has a dangling endpoint");
  arrows_.push_back(Arrow{name, source, target});
  arrow_index_[name] = static_cast<int>(arrows_.size()) - 1;
  return arrow_index_[name];
}

void BoundQuiver::add_relation(Element e) {
  if (e.is_zero()) throw std::invalid_argument("zero relation");
  if (e.degree < 2) throw std::invalid_argument("relation of degree " + std::to_string(e.degree) + " (need >= 2)");
  relations_.push_back(std::move(e));
}

void BoundQuiver::set_translation(int i, int j) {
  if (i < 0 || i >= static_cast<int>(vertices_.size()) || j < 0 || j >= static_cast<int>(vertices_.size()))
    throw std::invalid_argument("translation endpoint out of range");
  if (translation_.count(i)) throw std::invalid_argument("duplicate translation source '" + vertices_[i] + "'");
  translation_[i] = j;
}

int BoundQuiver::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  return it == vertex_index_.end() ? -1 : it->second;
}

int BoundQuiver::arrow_index(const std::string& name) const {
  auto it = arrow_index_.find(name);
  return it == arrow_index_.end() ? -1 : it->second;
}

Path BoundQuiver::make_path(int source, const std::vector<int>& arrow_indices) const {
  if (source < 0 || source >= static_cast<int>(vertices_.size()))
    throw std::invalid_argument("path source out of range");
  int at = source;
  for (int a : arrow_indices) {
    if (a < 0 || a >= static_cast<int>(arrows_.size())) throw std::invalid_argument("path arrow out of range");
    if (arrows_[a].source != at)
      throw std::invalid_argument("path arrows do not compose at '" + arrows_[a].name + "'");
    at = arrows_[a].target;
  }
  return Path{source, arrow_indices};
}

int BoundQuiver::path_target(const Path& p) const {
  return p.arrows.empty() ? p.source : arrows_[p.arrows.back()].target;
}

std::vector<int> BoundQuiver::path_vertices(const Path& p) const {
  std::vector<int> vs{p.source};
  for (int a : p.arrows) vs.push_back(arrows_[a].target);
  return vs;
}

std::string BoundQuiver::path_string(const Path& p) const {
  if (p.arrows.empty()) return "(" + vertices_[p.source] + ")";
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += '.';
    s += arrows_[*it].name;
  }
  return s;
}

Element BoundQuiver::make_element(std::vector<Term> terms) const {
  // merge duplicates
  std::map<Path, Scalar> acc;
  for (auto& t : terms) {
    auto it = acc.find(t.path);
    if (it == acc.end())
      acc.emplace(t.path, t.coeff);
    else
      it->second += t.coeff;
  }
  Element e;
  bool first = true;
  for (auto& [p, c] : acc) {
    if (c.is_zero()) continue;
    if (first) {
      e.source = p.source;
      e.target = path_target(p);
      e.degree = p.length();
      first = false;
    } else {
      if (p.source != e.source || path_target(p) != e.target || p.length() != e.degree)
        throw std::invalid_argument("element terms are not parallel paths of a common length");
    }
    e.terms.push_back(Term{p, c});
  }
  std::sort(e.terms.begin(), e.terms.end(),
            [this](const Term& a, const Term& b) { return path_string(a.path) < path_string(b.path); });
  return e;
}

Element BoundQuiver::scalar_multiple(const Element& e, const Scalar& c) const {
  std::vector<Term> ts;
  for (const Term& t : e.terms) ts.push_back(Term{t.path, t.coeff * c});
  Element r = make_element(std::move(ts));
  if (r.is_zero()) {
    r.source = e.source;
    r.target = e.target;
    r.degree = e.degree;
  }
  return r;
}

Element BoundQuiver::element_sum(const Element& a, const Element& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<Term> ts = a.terms;
  ts.insert(ts.end(), b.terms.begin(), b.terms.end());
  Element r = make_element(std::move(ts));
  if (r.is_zero()) {
    r.source = a.source;
    r.target = a.target;
    r.degree = a.degree;
  }
  return r;
}

std::string BoundQuiver::element_string(const Element& e) const {
  if (e.is_zero()) return "0";
  std::string out;
  const bool rational = field_.is_rational();
  for (std::size_t k = 0; k < e.terms.size(); ++k) {
    const Term& t = e.terms[k];
    Scalar c = t.coeff;
    if (k == 0) {
      if (!c.is_one()) out += c.to_string() + "*";
    } else {
      bool negative = rational && c.value() < 0;
      out += negative ? " - " : " + ";
      if (negative) c = -c;
      if (!c.is_one()) out += c.to_string() + "*";
    }
    out += path_string(t.path);
  }
  return out;
}

// ---------------------------------------------------------------------------
// parser

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

int column_of(const std::string& line, const std::string& token, int occurrence) {
  std::size_t pos = 0;
  for (int k = 0; k <= occurrence; ++k) {
    pos = line.find(token, pos);
    if (pos == std::string::npos) return 1;
    if (k < occurrence) pos += token.size();
  }
  return static_cast<int>(pos) + 1;
}

struct TermSyntax {
  Scalar coeff;
  std::vector<std::string> arrow_names;  // written order (leftmost = applied last)
};

TermSyntax parse_term(const Field& f, const std::string& tok, int line_no, int col) {
  TermSyntax ts{Scalar::one(f), {}};
  std::string body = tok;
  std::size_t star = tok.find('*');
  if (star != std::string::npos) {
    auto coeff = Scalar::parse(f, tok.substr(0, star));
    if (coeff) {
      ts.coeff = *coeff;
      body = tok.substr(star + 1);
    }
  }
  if (body.empty()) throw ParseError(line_no, col, "empty path in term '" + tok + "'");
  std::size_t start = 0;
  while (true) {
    std::size_t dot = body.find('.', start);
    std::string name = body.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (name.empty()) throw ParseError(line_no, col, "empty arrow name in term '" + tok + "'");
    ts.arrow_names.push_back(name);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return ts;
}

}  // namespace

BoundQuiver parse_quiver(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  Field field = Field::rationals();
  bool field_seen = false;
  BoundQuiver q(field);
  bool any_content = false;  // field line must precede everything else

  auto rebuild = [&](Field f) {
    // The field may only change before any declarations.
    q = BoundQuiver(f);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string code = line;
    std::size_t hash = code.find('#');
    if (hash != std::string::npos) code = code.substr(0, hash);
    std::vector<std::string> toks = split_ws(code);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    auto col = [&](int tok_idx) {
      return tok_idx < static_cast<int>(toks.size()) ? column_of(line, toks[tok_idx], 0) : 1;
    };

    try {
      if (kw == "field") {
        if (field_seen) throw ParseError(line_no, 1, "duplicate field line");
        if (any_content) throw ParseError(line_no, 1, "field line must precede declarations");
        field_seen = true;
        if (toks.size() == 2 && toks[1] == "rational") {
          field = Field::rationals();
        } else if (toks.size() == 3 && toks[1] == "gf") {
          long p = 0;
          try {
            p = std::stol(toks[2]);
          } catch (const std::exception&) {
            throw ParseError(line_no, col(2), "bad prime '" + toks[2] + "'");
          }
          field = Field::gf(p);
        } else {
          throw ParseError(line_no, 1, "expected 'field rational' or 'field gf <prime>'");
        }
        rebuild(field);
      } else if (kw == "n") {
        any_content = true;
        if (toks.size() != 2) throw ParseError(line_no, 1, "expected 'n <nonnegative integer>'");
        int n;
        try {
          n = std::stoi(toks[1]);
        } catch (const std::exception&) {
          throw ParseError(line_no, col(1), "bad integer '" + toks[1] + "'");
        }
        if (n < 0) throw ParseError(line_no, col(1), "n must be nonnegative");
        q.declared_n = n;
      } else if (kw == "vertex") {
        any_content = true;
        if (toks.size() < 2) throw ParseError(line_no, 1, "expected 'vertex <name> [<name> ...]'");
        for (std::size_t k = 1; k < toks.size(); ++k) q.add_vertex(toks[k]);
      } else if (kw == "arrow") {
        any_content = true;
        if (toks.size() != 4) throw ParseError(line_no, 1, "expected 'arrow <name> <source> <target>'");
        int s = q.vertex_index(toks[2]);
        if (s < 0) throw ParseError(line_no, col(2), "unknown vertex '" + toks[2] + "'");
        int t = q.vertex_index(toks[3]);
        if (t < 0) throw ParseError(line_no, col(3), "unknown vertex '" + toks[3] + "'");
        q.add_arrow(toks[1], s, t);
      } else if (kw == "relation") {
        any_content = true;
        if (toks.size() < 2) throw ParseError(line_no, 1, "expected 'relation <term> {(+|-) <term>}'");
        std::vector<Term> terms;
        Scalar sign = Scalar::one(field);
        std::size_t k = 1;
        if (toks[k] == "-") {
          sign = -sign;
          ++k;
          if (k == toks.size()) throw ParseError(line_no, 1, "dangling sign");
        }
        bool expect_term = true;
        for (; k < toks.size(); ++k) {
          if (!expect_term) {
            if (toks[k] == "+") {
              sign = Scalar::one(field);
            } else if (toks[k] == "-") {
              sign = -Scalar::one(field);
            } else {
              throw ParseError(line_no, col(static_cast<int>(k)), "expected '+' or '-', got '" + toks[k] + "'");
            }
            expect_term = true;
            continue;
          }
          TermSyntax ts = parse_term(field, toks[k], line_no, col(static_cast<int>(k)));
          std::vector<int> app_order;
          for (auto it = ts.arrow_names.rbegin(); it != ts.arrow_names.rend(); ++it) {
            int a = q.arrow_index(*it);
            if (a < 0) throw ParseError(line_no, col(static_cast<int>(k)), "unknown arrow '" + *it + "'");
            app_order.push_back(a);
          }
          int src = q.arrow(app_order.front()).source;
          Path p;
          try {
            p = q.make_path(src, app_order);
          } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, col(static_cast<int>(k)), e.what());
          }
          terms.push_back(Term{p, ts.coeff * sign});
          expect_term = false;
        }
        if (expect_term) throw ParseError(line_no, 1, "dangling sign at end of relation");
        Element e;
        try {
          e = q.make_element(std::move(terms));
          q.add_relation(e);
        } catch (const std::invalid_argument& ex) {
          throw ParseError(line_no, 1, ex.what());
        }
      } else if (kw == "translation") {
        any_content = true;
        if (toks.size() != 4 || toks[2] != "->")
          throw ParseError(line_no, 1, "expected 'translation <i> -> <j>'");
        int i = q.vertex_index(toks[1]);
        if (i < 0) throw ParseError(line_no, col(1), "unknown vertex '" + toks[1] + "'");
        int j = q.vertex_index(toks[3]);
        if (j < 0) throw ParseError(line_no, col(3), "unknown vertex '" + toks[3] + "'");
        q.set_translation(i, j);
      } else {
        throw ParseError(line_no, 1, "unknown keyword '" + kw + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, 1, e.what());
    }
  }
  return q;
}

// ---------------------------------------------------------------------------
// serializer / DOT

std::string serialize_quiver(const BoundQuiver& q) {
  std::ostringstream out;
  for (const std::string& m : q.metadata) out << "# " << m << "\n";
  out << "field " << q.field().to_string() << "\n";
  if (q.declared_n) out << "n " << *q.declared_n << "\n";
  if (q.num_vertices() > 0) {
    out << "vertex";
    for (std::size_t i = 0; i < q.num_vertices(); ++i) out << ' ' << q.vertex_name(static_cast<int>(i));
    out << "\n";
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(static_cast<int>(a));
    out << "arrow " << ar.name << ' ' << q.vertex_name(ar.source) << ' ' << q.vertex_name(ar.target) << "\n";
  }
  for (const Element& r : q.relations()) out << "relation " << q.element_string(r) << "\n";
  for (const auto& [i, j] : q.declared_translation())
    out << "translation " << q.vertex_name(i) << " -> " << q.vertex_name(j) << "\n";
  return out.str();
}

std::string quiver_to_dot(const BoundQuiver& q) {
  std::ostringstream out;
  out << "digraph Q {\n";
  out << "  rankdir=LR;\n";
  if (!q.relations().empty()) {
    out << "  // relations:\n";
    for (const Element& r : q.relations()) out << "  //   " << q.element_string(r) << "\n";
  }
  // Layered quivers (every vertex named "v@t") get one rank column per layer.
  bool layered = q.num_vertices() > 0;
  for (std::size_t i = 0; i < q.num_vertices() && layered; ++i)
    layered = q.vertex_name(static_cast<int>(i)).find('@') != std::string::npos;
  if (layered) {
    std::map<std::string, std::vector<std::string>> layers;
    for (std::size_t i = 0; i < q.num_vertices(); ++i) {
      const std::string& v = q.vertex_name(static_cast<int>(i));
      layers[v.substr(v.rfind('@') + 1)].push_back(v);
    }
    for (const auto& [layer, names] : layers) {
      out << "  { rank=same;";
      for (const std::string& v : names) out << " \"" << v << "\";";
      out << " } // layer " << layer << "\n";
    }
  } else {
    for (std::size_t i = 0; i < q.num_vertices(); ++i)
      out << "  \"" << q.vertex_name(static_cast<int>(i)) << "\";\n";
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(static_cast<int>(a));
    out << "  \"" << q.vertex_name(ar.source) << "\" -> \"" << q.vertex_name(ar.target) << "\" [label=\""
        << ar.name << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<ValidationIssue> validate(const BoundQuiver& q) {
  std::vector<ValidationIssue> issues;
  auto complain = [&](const std::string& m) { issues.push_back(ValidationIssue{m}); };

  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(static_cast<int>(a));
    if (ar.source < 0 || ar.source >= static_cast<int>(q.num_vertices()) || ar.target < 0 ||
        ar.target >= static_cast<int>(q.num_vertices()))
      complain("arrow '" + ar.name + "' has a dangling endpoint");
  }
  int idx = 0;
  for (const Element& r : q.relations()) {
    ++idx;
    std::string tag = "relation #" + std::to_string(idx);
    if (r.is_zero()) {
      complain(tag + " is zero");
      continue;
    }
    if (r.degree < 2) complain(tag + " has degree " + std::to_string(r.degree) + " (need >= 2)");
    for (const Term& t : r.terms) {
      if (t.coeff.is_zero()) complain(tag + " carries a zero coefficient");
      if (t.path.source != r.source || q.path_target(t.path) != r.target || t.path.length() != r.degree)
        complain(tag + " is not homogeneous with common endpoints");
      int at = t.path.source;
      for (int a : t.path.arrows) {
        if (q.arrow(a).source != at) complain(tag + " contains a non-composable term");
        at = q.arrow(a).target;
      }
    }
  }
  {
    std::map<int, int> seen_target;  // tau must be injective
    for (const auto& [i, j] : q.declared_translation()) {
      if (seen_target.count(j))
        complain("translation is not injective at '" + q.vertex_name(j) + "'");
      seen_target[j] = i;
    }
  }
  if (q.declared_n && *q.declared_n < 0) complain("declared n is negative");
  return issues;
}

BoundQuiver opposite(const BoundQuiver& q) {
  BoundQuiver op(q.field());
  op.declared_n = q.declared_n;
  for (std::size_t i = 0; i < q.num_vertices(); ++i) op.add_vertex(q.vertex_name(static_cast<int>(i)));
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(static_cast<int>(a));
    op.add_arrow(ar.name + "*", ar.target, ar.source);
  }
  for (const Element& r : q.relations()) {
    std::vector<Term> terms;
    for (const Term& t : r.terms) {
      // reversing a path keeps application order reversed arrow-by-arrow
      std::vector<int> rev;
      for (auto it = t.path.arrows.rbegin(); it != t.path.arrows.rend(); ++it) rev.push_back(*it);
      terms.push_back(Term{op.make_path(r.target, rev), t.coeff});
    }
    op.add_relation(op.make_element(std::move(terms)));
  }
  for (const auto& [i, j] : q.declared_translation()) op.set_translation(j, i);
  return op;
}

}  // namespace ntrans
