#include "leavitt/literal.hpp"

#include <cctype>
#include <functional>
#include <vector>

namespace leavitt {

namespace {

template <class Key>
std::string format_sum(const Combination<Key>& x, const std::function<std::string(const Key&)>& fmt) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    bool neg = !c.is_prime_field() && c.to_rational() < 0;
    Scalar magnitude = neg ? -c : c;
    if (first) {
      out += neg ? "-" : "";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (!magnitude.is_one()) out += magnitude.to_string() + " ";
    out += fmt(k);
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  /// Reads up to the closing quote; the opening quote is consumed by the caller.
  std::string quoted() {
    std::size_t end = s_.find('"', pos_);
    if (end == std::string_view::npos) fail("unterminated quote");
    std::string out(s_.substr(pos_, end - pos_));
    pos_ = end + 1;
    return out;
  }
  std::string token() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' || c == ',') break;
      ++pos_;
    }
    return std::string(s_.substr(start, pos_ - start));
  }
  std::string number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw LiteralError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Path parse_path(const Digraph& g, const std::string& ids, Cursor& cur) {
  std::vector<ArrowIndex> arrows;
  std::size_t start = 0;
  while (start <= ids.size()) {
    std::size_t dot = ids.find('.', start);
    std::string id = ids.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    auto a = g.find_arrow(id);
    if (!a) cur.fail("unknown arrow '" + id + "'");
    arrows.push_back(*a);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  try {
    return g.make_path(arrows);
  } catch (const QuiverError& e) {
    cur.fail(e.what());
  }
}

VertexIndex parse_vertex_call(const Digraph& g, Cursor& cur) {
  cur.expect('(');
  std::string id = cur.token();
  cur.expect(')');
  auto v = g.find_vertex(id);
  if (!v) cur.fail("unknown vertex '" + id + "'");
  return *v;
}

/// Parses `[coeff] atom {(+|-) [coeff] atom}`. A coefficient with no atom after it
/// means `coeff * unit()`; unit may be empty to reject bare scalars.
template <class Elem>
Elem parse_sum(std::string_view text, const Field& field, const std::function<Elem(Cursor&)>& atom,
               const std::function<Elem()>& unit) {
  Cursor cur(text);
  Elem out;
  bool first = true;
  while (!cur.done()) {
    long sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    Scalar c = Scalar::in_field(field, sign);
    bool has_coeff = cur.at_digit();
    if (has_coeff) {
      std::string num = cur.number();
      try {
        c *= Scalar::parse(num, field);
      } catch (const std::exception& e) {
        cur.fail(e.what());
      }
    }
    Elem a;
    if (has_coeff && (cur.done() || cur.peek() == '+' || cur.peek() == '-')) {
      if (!unit) cur.fail("expected a basis vector after the coefficient");
      a = unit();
    } else {
      a = atom(cur);
    }
    a *= c;
    out += a;
    first = false;
  }
  if (first) cur.fail("empty literal");
  return out;
}

}  // namespace

std::string format_path_ids(const Digraph& g, const Path& p) {
  std::string out;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k > 0) out += '.';
    out += g.arrow(p.arrows[k]).id;
  }
  return out;
}

std::string format_term(const Quiver& q, const NormalTerm& t) {
  if (t.ghost.is_trivial() && t.real.is_trivial()) return "e(" + q.vertex_id(t.ghost.start) + ")";
  return "g\"" + format_path_ids(q, t.ghost) + "\" r\"" + format_path_ids(q, t.real) + "\"";
}

std::string format_vector(const Quiver& q, const BasisVector& v) {
  std::string head = v.is_vertex_type() ? "e(" + q.vertex_id(v.vertex()) + ")" : q.arrow(v.arrow).id;
  return head + " z(p\"" + format_path_ids(q, v.pair.p) + "\", q\"" + format_path_ids(q, v.pair.q) + "\")";
}

std::string format_element(const Quiver& q, const LpaElement& x) {
  return format_sum<NormalTerm>(x, [&](const NormalTerm& t) { return format_term(q, t); });
}

std::string format_element(const Quiver& q, const ModuleElement& m) {
  return format_sum<BasisVector>(m, [&](const BasisVector& v) { return format_vector(q, v); });
}

LpaElement parse_lpa_element(const LeavittAlgebra& b, std::string_view text, const Field& field) {
  const OppositeQuiver& op = b.opposite();
  std::string trimmed(text);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.erase(0, 1);
  if (trimmed == "0") return {};
  auto atom = [&](Cursor& cur) -> LpaElement {
    char c = cur.peek();
    if (c == 'e') {
      cur.token();
      return b.vertex(parse_vertex_call(op, cur));
    }
    if (c != 'g') cur.fail("expected a term e(i) or g\"..\" r\"..\"");
    cur.token();
    cur.expect('"');
    std::string gids = cur.quoted();
    if (cur.peek() != 'r') cur.fail("expected r\"..\"");
    cur.token();
    cur.expect('"');
    std::string rids = cur.quoted();
    if (gids.empty() && rids.empty()) cur.fail("use e(i) for a vertex term");
    if (gids.empty()) {
      Path r = parse_path(op, rids, cur);
      return LpaElement::from_term(NormalTerm{op.trivial_path(r.end), r});
    }
    Path g = parse_path(op, gids, cur);
    if (rids.empty()) return LpaElement::from_term(NormalTerm{g, op.trivial_path(g.end)});
    Path r = parse_path(op, rids, cur);
    if (g.end != r.end) cur.fail("ghost and real paths end at different vertices");
    LpaElement gstar = LpaElement::from_term(NormalTerm{g, op.trivial_path(g.end)});
    LpaElement real = LpaElement::from_term(NormalTerm{op.trivial_path(r.end), r});
    return b.multiply(gstar, real);
  };
  std::function<LpaElement()> unit = [&] { return b.one(); };
  return parse_sum<LpaElement>(trimmed, field, atom, unit);
}

ModuleElement parse_module_element(const Quiver& q, std::string_view text, const Field& field) {
  std::string trimmed(text);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
  if (trimmed.find_first_not_of(" \t") != std::string::npos &&
      trimmed.substr(trimmed.find_first_not_of(" \t")) == "0") {
    return {};
  }
  auto atom = [&](Cursor& cur) -> ModuleElement {
    if (cur.done()) cur.fail("expected a basis vector");
    std::string head = cur.token();
    ArrowIndex arrow = -1;
    std::optional<VertexIndex> vertex;
    if (head == "e") {
      vertex = parse_vertex_call(q, cur);
    } else {
      auto a = q.find_arrow(head);
      if (!a) cur.fail("unknown arrow '" + head + "'");
      arrow = *a;
    }
    if (cur.token() != "z") cur.fail("expected z(p\"..\", q\"..\")");
    cur.expect('(');
    if (cur.token() != "p") cur.fail("expected p\"..\"");
    cur.expect('"');
    std::string pids = cur.quoted();
    cur.expect(',');
    if (cur.token() != "q") cur.fail("expected q\"..\"");
    cur.expect('"');
    std::string qids = cur.quoted();
    cur.expect(')');
    VertexIndex i = vertex ? *vertex : q.source(arrow);
    std::optional<Path> p;
    std::optional<Path> qq;
    if (!pids.empty()) p = parse_path(q, pids, cur);
    if (!qids.empty()) qq = parse_path(q, qids, cur);
    VertexIndex base = p ? p->start : qq ? qq->start : i;
    if (!p) p = q.trivial_path(base);
    if (!qq) qq = q.trivial_path(base);
    BasisVector v{AssociatedPair{*p, *qq}, arrow};
    if (v.vertex() != i) cur.fail("vector prefix does not match t(p)");
    if (!is_valid_vector(q, v)) cur.fail("(p, q) is not an associated pair");
    return ModuleElement::from_term(v);
  };
  return parse_sum<ModuleElement>(trimmed, field, atom, {});
}

}  // namespace leavitt
