#include "leavitt/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace leavitt {

namespace {

bool valid_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (static_cast<unsigned char>(c) <= ' ') return false;
    if (c == '.' || c == '"' || c == '(' || c == ')' || c == ',' || c == '#' || c == ':') return false;
  }
  return true;
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

QuiverError line_error(int line, const std::string& message) {
  return QuiverError("line " + std::to_string(line) + ": " + message);
}

}  // namespace

Digraph::Digraph(std::vector<std::string> vertex_ids, std::vector<Arrow> arrows)
    : vertex_ids_(std::move(vertex_ids)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertex_ids_) {
    if (!valid_token(v)) throw QuiverError("invalid vertex id '" + v + "'");
    if (!seen.insert(v).second) throw QuiverError("duplicate vertex id '" + v + "'");
  }
  seen.clear();
  incoming_.assign(vertex_ids_.size(), {});
  outgoing_.assign(vertex_ids_.size(), {});
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    const Arrow& arr = arrows_[a];
    if (!valid_token(arr.id)) throw QuiverError("invalid arrow id '" + arr.id + "'");
    if (!seen.insert(arr.id).second) throw QuiverError("duplicate arrow id '" + arr.id + "'");
    if (arr.source < 0 || arr.source >= vertex_count() || arr.target < 0 || arr.target >= vertex_count()) {
      throw QuiverError("arrow '" + arr.id + "' has an endpoint outside the vertex set");
    }
    outgoing_[arr.source].push_back(static_cast<ArrowIndex>(a));
    incoming_[arr.target].push_back(static_cast<ArrowIndex>(a));
  }
}

std::optional<VertexIndex> Digraph::find_vertex(std::string_view id) const {
  for (std::size_t v = 0; v < vertex_ids_.size(); ++v) {
    if (vertex_ids_[v] == id) return static_cast<VertexIndex>(v);
  }
  return std::nullopt;
}

std::optional<ArrowIndex> Digraph::find_arrow(std::string_view id) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].id == id) return static_cast<ArrowIndex>(a);
  }
  return std::nullopt;
}

Path Digraph::trivial_path(VertexIndex v) const {
  if (v < 0 || v >= vertex_count()) throw QuiverError("vertex index out of range");
  return Path{v, v, {}};
}

Path Digraph::arrow_path(ArrowIndex a) const {
  const Arrow& arr = arrow(a);
  return Path{arr.source, arr.target, {a}};
}

Path Digraph::make_path(std::vector<ArrowIndex> written) const {
  if (written.empty()) throw QuiverError("make_path needs at least one arrow");
  for (ArrowIndex a : written) {
    if (a < 0 || a >= arrow_count()) throw QuiverError("arrow index out of range");
  }
  for (std::size_t k = 0; k + 1 < written.size(); ++k) {
    if (source(written[k]) != target(written[k + 1])) {
      throw QuiverError("arrows " + arrow(written[k + 1]).id + " and " + arrow(written[k]).id +
                        " do not compose");
    }
  }
  Path p;
  p.end = target(written.front());
  p.start = source(written.back());
  p.arrows = std::move(written);
  return p;
}

bool Digraph::is_valid_path(const Path& p) const {
  if (p.start < 0 || p.start >= vertex_count() || p.end < 0 || p.end >= vertex_count()) return false;
  if (p.is_trivial()) return p.start == p.end;
  for (ArrowIndex a : p.arrows) {
    if (a < 0 || a >= arrow_count()) return false;
  }
  for (std::size_t k = 0; k + 1 < p.arrows.size(); ++k) {
    if (source(p.arrows[k]) != target(p.arrows[k + 1])) return false;
  }
  return target(p.arrows.front()) == p.end && source(p.arrows.back()) == p.start;
}

Path Digraph::compose(const Path& p, const Path& q) const {
  if (p.start != q.end) {
    throw QuiverError("cannot compose " + path_to_string(p) + " after " + path_to_string(q));
  }
  Path r{q.start, p.end, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

std::string Digraph::path_to_string(const Path& p) const {
  if (p.is_trivial()) return "e_" + vertex_id(p.start);
  std::string out;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k > 0) out += '.';
    out += arrow(p.arrows[k]).id;
  }
  return out;
}

Quiver::Quiver(std::string name, std::vector<std::string> vertex_ids, std::vector<Arrow> arrows,
               std::vector<std::optional<ArrowIndex>> declared)
    : Digraph(std::move(vertex_ids), std::move(arrows)), name_(std::move(name)) {
  declared.resize(vertex_count());
  associated_.assign(vertex_count(), -1);
  declared_.assign(vertex_count(), false);
  for (VertexIndex v = 0; v < vertex_count(); ++v) {
    if (declared[v]) {
      ArrowIndex a = *declared[v];
      if (a < 0 || a >= arrow_count() || target(a) != v) {
        throw QuiverError("declared associated arrow does not terminate at vertex '" + vertex_id(v) + "'");
      }
      associated_[v] = a;
      declared_[v] = true;
    } else if (!incoming(v).empty()) {
      associated_[v] = incoming(v).front();
    }
  }
}

ArrowIndex Quiver::associated(VertexIndex v) const {
  ArrowIndex a = associated_.at(v);
  if (a < 0) throw QuiverError("vertex '" + vertex_id(v) + "' has no incoming arrow");
  return a;
}

bool Quiver::has_sources() const {
  for (VertexIndex v = 0; v < vertex_count(); ++v) {
    if (incoming(v).empty()) return true;
  }
  return false;
}

OppositeQuiver::OppositeQuiver(const Quiver& q)
    : Digraph([&] {
                std::vector<std::string> ids;
                for (VertexIndex v = 0; v < q.vertex_count(); ++v) ids.push_back(q.vertex_id(v));
                return ids;
              }(),
              [&] {
                std::vector<Arrow> rev;
                for (const Arrow& a : q.arrows()) rev.push_back(Arrow{a.id, a.target, a.source});
                return rev;
              }()) {
  special_.assign(q.vertex_count(), -1);
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    if (q.has_associated(v)) special_[v] = q.associated(v);
  }
}

Quiver parse_quiver(std::string_view text, ParseMode mode) {
  std::string name;
  std::vector<std::string> vertices;
  std::map<std::string, int> vertex_line;
  struct PendingArrow {
    std::string id, src, tgt;
    bool associated;
    int line;
  };
  std::vector<PendingArrow> pending;
  struct PendingAssoc {
    std::string vertex, arrow;
    int line;
  };
  std::vector<PendingAssoc> assoc_lines;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto words = split_words(raw);
    if (words.empty()) continue;
    const std::string& kw = words[0];
    if (kw == "quiver") {
      if (words.size() != 2) throw line_error(line_no, "expected 'quiver <name>'");
      if (!name.empty()) throw line_error(line_no, "quiver name declared twice");
      name = words[1];
    } else if (kw == "vertex") {
      if (words.size() != 2 || !valid_token(words[1])) throw line_error(line_no, "expected 'vertex <id>'");
      if (vertex_line.count(words[1])) throw line_error(line_no, "duplicate vertex id '" + words[1] + "'");
      vertex_line[words[1]] = line_no;
      vertices.push_back(words[1]);
    } else if (kw == "arrow") {
      // arrow <id> : <src> -> <tgt> [associated]
      bool ok = (words.size() == 6 || words.size() == 7) && words[2] == ":" && words[4] == "->" &&
                valid_token(words[1]) && valid_token(words[3]) && valid_token(words[5]);
      if (ok && words.size() == 7 && words[6] != "associated") ok = false;
      if (!ok) throw line_error(line_no, "expected 'arrow <id> : <src> -> <tgt> [associated]'");
      pending.push_back({words[1], words[3], words[5], words.size() == 7, line_no});
    } else if (kw == "associated") {
      if (words.size() != 3) throw line_error(line_no, "expected 'associated <vertex> <arrow>'");
      assoc_lines.push_back({words[1], words[2], line_no});
    } else {
      throw line_error(line_no, "unknown declaration '" + kw + "'");
    }
  }
  if (name.empty()) name = "unnamed";

  std::map<std::string, VertexIndex> vindex;
  for (std::size_t v = 0; v < vertices.size(); ++v) vindex[vertices[v]] = static_cast<VertexIndex>(v);

  std::vector<Arrow> arrows;
  std::map<std::string, ArrowIndex> aindex;
  std::vector<std::optional<ArrowIndex>> declared(vertices.size());
  std::vector<int> declared_line(vertices.size(), 0);
  auto declare = [&](VertexIndex v, ArrowIndex a, int line) {
    if (declared[v]) {
      throw line_error(line, "second associated declaration for vertex '" + vertices[v] + "' (first on line " +
                                 std::to_string(declared_line[v]) + ")");
    }
    declared[v] = a;
    declared_line[v] = line;
  };
  for (const auto& pa : pending) {
    if (aindex.count(pa.id)) throw line_error(pa.line, "duplicate arrow id '" + pa.id + "'");
    auto s = vindex.find(pa.src);
    auto t = vindex.find(pa.tgt);
    if (s == vindex.end()) throw line_error(pa.line, "arrow endpoint '" + pa.src + "' is not a declared vertex");
    if (t == vindex.end()) throw line_error(pa.line, "arrow endpoint '" + pa.tgt + "' is not a declared vertex");
    auto a = static_cast<ArrowIndex>(arrows.size());
    aindex[pa.id] = a;
    arrows.push_back(Arrow{pa.id, s->second, t->second});
    if (pa.associated) declare(t->second, a, pa.line);
  }
  for (const auto& al : assoc_lines) {
    auto v = vindex.find(al.vertex);
    if (v == vindex.end()) throw line_error(al.line, "unknown vertex '" + al.vertex + "'");
    auto a = aindex.find(al.arrow);
    if (a == aindex.end()) throw line_error(al.line, "unknown arrow '" + al.arrow + "'");
    if (arrows[a->second].target != v->second) {
      throw line_error(al.line, "associated arrow '" + al.arrow + "' does not terminate at vertex '" + al.vertex + "'");
    }
    declare(v->second, a->second, al.line);
  }

  Quiver q(name, vertices, arrows, declared);
  if (mode == ParseMode::kStrict) {
    if (q.vertex_count() == 0) throw QuiverError("quiver has no vertices");
    if (q.arrow_count() == 0) throw QuiverError("quiver has no arrows");
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
      if (q.incoming(v).empty()) {
        throw line_error(vertex_line[q.vertex_id(v)], "source vertex '" + q.vertex_id(v) + "' has no incoming arrow");
      }
    }
  }
  return q;
}

Quiver load_quiver(const std::string& file_path, ParseMode mode) {
  std::ifstream in(file_path);
  if (!in) throw std::runtime_error("cannot open '" + file_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str(), mode);
}

std::string format_quiver(const Quiver& q) {
  std::ostringstream out;
  out << "quiver " << q.name() << '\n';
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) out << "vertex " << q.vertex_id(v) << '\n';
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    out << "arrow " << arr.id << " : " << q.vertex_id(arr.source) << " -> " << q.vertex_id(arr.target);
    if (q.is_associated(a) && q.associated_declared(arr.target)) out << " associated";
    out << '\n';
  }
  return out.str();
}

Diagnostics validate(const Quiver& q) {
  Diagnostics d;
  auto fail = [&](std::string msg) {
    d.ok = false;
    d.failures.push_back(std::move(msg));
  };
  if (q.vertex_count() == 0) fail("vertex set is empty");
  if (q.arrow_count() == 0) fail("arrow set is empty");
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    if (q.incoming(v).empty()) {
      fail("vertex " + q.vertex_id(v) + " is a source");
      continue;
    }
    if (!q.has_associated(v) || q.target(q.associated(v)) != v) {
      fail("vertex " + q.vertex_id(v) + " has no well-formed associated arrow");
    } else if (!q.associated_declared(v)) {
      d.notes.push_back("default associated arrow " + q.arrow(q.associated(v)).id + " chosen at vertex " +
                        q.vertex_id(v));
    }
  }
  return d;
}

OppositeQuiver opposite(const Quiver& q) { return OppositeQuiver(q); }

Path op(const Path& p) {
  Path r{p.end, p.start, p.arrows};
  std::reverse(r.arrows.begin(), r.arrows.end());
  return r;
}

std::pair<Path, Path> truncations(const Digraph& g, const Path& p) {
  if (p.is_trivial()) throw QuiverError("truncations of a trivial path");
  Path hat{p.start, g.source(p.last_arrow()), {p.arrows.begin() + 1, p.arrows.end()}};
  Path tilde{g.target(p.first_arrow()), p.end, {p.arrows.begin(), p.arrows.end() - 1}};
  return {hat, tilde};
}

std::vector<Path> enumerate_paths(const Digraph& g, int length, std::optional<VertexIndex> end_at,
                                  std::optional<VertexIndex> start_at) {
  std::vector<Path> out;
  if (length < 0) return out;
  if (length == 0) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if ((!end_at || *end_at == v) && (!start_at || *start_at == v)) out.push_back(g.trivial_path(v));
    }
    return out;
  }
  // Extend from the last arrow backwards, so output is already lexicographic in written order.
  std::vector<ArrowIndex> stack;
  auto extend = [&](auto& self, VertexIndex need_target) -> void {
    if (static_cast<int>(stack.size()) == length) {
      if (!start_at || g.source(stack.back()) == *start_at) {
        Path p;
        p.arrows = stack;
        p.end = g.target(stack.front());
        p.start = g.source(stack.back());
        out.push_back(std::move(p));
      }
      return;
    }
    for (ArrowIndex a : g.incoming(need_target)) {
      stack.push_back(a);
      self(self, g.source(a));
      stack.pop_back();
    }
  };
  for (ArrowIndex a = 0; a < g.arrow_count(); ++a) {
    if (end_at && g.target(a) != *end_at) continue;
    stack.push_back(a);
    extend(extend, g.source(a));
    stack.pop_back();
  }
  return out;
}

bool is_associated_pair(const Path& p, const Path& q, const Quiver& q0) {
  if (!q0.is_valid_path(p) || !q0.is_valid_path(q)) return false;
  if (p.start != q.start) return false;
  if (p.is_trivial() || q.is_trivial()) return true;
  ArrowIndex a1 = p.first_arrow();
  ArrowIndex b1 = q.first_arrow();
  return a1 != b1 || !q0.is_associated(a1);
}

std::vector<AssociatedPair> enumerate_lambda(const Quiver& q0, VertexIndex i, int l, int N) {
  std::vector<AssociatedPair> out;
  for (int lp = std::max(0, -l); 2 * lp + l <= N; ++lp) {
    int lq = lp + l;
    for (const Path& p : enumerate_paths(q0, lp, i)) {
      for (const Path& q : enumerate_paths(q0, lq, std::nullopt, p.start)) {
        if (is_associated_pair(p, q, q0)) out.push_back(AssociatedPair{p, q});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AssociatedPair> enumerate_pairs(const Quiver& q0, int N) {
  std::vector<AssociatedPair> out;
  for (int lp = 0; lp <= N; ++lp) {
    for (const Path& p : enumerate_paths(q0, lp)) {
      for (int lq = 0; lp + lq <= N; ++lq) {
        for (const Path& q : enumerate_paths(q0, lq, std::nullopt, p.start)) {
          if (is_associated_pair(p, q, q0)) out.push_back(AssociatedPair{p, q});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ArrowIndex> t_set(const Quiver& q0, ArrowIndex a) {
  if (!q0.is_associated(a)) {
    throw QuiverError("arrow '" + q0.arrow(a).id + "' is not the associated arrow at its target");
  }
  std::vector<ArrowIndex> out;
  for (ArrowIndex b : q0.incoming(q0.target(a))) {
    if (b != a) out.push_back(b);
  }
  return out;
}

Quiver random_quiver(std::uint64_t seed, int max_vertices, int max_arrows) {
  if (max_vertices < 1 || max_arrows < max_vertices) {
    throw std::invalid_argument("random_quiver needs 1 <= max_vertices <= max_arrows");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int n = uniform(1, max_vertices);
  int m = uniform(n, max_arrows);
  std::vector<std::string> vertices;
  for (int v = 0; v < n; ++v) vertices.push_back(std::to_string(v + 1));
  std::vector<Arrow> arrows;
  for (int v = 0; v < n; ++v) arrows.push_back(Arrow{"", uniform(0, n - 1), v});
  for (int k = n; k < m; ++k) arrows.push_back(Arrow{"", uniform(0, n - 1), uniform(0, n - 1)});
  std::shuffle(arrows.begin(), arrows.end(), rng);
  for (std::size_t k = 0; k < arrows.size(); ++k) arrows[k].id = "a" + std::to_string(k + 1);
  std::vector<std::optional<ArrowIndex>> declared(n);
  for (int v = 0; v < n; ++v) {
    std::vector<ArrowIndex> in;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      if (arrows[k].target == v) in.push_back(static_cast<ArrowIndex>(k));
    }
    declared[v] = in[uniform(0, static_cast<int>(in.size()) - 1)];
  }
  return Quiver("random-" + std::to_string(seed), vertices, arrows, declared);
}

}  // namespace leavitt
