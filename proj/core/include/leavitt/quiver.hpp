#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace leavitt {

using VertexIndex = int;
using ArrowIndex = int;

class QuiverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string id;
  VertexIndex source = 0;
  VertexIndex target = 0;
};

/// A path p = a_m ... a_1, composed right to left. `arrows` is stored in written
/// order, so arrows.front() is the last arrow traversed and arrows.back() the first.
struct Path {
  VertexIndex start = 0;
  VertexIndex end = 0;
  std::vector<ArrowIndex> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }
  ArrowIndex last_arrow() const { return arrows.front(); }
  ArrowIndex first_arrow() const { return arrows.back(); }

  /// Canonical order: length, then arrow indices lexicographically, then endpoints.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
    if (auto c = a.arrows <=> b.arrows; c != 0) return c;
    if (auto c = a.start <=> b.start; c != 0) return c;
    return a.end <=> b.end;
  }
  friend bool operator==(const Path&, const Path&) = default;
};

/// The index (p, q) of a basis vector; lives in degree l(q) - l(p) at vertex t(p).
struct AssociatedPair {
  Path p;
  Path q;

  int degree() const { return q.length() - p.length(); }
  int total_length() const { return p.length() + q.length(); }
  VertexIndex vertex() const { return p.end; }

  friend std::strong_ordering operator<=>(const AssociatedPair&, const AssociatedPair&) = default;
  friend bool operator==(const AssociatedPair&, const AssociatedPair&) = default;
};

/// Finite directed multigraph with dense indices in declaration order.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<std::string> vertex_ids, std::vector<Arrow> arrows);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_.at(v); }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  VertexIndex source(ArrowIndex a) const { return arrows_[a].source; }
  VertexIndex target(ArrowIndex a) const { return arrows_[a].target; }
  const std::vector<ArrowIndex>& incoming(VertexIndex v) const { return incoming_.at(v); }
  const std::vector<ArrowIndex>& outgoing(VertexIndex v) const { return outgoing_.at(v); }
  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<ArrowIndex> find_arrow(std::string_view id) const;

  Path trivial_path(VertexIndex v) const;
  Path arrow_path(ArrowIndex a) const;
  /// Builds a path from arrows in written order; throws QuiverError if not composable.
  Path make_path(std::vector<ArrowIndex> written) const;
  bool is_valid_path(const Path& p) const;
  /// pq, defined when s(p) = t(q).
  Path compose(const Path& p, const Path& q) const;

  std::string path_to_string(const Path& p) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowIndex>> incoming_;
  std::vector<std::vector<ArrowIndex>> outgoing_;
};

class OppositeQuiver;

/// Quiver together with its associated-arrow selection.
class Quiver : public Digraph {
 public:
  Quiver() = default;
  /// `declared` maps vertices to an explicitly chosen associated arrow; other
  /// vertices receive the lowest-index incoming arrow. Vertices without incoming
  /// arrows have no associated arrow (see validate()).
  Quiver(std::string name, std::vector<std::string> vertex_ids, std::vector<Arrow> arrows,
         std::vector<std::optional<ArrowIndex>> declared = {});

  const std::string& name() const { return name_; }
  bool has_associated(VertexIndex v) const { return associated_.at(v) >= 0; }
  ArrowIndex associated(VertexIndex v) const;
  bool associated_declared(VertexIndex v) const { return declared_.at(v); }
  bool is_associated(ArrowIndex a) const { return associated_.at(target(a)) == a; }
  bool has_sources() const;

 private:
  std::string name_;
  std::vector<ArrowIndex> associated_;
  std::vector<bool> declared_;
};

/// Q^op: same arrow indices with endpoints swapped. The special arrow at i starts at i
/// and is the reverse of the associated arrow of Q at i.
class OppositeQuiver : public Digraph {
 public:
  OppositeQuiver() = default;
  explicit OppositeQuiver(const Quiver& q);

  ArrowIndex special(VertexIndex v) const { return special_.at(v); }
  bool is_special(ArrowIndex a) const { return special_.at(source(a)) == a; }

 private:
  std::vector<ArrowIndex> special_;
};

enum class ParseMode {
  kStrict,   ///< reject quivers with source vertices
  kLenient,  ///< structural checks only; validate() reports the rest
};

Quiver parse_quiver(std::string_view text, ParseMode mode = ParseMode::kStrict);
Quiver load_quiver(const std::string& file_path, ParseMode mode = ParseMode::kStrict);
std::string format_quiver(const Quiver& q);

struct Diagnostics {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

Diagnostics validate(const Quiver& q);

OppositeQuiver opposite(const Quiver& q);

/// p^op: same arrows read in reverse, endpoints swapped.
Path op(const Path& p);

/// (hat, tilde): p with its last arrow removed, and with its first arrow removed.
std::pair<Path, Path> truncations(const Digraph& g, const Path& p);

std::vector<Path> enumerate_paths(const Digraph& g, int length,
                                  std::optional<VertexIndex> end_at = std::nullopt,
                                  std::optional<VertexIndex> start_at = std::nullopt);

bool is_associated_pair(const Path& p, const Path& q, const Quiver& q0);

/// Pairs (p, q) in Lambda^l_i with l(p) + l(q) <= N, canonically ordered.
std::vector<AssociatedPair> enumerate_lambda(const Quiver& q0, VertexIndex i, int l, int N);

/// All associated pairs (any vertex, any degree) with l(p) + l(q) <= N.
std::vector<AssociatedPair> enumerate_pairs(const Quiver& q0, int N);

/// Arrows sharing the target of the associated arrow a, other than a.
std::vector<ArrowIndex> t_set(const Quiver& q0, ArrowIndex a);

/// Seeded random quiver without sources; every vertex gets at least one incoming
/// arrow and a random associated arrow.
Quiver random_quiver(std::uint64_t seed, int max_vertices, int max_arrows);

}  // namespace leavitt
