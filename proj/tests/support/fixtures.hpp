#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "leavitt/quiver.hpp"

namespace leavitt::fixtures {

inline Quiver one_loop() {
  return parse_quiver("quiver one_loop\nvertex 1\narrow a : 1 -> 1 associated\n");
}

inline Quiver two_loops() {
  return parse_quiver("quiver two_loops\nvertex 1\narrow a1 : 1 -> 1 associated\narrow a2 : 1 -> 1\n");
}

/// Two vertices: x : 1 -> 2, y : 2 -> 1 and a loop z at 2, with y and x associated.
inline Quiver two_cycle() {
  return parse_quiver(
      "quiver two_cycle\nvertex 1\nvertex 2\n"
      "arrow x : 1 -> 2 associated\narrow y : 2 -> 1 associated\narrow z : 2 -> 2\n");
}

/// Path of Q from arrow ids in written order; an empty list gives e_v.
inline Path path(const Digraph& g, std::initializer_list<std::string_view> ids, VertexIndex v = 0) {
  if (ids.size() == 0) return g.trivial_path(v);
  std::vector<ArrowIndex> written;
  for (auto id : ids) written.push_back(*g.find_arrow(id));
  return g.make_path(written);
}

inline ArrowIndex arrow(const Digraph& g, std::string_view id) { return *g.find_arrow(id); }

inline std::string quiver_file(const std::string& name) {
  return std::string(LEAVITT_QUIVER_DIR) + "/" + name + ".quiver";
}

/// The seeded random quivers used across the suites.
inline std::vector<Quiver> random_quivers(int count) {
  std::vector<Quiver> out;
  for (int s = 1; s <= count; ++s) out.push_back(random_quiver(static_cast<std::uint64_t>(s), 4, 6));
  return out;
}

}  // namespace leavitt::fixtures
