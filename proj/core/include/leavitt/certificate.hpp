#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace leavitt {

/// Degree range [l_min, l_max] and bound N on l(p) + l(q).
struct WindowSpec {
  int l_min = -2;
  int l_max = 2;
  int N = 4;

  friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

/// Structured outcome of a verification. Only the first failure is kept as witness.
struct Certificate {
  std::string check;
  std::string property;
  std::string quiver;
  std::optional<WindowSpec> window;
  bool passed = true;
  nlohmann::ordered_json dimensions = nlohmann::ordered_json::object();
  std::optional<std::string> witness;
  std::vector<Certificate> children;

  Certificate() = default;
  Certificate(std::string check_name, std::string property_text, std::string quiver_name,
              std::optional<WindowSpec> w = std::nullopt);

  void fail(std::string why);
  /// Records `ok`; on the first false, stores the lazily built witness.
  template <class F>
  bool require(bool ok, F&& why) {
    if (!ok) fail(why());
    return ok;
  }
  void adopt(Certificate child);

  nlohmann::ordered_json to_json() const;
};

}  // namespace leavitt
