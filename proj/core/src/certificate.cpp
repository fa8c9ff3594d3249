#include "leavitt/certificate.hpp"

namespace leavitt {

Certificate::Certificate(std::string check_name, std::string property_text, std::string quiver_name,
                         std::optional<WindowSpec> w)
    : check(std::move(check_name)), property(std::move(property_text)), quiver(std::move(quiver_name)), window(w) {}

void Certificate::fail(std::string why) {
  if (passed) witness = std::move(why);
  passed = false;
}

void Certificate::adopt(Certificate child) {
  if (!child.passed) {
    if (passed) witness = child.check + ": " + child.witness.value_or("failed");
    passed = false;
  }
  children.push_back(std::move(child));
}

nlohmann::ordered_json Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["property"] = property;
  j["quiver"] = quiver;
  if (window) j["window"] = {{"lmin", window->l_min}, {"lmax", window->l_max}, {"N", window->N}};
  j["status"] = passed ? "pass" : "fail";
  j["dimensions"] = dimensions;
  if (witness) j["witness"] = *witness;
  if (!children.empty()) {
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : children) j["children"].push_back(c.to_json());
  }
  return j;
}

}  // namespace leavitt
