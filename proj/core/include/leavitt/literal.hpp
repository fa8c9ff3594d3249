#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "leavitt/lpa.hpp"
#include "leavitt/module.hpp"

namespace leavitt {

class LiteralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arrow ids joined by '.', in written order; "" for a trivial path.
std::string format_path_ids(const Digraph& g, const Path& p);

/// `e(i)` or `g"<ghost>" r"<real>"` with both paths written in Q^op.
std::string format_term(const Quiver& q, const NormalTerm& t);
/// `e(i) z(p"..", q"..")` or `<arrow> z(p"..", q"..")` with paths written in Q.
std::string format_vector(const Quiver& q, const BasisVector& v);

std::string format_element(const Quiver& q, const LpaElement& x);
std::string format_element(const Quiver& q, const ModuleElement& m);

/// Parses a sum of signed, optionally scaled terms; `0` and `1` are accepted. A term
/// g"u" r"v" is read as the product u* v and normalized, so any composable pair of
/// Q^op paths is allowed.
LpaElement parse_lpa_element(const LeavittAlgebra& b, std::string_view text,
                             const Field& field = Field::rationals());
ModuleElement parse_module_element(const Quiver& q, std::string_view text,
                                   const Field& field = Field::rationals());

}  // namespace leavitt
