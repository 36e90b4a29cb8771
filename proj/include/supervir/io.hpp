#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "supervir/automorphisms.hpp"
#include "supervir/cohomology.hpp"
#include "supervir/derivations.hpp"
#include "supervir/error.hpp"
#include "supervir/superalgebra.hpp"

namespace supervir {

using Json = nlohmann::ordered_json;

/// An input problem tied to one offending literal; file loaders use the
/// token to report a line number.
class LiteralError : public InputError {
 public:
  LiteralError(std::string token, const std::string& message)
      : InputError(message), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

struct SessionConfig {
  std::int64_t d = 0;
  std::vector<std::string> gamma_generators;
  std::string s = "0";
  Variant variant = Variant::SV;
  SVirConvention convention = SVirConvention::AsPublished;
  std::optional<Json> window;
  std::uint64_t seed = 1;
  /// When positive, check-axioms samples this many random triples instead of
  /// enumerating all of them.
  std::size_t triple_samples = 0;
};

SessionConfig parse_session_config(const Json& j);
IndexGroup build_group(const SessionConfig& cfg);

/// "L(3/2, 0)", "G(1/2 + 1*sqrt(2), 2)", "C"; "L(2)" means level 0.
BasisVector parse_basis(const Algebra& algebra, std::string_view text);
GroupElement parse_degree(const IndexGroup& group, std::string_view text);
Scalar parse_scalar_field(const Algebra& algebra, const Json& j);

/// {"terms": [{"basis": "L(1,0)", "coeff": "2"}]} or a bare basis literal.
Element parse_element(const Algebra& algebra, const Json& j);
Json element_to_json(const Algebra& algebra, const Element& x);

/// {"degree_coord_bound": 2, "i_max": 4} or {"degrees": ["0", "1/2", ...], "i_max": 4}.
Window parse_window(const IndexGroup& group, const Json& j);

/// {"parity": "even", "degree": "1", "images": [{"basis": "L(0,0)", "image": {...}}]}
DerivationTable parse_derivation_table(const Algebra& algebra, const Json& j);

/// {"tau": {"1/2": "2", "sqrt(2)": "1"}, "c": "3 + 2*sqrt(2)", "r": "1 + 1*sqrt(2)", "sign": -1}
AutParams parse_aut_params(const Algebra& algebra, const Json& j);
Json aut_params_to_json(const Algebra& algebra, const AutParams& p);

/// {"kind": "coboundary", "g": {"L(0,0)": "1"}} or
/// {"kind": "table", "window": {...}, "entries": [{"x": ..., "y": ..., "value": ...}]}.
/// A table without its own window uses default_table_window.
CocycleSpec parse_cocycle(const Algebra& algebra, const Json& j, const Window& default_table_window);
Json functional_to_json(const Algebra& algebra, const LinearFunctional& f);

/// Reads and parses a JSON file. Parse failures name the file and line.
Json load_json_file(const std::string& path);

/// Runs fn(json); a LiteralError escaping it is rethrown as InputError
/// prefixed with "path:line:" for the first line containing the token.
template <class Fn>
auto with_file_context(const std::string& path, Fn&& fn) -> decltype(fn(std::declval<const Json&>()));

std::string locate_token(const std::string& path, const std::string& token);

template <class Fn>
auto with_file_context(const std::string& path, Fn&& fn) -> decltype(fn(std::declval<const Json&>())) {
  Json j = load_json_file(path);
  try {
    return fn(j);
  } catch (const LiteralError& e) {
    throw InputError(locate_token(path, e.token()) + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace supervir
