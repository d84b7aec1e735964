#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "regclosure/ideal.hpp"

namespace regclosure {

/// Parse either form of an ideal:
///   text  "x^2, x*y^2, y^3"  or  "x1^2*x3, x2"   ("1" is the unit, "0" the zero ideal)
///   JSON  {"n": 2, "gens": [[2,0],[1,2],[0,3]]}
/// For text, the ring dimension is `n` when given, otherwise the largest
/// variable index that occurs. Aliases x, y, z stand for x1, x2, x3 and are
/// only accepted when n <= 3.
[[nodiscard]] MonomialIdeal parse_ideal(std::string_view input,
                                        std::optional<std::size_t> n = std::nullopt);

[[nodiscard]] MonomialIdeal ideal_from_json(const nlohmann::json &j);
[[nodiscard]] nlohmann::json ideal_to_json(const MonomialIdeal &ideal);
[[nodiscard]] nlohmann::json exponent_to_json(const ExponentVector &v);
[[nodiscard]] ExponentVector exponent_from_json(const nlohmann::json &j);

/// Canonical single-line JSON, e.g. {"gens":[[2,0],[0,3]],"n":2}.
[[nodiscard]] std::string to_canonical_json(const MonomialIdeal &ideal);

/// "x^2*y" (n <= 3) or "x1^2*x2" style.
[[nodiscard]] std::string monomial_to_text(const ExponentVector &v);
[[nodiscard]] std::string ideal_to_text(const MonomialIdeal &ideal);

/// "1,0,2" -> (1,0,2).
[[nodiscard]] ExponentVector parse_exponent_list(std::string_view text);

} // namespace regclosure
