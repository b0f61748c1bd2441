#pragma once

// JSON Lines encoding of run output. Every file starts with a header record;
// integers beyond the 53-bit safe range are written as decimal strings.

#include <string_view>

#include <gmpxx.h>
#include <json.hpp>

#include "sixterm/bounds.hpp"
#include "sixterm/parametric.hpp"
#include "sixterm/search.hpp"

namespace sixterm {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Number when |v| <= 2^53 - 1, decimal string otherwise.
nlohmann::json json_integer(const mpz_class& v);
/// Accepts either encoding. Throws std::invalid_argument otherwise.
mpz_class integer_from_json(const nlohmann::json& j);

nlohmann::json bounds_to_json(const BoundSet& b);
BoundSet bounds_from_json(const nlohmann::json& j);

nlohmann::json header_record(std::string_view command, const nlohmann::json& config, const BoundSet& b);
nlohmann::json solution_record(const SolutionRecord& r, std::int64_t X);
nlohmann::json family_record(const FamilyRecord& f, std::int64_t X);
nlohmann::json term_record(std::int64_t A, int n, const mpz_class& x, const mpz_class& y);

SolutionRecord solution_from_json(const nlohmann::json& j);
FamilyRecord family_from_json(const nlohmann::json& j);

/// One line, compact, keys sorted.
std::string to_line(const nlohmann::json& j);

}  // namespace sixterm
