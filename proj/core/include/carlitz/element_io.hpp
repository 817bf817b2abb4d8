#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "carlitz/perfect.hpp"

namespace carlitz {

// Text grammar: terms "c*x^(n/Q)" in descending exponent order joined by
// " + ". A coefficient of 1 is dropped on non-constant terms, a term of
// exponent 0 prints its coefficient alone, and the zero polynomial prints
// "0". A rational with denominator 1 prints as its numerator, otherwise as
// "(num)/(den)". Coefficients are integer codes of F_q elements.
std::string to_text(const PerfectPoly& p);
std::string to_text(const PerfectRational& r);

/// Parses the text grammar above; throws InvalidArgument on malformed input.
PerfectRational parse_element(const Field& f, std::string_view text);

/// {"level": e, "num": [[n, c], ...], "den": [[n, c], ...]}, where exponent
/// numerators n are read at the common level e of numerator and denominator.
nlohmann::json to_json(const PerfectRational& r);
PerfectRational element_from_json(const Field& f, const nlohmann::json& j);

}  // namespace carlitz
