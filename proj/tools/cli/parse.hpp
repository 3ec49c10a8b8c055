#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kummer/model.hpp"
#include "kummer/pure_gaps.hpp"

namespace kummer::cli {

// "6,1" -> {6, 1}. Throws Error(kInvalidArgument) on malformed input.
std::vector<std::int64_t> parse_tuple(std::string_view text);

// "infty,1,2": P_inf may only appear first; finite indices must be distinct
// and within 1..r of the curve.
struct ParsedSignature {
  PlaceSignature signature;
  std::vector<Place> places;
};
ParsedSignature parse_signature(std::string_view text,
                                const KummerCurve& curve);

// "6,1..7,1" -> low {6, 1}, high {7, 1}; a bare tuple means low == high.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> parse_box(
    std::string_view text);

std::string join(const std::vector<std::int64_t>& values,
                 std::string_view separator);

}  // namespace kummer::cli
