#include "cli/parse.hpp"

#include <charconv>

#include "kummer/error.hpp"

namespace kummer::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::int64_t parse_int(std::string_view token) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    throw Error(ErrorCode::kInvalidArgument,
                "expected an integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

std::vector<std::int64_t> parse_tuple(std::string_view text) {
  std::vector<std::int64_t> out;
  for (auto token : split(text, ',')) out.push_back(parse_int(token));
  return out;
}

ParsedSignature parse_signature(std::string_view text,
                                const KummerCurve& curve) {
  ParsedSignature parsed;
  auto tokens = split(text, ',');
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == "infty" || tokens[i] == "inf") {
      if (i != 0)
        throw Error(ErrorCode::kInvalidArgument,
                    "infty must come first in a place signature");
      parsed.signature.with_infty = true;
      parsed.places.push_back(Place::infinity());
      continue;
    }
    const std::int64_t index = parse_int(tokens[i]);
    if (index < 1 || index > curve.r())
      throw Error(ErrorCode::kUnsupportedPlace,
                  "finite place index must be in 1.." +
                      std::to_string(curve.r()));
    const Place place = Place::finite(index);
    for (const auto& seen : parsed.places)
      if (seen == place)
        throw Error(ErrorCode::kInvalidArgument, "places must be distinct");
    parsed.places.push_back(place);
    ++parsed.signature.finite_count;
  }
  return parsed;
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> parse_box(
    std::string_view text) {
  const auto pos = text.find("..");
  if (pos == std::string_view::npos) {
    auto point = parse_tuple(text);
    return {point, point};
  }
  return {parse_tuple(text.substr(0, pos)), parse_tuple(text.substr(pos + 2))};
}

std::string join(const std::vector<std::int64_t>& values,
                 std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += separator;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace kummer::cli
