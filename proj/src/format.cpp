#include "chronoscale/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

#include "chronoscale/error.hpp"

namespace chronoscale {

std::string shortest_real(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    return "nan";
  }
  return std::string(buf.data(), end);
}

std::string precise_real(double value) {
  std::array<char, 64> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.17g", value);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t last = text.find_last_not_of(" \t");
  if (begin == std::string::npos) {
    throw ConfigError(what + ": empty number");
  }
  const char* first = text.data() + begin;
  const char* stop = text.data() + last + 1;
  if (*first == '+') {
    ++first;
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, stop, value);
  if (ec != std::errc{} || ptr != stop || !std::isfinite(value)) {
    throw ConfigError(what + ": not a finite real number: '" + text + "'");
  }
  return value;
}

}  // namespace chronoscale
