#include "pauli_ds/half_int.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "pauli_ds/errors.hpp"

namespace pauli_ds {
namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(parse_int(text, text));
  if (text.substr(slash + 1) != "2") {
    throw std::invalid_argument("half-integer denominator must be 2: '" + std::string(text) + "'");
  }
  return from_twice(parse_int(text.substr(0, slash), text));
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

void QuantumNumbers::validate() const {
  if (j.twice() < 1 || j.is_integer()) {
    throw DomainError("j must be a positive half-odd integer (1/2, 3/2, ...), got " + j.str());
  }
  if (std::abs(m.twice()) > j.twice() || !(j - m).is_integer()) {
    throw DomainError("m must lie in {-j, ..., j}, got m = " + m.str() + " for j = " + j.str());
  }
  if (n < 0) throw DomainError("radial quantum number n must be non-negative");
  if (delta != 1 && delta != -1) throw DomainError("parity label delta must be +1 or -1");
}

}  // namespace pauli_ds
