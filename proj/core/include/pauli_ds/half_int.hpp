#ifndef PAULI_DS_HALF_INT_HPP
#define PAULI_DS_HALF_INT_HPP

#include <compare>
#include <string>
#include <string_view>

namespace pauli_ds {

/// Exact half-integer, stored as twice its value. Arithmetic stays in
/// integers; `value()` is the only conversion to floating point.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  /// Accepts "p/2", "-p/2" or a plain integer "k". Throws std::invalid_argument.
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "3/2", "-1/2", "2".
  std::string str() const;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

/// Mode labels (j, m, n, delta). nu = j + 1/2 is derived, never stored.
struct QuantumNumbers {
  HalfInt j = kHalf;
  HalfInt m = kHalf;
  int n = 0;
  int delta = +1;

  /// Positive integer coupling constant of the radial potentials.
  int nu() const { return (j.twice() + 1) / 2; }

  /// Throws DomainError unless j >= 1/2 is half-odd, |m| <= j with j - m
  /// integral, n >= 0 and delta = +-1.
  void validate() const;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

}  // namespace pauli_ds

#endif  // PAULI_DS_HALF_INT_HPP
