#pragma once

#include <cstdint>
#include <functional>
#include <ostream>

namespace coxfaces {

/// Exact element a + b*phi of Z[phi], phi = (1 + sqrt 5) / 2.
///
/// Every root coordinate we need lives here: crystallographic Cartan
/// matrices are integral (b = 0) and the H-types only add -phi entries.
/// In the a' + b' sqrt 5 presentation this is the pair (a + b/2, b/2).
class Golden {
 public:
  constexpr Golden() = default;
  constexpr Golden(std::int64_t a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  constexpr Golden(std::int64_t a, std::int64_t b) : a_(a), b_(b) {}

  static constexpr Golden phi() { return {0, 1}; }

  constexpr std::int64_t rational_part() const { return a_; }
  constexpr std::int64_t phi_part() const { return b_; }
  constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// -1, 0 or +1.
  int sign() const;

  friend constexpr Golden operator+(Golden x, Golden y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend constexpr Golden operator-(Golden x, Golden y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend constexpr Golden operator-(Golden x) { return {-x.a_, -x.b_}; }
  // phi^2 = phi + 1
  friend constexpr Golden operator*(Golden x, Golden y) {
    return {x.a_ * y.a_ + x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_};
  }
  Golden& operator+=(Golden y) { return *this = *this + y; }
  Golden& operator-=(Golden y) { return *this = *this - y; }

  friend constexpr bool operator==(Golden x, Golden y) = default;
  friend bool operator<(Golden x, Golden y) { return (y - x).sign() > 0; }

  double to_double() const;

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

std::ostream& operator<<(std::ostream& os, Golden x);

}  // namespace coxfaces
