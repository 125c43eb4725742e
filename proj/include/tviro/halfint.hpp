#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace tviro {

/// Non-negative half-integer color, stored as its doubled integer value.
/// All arithmetic and the admissibility predicates below are exact.
class HalfInt {
 public:
  constexpr HalfInt() : doubled_(0) {}

  static constexpr HalfInt from_doubled(int d) {
    return d < 0 ? throw std::invalid_argument("HalfInt: negative value") : HalfInt(d);
  }
  static constexpr HalfInt integer(int n) { return from_doubled(2 * n); }

  constexpr int doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(doubled_ + o.doubled_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "n" for integers, "d/2" for half-odd values.
  std::string str() const {
    if (is_integer()) return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
  }

 private:
  explicit constexpr HalfInt(int d) : doubled_(d) {}
  int doubled_;
};

/// The color set I_r = {0, 1/2, 1, ..., (r-2)/2}.
class ColorRange {
 public:
  explicit ColorRange(int r) : r_(r) {
    if (r < 3) throw std::invalid_argument("ColorRange: r must be >= 3");
  }

  int r() const { return r_; }
  int size() const { return r_ - 1; }
  HalfInt max() const { return HalfInt::from_doubled(r_ - 2); }
  bool contains(HalfInt x) const { return x.doubled() <= r_ - 2; }

  std::vector<HalfInt> elements() const {
    std::vector<HalfInt> out;
    out.reserve(static_cast<size_t>(size()));
    for (int d = 0; d <= r_ - 2; ++d) out.push_back(HalfInt::from_doubled(d));
    return out;
  }

 private:
  int r_;
};

/// Admissibility of a triple per the three triangle inequalities,
/// integrality of the sum, and the level bound i+j+k <= r-2.
inline bool is_admissible_triple(HalfInt i, HalfInt j, HalfInt k, int r) {
  const int a = i.doubled(), b = j.doubled(), c = k.doubled();
  if (a > r - 2 || b > r - 2 || c > r - 2)
    throw std::invalid_argument("is_admissible_triple: color outside I_r");
  if (a + b < c || b + c < a || c + a < b) return false;
  const int sum = a + b + c;
  if (sum % 2 != 0) return false;
  return sum <= 2 * (r - 2);
}

/// Closed form for triples of the shape (i, i, k): admissible iff
/// k is an integer and k/2 <= i <= (r-2-k)/2.
inline bool is_admissible_iik(HalfInt i, HalfInt k, int r) {
  const int di = i.doubled(), dk = k.doubled();
  if (dk % 2 != 0) return false;
  return dk <= 2 * di && 2 * di <= 2 * (r - 2) - dk;
}

}  // namespace tviro
