#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ordseq {

// A bijection on the points [0, degree).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> image);

  static Permutation identity(std::uint32_t degree);
  // Product of the given cycles acting on [0, degree).
  static Permutation from_cycles(std::uint32_t degree,
                                 std::initializer_list<std::initializer_list<std::uint32_t>> cycles);
  static Permutation from_cycles(std::uint32_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(image_.size()); }
  std::uint32_t operator()(std::uint32_t point) const { return image_[point]; }
  const std::vector<std::uint32_t>& image() const { return image_; }

  // (a * b)(x) = a(b(x)): b is applied first.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  // lcm of the cycle lengths.
  std::uint64_t order() const;
  bool is_even() const;
  std::string cycle_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> image_;
};

}  // namespace ordseq
