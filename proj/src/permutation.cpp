#include "ordseq/permutation.hpp"

#include <numeric>

#include "ordseq/errors.hpp"

namespace ordseq {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (std::uint32_t x : image_) {
    if (x >= image_.size() || seen[x])
      throw PreconditionError("NotBijection", "image array is not a permutation");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(
    std::uint32_t degree, std::initializer_list<std::initializer_list<std::uint32_t>> cycles) {
  std::vector<std::vector<std::uint32_t>> cs;
  for (auto c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Permutation Permutation::from_cycles(std::uint32_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  // Cycles are composed right to left, matching operator*.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    if (c.empty()) continue;
    std::vector<std::uint32_t> step(degree);
    std::iota(step.begin(), step.end(), 0u);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw PreconditionError("NotBijection", "cycle point out of range");
      step[c[i]] = c[(i + 1) % c.size()];
    }
    std::vector<std::uint32_t> next(degree);
    for (std::uint32_t x = 0; x < degree; ++x) next[x] = step[img[x]];
    img = std::move(next);
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree())
    throw PreconditionError("DegreeMismatch", "composing permutations of different degree");
  std::vector<std::uint32_t> img(image_.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = image_[rhs.image_[x]];
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(image_.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[image_[x]] = static_cast<std::uint32_t>(x);
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

std::uint64_t Permutation::order() const {
  std::vector<char> seen(image_.size(), 0);
  std::uint64_t result = 1;
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = start; !seen[x]; x = image_[x]) {
      seen[x] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool Permutation::is_even() const {
  std::vector<char> seen(image_.size(), 0);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = image_[x]) {
      seen[x] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    out += "(";
    bool first = true;
    for (std::size_t x = start; !seen[x]; x = image_[x]) {
      seen[x] = 1;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace ordseq
