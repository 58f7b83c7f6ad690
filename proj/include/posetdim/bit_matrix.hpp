#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace posetdim {

// Square boolean matrix, one packed row per element. Row x holds the set of
// columns y with m(x, y) set.
class BitMatrix {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * words_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c) noexcept {
    bits_[r * words_ + c / kWordBits] |= Word{1} << (c % kWordBits);
  }
  void reset(std::size_t r, std::size_t c) noexcept {
    bits_[r * words_ + c / kWordBits] &= ~(Word{1} << (c % kWordBits));
  }

  std::span<Word> row(std::size_t r) noexcept { return {bits_.data() + r * words_, words_}; }
  std::span<const Word> row(std::size_t r) const noexcept {
    return {bits_.data() + r * words_, words_};
  }

  // row(dst) |= row(src)
  void or_row(std::size_t dst, std::size_t src) noexcept {
    Word* d = bits_.data() + dst * words_;
    const Word* s = bits_.data() + src * words_;
    for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
  }

  std::size_t row_count(std::size_t r) const noexcept {
    std::size_t total = 0;
    for (Word w : row(r)) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  // Warshall closure in place.
  void close_transitively() noexcept {
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (test(i, k)) or_row(i, k);
  }

  BitMatrix transposed() const {
    BitMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (test(i, j)) t.set(j, i);
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

}  // namespace posetdim
