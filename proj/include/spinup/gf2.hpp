#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "spinup/errors.hpp"

namespace spinup {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return (data_[r * words_ + c / 64] >> (c % 64)) & 1U; }
  void set(std::size_t r, std::size_t c, bool v) {
    auto& w = data_[r * words_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  bool is_zero() const {
    for (auto w : data_) {
      if (w) return false;
    }
    return true;
  }

  BitMatrix operator*(const BitMatrix& o) const {
    if (cols_ != o.rows_) throw InvalidInput("GF(2) matrix product with mismatched shapes");
    BitMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols_; ++k) {
        if (!get(r, k)) continue;
        for (std::size_t w = 0; w < o.words_; ++w) out.data_[r * out.words_ + w] ^= o.data_[k * o.words_ + w];
      }
    }
    return out;
  }

  /// Rank by Gaussian elimination.
  std::size_t rank() const {
    std::vector<std::uint64_t> m = data_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      const std::size_t wi = c / 64;
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      std::size_t pivot = rank;
      while (pivot < rows_ && !(m[pivot * words_ + wi] & bit)) ++pivot;
      if (pivot == rows_) continue;
      if (pivot != rank) {
        for (std::size_t w = 0; w < words_; ++w) std::swap(m[pivot * words_ + w], m[rank * words_ + w]);
      }
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r != rank && (m[r * words_ + wi] & bit)) {
          for (std::size_t w = 0; w < words_; ++w) m[r * words_ + w] ^= m[rank * words_ + w];
        }
      }
      ++rank;
    }
    return rank;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace spinup
