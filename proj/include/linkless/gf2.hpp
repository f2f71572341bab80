#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace linkless {

/// Incremental row-echelon basis over GF(2) with an augmented right-hand side.
/// Each stored row's pivot is its lowest set column, and pivots are distinct.
/// Once a row reduces to (0 | 1) the system is inconsistent for good.
class Gf2System {
 public:
  enum class Outcome { Independent, Dependent, Inconsistent };

  explicit Gf2System(std::size_t columns);

  /// `row` must hold words() words; bits at or beyond columns() must be 0.
  Outcome insert(std::span<const std::uint64_t> row, bool rhs);

  bool consistent() const { return consistent_; }
  std::size_t rank() const { return rhs_.size(); }
  std::size_t columns() const { return columns_; }
  std::size_t words() const { return words_; }

 private:
  std::size_t columns_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint8_t> rhs_;
  std::vector<std::int32_t> pivot_row_;
  std::vector<std::uint64_t> scratch_;
  bool consistent_ = true;
};

}  // namespace linkless
