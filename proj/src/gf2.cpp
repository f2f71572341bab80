#include "linkless/gf2.hpp"

#include <algorithm>
#include <bit>

#include "linkless/errors.hpp"

namespace linkless {

Gf2System::Gf2System(std::size_t columns)
    : columns_(columns), words_((columns + 63) / 64), pivot_row_(columns, -1), scratch_(words_) {}

Gf2System::Outcome Gf2System::insert(std::span<const std::uint64_t> row, bool rhs) {
  if (row.size() != words_) throw InvalidArgument("row width does not match the system");
  std::copy(row.begin(), row.end(), scratch_.begin());
  bool b = rhs;
  for (std::size_t w = 0; w < words_; ++w) {
    while (scratch_[w] != 0) {
      const std::size_t col = w * 64 + static_cast<std::size_t>(std::countr_zero(scratch_[w]));
      const std::int32_t r = pivot_row_[col];
      if (r < 0) {
        pivot_row_[col] = static_cast<std::int32_t>(rhs_.size());
        rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
        rhs_.push_back(b ? 1 : 0);
        return Outcome::Independent;
      }
      // Stored rows have no bits below their pivot, so earlier words stay zero.
      const std::uint64_t* src = rows_.data() + static_cast<std::size_t>(r) * words_;
      for (std::size_t k = w; k < words_; ++k) scratch_[k] ^= src[k];
      b ^= rhs_[static_cast<std::size_t>(r)] != 0;
    }
  }
  if (b) {
    consistent_ = false;
    return Outcome::Inconsistent;
  }
  return Outcome::Dependent;
}

}  // namespace linkless
