#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace symknot::khovanov {

enum class Field { Rational, F2 };

const char* to_string(Field f);

struct SparseEntry {
  std::uint32_t col;
  std::int64_t val;
};

/// Sorted by column, no zero entries.
using SparseRow = std::vector<SparseEntry>;

struct RankStats {
  std::size_t unit_pivots = 0;
  std::size_t residual_rows = 0;
  std::size_t residual_cols = 0;
};

/// Exact rank over Q or F2. Eliminates with +-1 pivots (sparsest column
/// first, 64-bit overflow-checked) and hands whatever is left to a
/// fraction-free dense elimination over big integers.
std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t ncols, Field field, RankStats* stats = nullptr);

}  // namespace symknot::khovanov
