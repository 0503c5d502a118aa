#include "mcs/table.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcs {

namespace {

void require_permutation(const std::vector<Element>& labels, int order,
                         const char* which) {
  if (static_cast<int>(labels.size()) != order)
    throw std::invalid_argument(std::string(which) + " must list every element once");
  std::vector<char> seen(order, 0);
  for (Element x : labels) {
    if (x < 0 || x >= order || seen[x])
      throw std::invalid_argument(std::string(which) + " is not a permutation of the group");
    seen[x] = 1;
  }
}

}  // namespace

SudokuTable make_table(FiniteGroup group, std::vector<Element> row_labels,
                       std::vector<Element> col_labels, int block_rows,
                       int block_cols) {
  const int n = group.order();
  require_permutation(row_labels, n, "row labels");
  require_permutation(col_labels, n, "column labels");
  if (block_rows < 1 || block_cols < 1 || n % block_rows != 0 || n % block_cols != 0)
    throw std::invalid_argument("block dimensions must divide the table size");
  SudokuTable t{std::move(group), std::move(row_labels), std::move(col_labels),
                block_rows,       block_cols,            {}};
  t.body.resize(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      t.at(r, c) = t.group.op(t.row_labels[r], t.col_labels[c]);
  return t;
}

bool cells_equal(const SudokuTable& a, const SudokuTable& b) {
  return a.block_rows == b.block_rows && a.block_cols == b.block_cols &&
         a.row_labels == b.row_labels && a.col_labels == b.col_labels &&
         a.body == b.body;
}

}  // namespace mcs
