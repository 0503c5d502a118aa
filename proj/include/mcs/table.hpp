#pragma once

#include <vector>

#include "mcs/group.hpp"

namespace mcs {

/**
 * A bordered group table: body[r][c] together with the row and column labels
 * that generated it, carved into blocks of block_rows x block_cols cells.
 *
 * For a well-formed Cayley table, body[r][c] = row_labels[r] * col_labels[c]
 * (row label acting on the left).  The body is stored explicitly rather than
 * recomputed so that tables read from files can be audited: a body cell that
 * disagrees with the labels is a verification failure, not a parse error.
 */
struct SudokuTable {
  FiniteGroup group;
  std::vector<Element> row_labels;
  std::vector<Element> col_labels;
  int block_rows = 1;
  int block_cols = 1;
  std::vector<Element> body;  // row-major, order x order

  int size() const noexcept { return group.order(); }
  Element at(int r, int c) const {
    return body[static_cast<std::size_t>(r) * group.order() + c];
  }
  Element& at(int r, int c) {
    return body[static_cast<std::size_t>(r) * group.order() + c];
  }
};

/// Assemble the Cayley table for the given border labels.  Labels must each
/// be a permutation of the group's elements and the block dimensions must
/// tile the table; the body is filled with the products.
SudokuTable make_table(FiniteGroup group, std::vector<Element> row_labels,
                       std::vector<Element> col_labels, int block_rows,
                       int block_cols);

/// Same labels, same block shape, same body, cell for cell.
bool cells_equal(const SudokuTable& a, const SudokuTable& b);

}  // namespace mcs
