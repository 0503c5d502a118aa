#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "mcs/table.hpp"

namespace mcs {

/// Block shape imposed on a table; blocks must tile it exactly.
struct BlockLayout {
  int block_rows = 1;
  int block_cols = 1;
  int table_rows = 1;
  int table_cols = 1;

  static BlockLayout of(const SudokuTable& t) {
    return {t.block_rows, t.block_cols, t.size(), t.size()};
  }
  int row_bands() const noexcept { return table_rows / block_rows; }
  int col_bands() const noexcept { return table_cols / block_cols; }
  bool square_blocks() const noexcept { return block_rows == block_cols; }
};

enum class LineKind { kRow, kColumn, kBrokenDiagonal, kBrokenAntidiagonal };

/**
 * One line of a block.  For rows and columns `index` is the 0-based offset
 * within the block.  For diagonals `index` is the shift j in 1..k: the
 * broken diagonal passes through cells (r, r+j mod k) and the broken
 * antidiagonal through (r, j-r-2 mod k), rows taken top to bottom.  j = k is
 * the main diagonal and j = 1 the main antidiagonal.
 */
struct LineRef {
  LineKind kind = LineKind::kRow;
  int index = 0;
  auto operator<=>(const LineRef&) const = default;
};

enum class TableProperty { kCayley, kSudoku, kMagic, kPandiagonalMagic };

/// A single verification failure.  For line-product failures `observed` is
/// the offending product; for containment failures it is the duplicated or
/// missing element.  Whole-row/column failures of raw grids use -1 for the
/// block coordinate that does not apply.
struct Failure {
  TableProperty property = TableProperty::kCayley;
  int block_row = 0;
  int block_col = 0;
  LineRef line;
  Element observed = 0;
};

struct VerificationReport {
  static constexpr int kMaxFailures = 100;

  bool is_cayley = false;
  bool is_sudoku = false;
  bool is_magic = false;
  bool is_pandiagonal_magic = false;
  bool magic_checked = false;  // false when the blocks are not square

  /// First kMaxFailures failures in deterministic order: by property
  /// (cayley, sudoku, then line products block-major), then by block, then
  /// row/column/diagonal/antidiagonal, then offset.
  std::vector<Failure> failures;
  long long failure_count = 0;  // total, including any beyond the cap
};

/// Cells of one block line relative to the block's corner, in multiplication
/// order: rows left to right, columns and diagonals top to bottom.
std::vector<std::pair<int, int>> line_cells(const LineRef& line, int block_rows,
                                            int block_cols);

/// Full report: Cayley and sudoku checks always, line products when the
/// blocks are square.
VerificationReport verify_table(const SudokuTable& t, const BlockLayout& layout);

/// True iff both borders are permutations of the group and every body cell
/// equals row_label * col_label.
bool verify_cayley(const SudokuTable& t);

/// True iff every block contains every group element exactly once.
bool verify_sudoku(const SudokuTable& t, const BlockLayout& layout);

/// True iff every block's rows, columns, main diagonal, and main
/// antidiagonal multiply to the identity.  Requires square blocks.
bool verify_magic(const SudokuTable& t, const BlockLayout& layout);

/// verify_magic strengthened to all broken diagonals and antidiagonals.
bool verify_pandiagonal_magic(const SudokuTable& t, const BlockLayout& layout);

/// Products of every line of one block: all rows and columns, plus both
/// diagonal families when the block is square.
std::map<LineRef, Element> block_line_products(const SudokuTable& t,
                                               const BlockLayout& layout,
                                               int block_row, int block_col);

/// Diagonal and antidiagonal products taken column by column instead of top
/// to bottom; true when all of them are trivial too.
bool left_to_right_diagonals_trivial(const SudokuTable& t, const BlockLayout& layout);

/// A plain grid of symbols with no border labels attached.
struct RawGrid {
  int rows = 0;
  int cols = 0;
  int symbols = 0;  // entries lie in [0, symbols)
  std::vector<int> cells;

  int at(int r, int c) const {
    return cells[static_cast<std::size_t>(r) * cols + c];
  }
};

/// Sums (mod grid.symbols) of every line of one block of a raw grid.
std::map<LineRef, int> block_line_sums(const RawGrid& grid, const BlockLayout& layout,
                                       int block_row, int block_col);

/// True iff every block contains every symbol exactly once.
bool verify_blocks_contain_all(const RawGrid& grid, const BlockLayout& layout);

/// For a k^2 x k^2 grid over Z_{k^2} in k x k blocks: true iff the grid is an
/// ordinary sudoku grid (each symbol once per row, column, and block) and
/// every block's row, column, main-diagonal, and main-antidiagonal sums are
/// 0 mod k^2.
bool verify_modular_magic_grid(const RawGrid& grid, const BlockLayout& layout,
                               VerificationReport* report = nullptr);

}  // namespace mcs
