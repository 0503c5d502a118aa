#include "mcs/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcs {

namespace {

void require_layout(const SudokuTable& t, const BlockLayout& layout) {
  if (layout.table_rows != t.size() || layout.table_cols != t.size())
    throw std::invalid_argument("layout does not match the table dimensions");
  if (layout.block_rows < 1 || layout.block_cols < 1 ||
      layout.table_rows % layout.block_rows != 0 ||
      layout.table_cols % layout.block_cols != 0)
    throw std::invalid_argument("blocks do not tile the table");
}

void require_grid_layout(const RawGrid& grid, const BlockLayout& layout) {
  if (grid.rows < 1 || grid.cols < 1 ||
      grid.cells.size() != static_cast<std::size_t>(grid.rows) * grid.cols)
    throw std::invalid_argument("malformed grid");
  for (int v : grid.cells)
    if (v < 0 || v >= grid.symbols)
      throw std::invalid_argument("grid entry out of range");
  if (layout.table_rows != grid.rows || layout.table_cols != grid.cols)
    throw std::invalid_argument("layout does not match the grid dimensions");
  if (layout.block_rows < 1 || layout.block_cols < 1 ||
      layout.table_rows % layout.block_rows != 0 ||
      layout.table_cols % layout.block_cols != 0)
    throw std::invalid_argument("blocks do not tile the grid");
}

bool is_permutation(const std::vector<Element>& labels, int order) {
  if (static_cast<int>(labels.size()) != order) return false;
  std::vector<char> seen(order, 0);
  for (Element x : labels) {
    if (x < 0 || x >= order || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

class FailureCollector {
 public:
  explicit FailureCollector(VerificationReport& report) : report_(report) {}

  void add(TableProperty property, int block_row, int block_col, LineRef line,
           Element observed) {
    ++report_.failure_count;
    if (report_.failures.size() < VerificationReport::kMaxFailures)
      report_.failures.push_back({property, block_row, block_col, line, observed});
  }

 private:
  VerificationReport& report_;
};

}  // namespace

std::vector<std::pair<int, int>> line_cells(const LineRef& line, int block_rows,
                                            int block_cols) {
  std::vector<std::pair<int, int>> cells;
  switch (line.kind) {
    case LineKind::kRow:
      if (line.index < 0 || line.index >= block_rows)
        throw std::invalid_argument("row offset out of range");
      cells.reserve(block_cols);
      for (int c = 0; c < block_cols; ++c) cells.emplace_back(line.index, c);
      return cells;
    case LineKind::kColumn:
      if (line.index < 0 || line.index >= block_cols)
        throw std::invalid_argument("column offset out of range");
      cells.reserve(block_rows);
      for (int r = 0; r < block_rows; ++r) cells.emplace_back(r, line.index);
      return cells;
    case LineKind::kBrokenDiagonal:
    case LineKind::kBrokenAntidiagonal: {
      if (block_rows != block_cols)
        throw std::invalid_argument("diagonal lines need square blocks");
      const int k = block_rows;
      const int j = line.index;
      if (j < 1 || j > k) throw std::invalid_argument("diagonal shift out of range");
      cells.reserve(k);
      for (int r = 0; r < k; ++r) {
        int c = line.kind == LineKind::kBrokenDiagonal
                    ? (r + j) % k
                    : ((j - r - 2) % k + k) % k;
        cells.emplace_back(r, c);
      }
      return cells;
    }
  }
  throw std::logic_error("unhandled line kind");
}

namespace {

Element fold_line(const SudokuTable& t, int base_r, int base_c,
                  const std::vector<std::pair<int, int>>& cells) {
  Element acc = t.group.identity();
  for (auto [r, c] : cells) acc = t.group.op(acc, t.at(base_r + r, base_c + c));
  return acc;
}

void check_cayley(const SudokuTable& t, const BlockLayout& layout,
                  VerificationReport& report, FailureCollector& out) {
  const int n = t.size();
  if (t.body.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("body size does not match the group order");
  if (t.row_labels.size() != static_cast<std::size_t>(n) ||
      t.col_labels.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("label count does not match the group order");
  bool ok = is_permutation(t.row_labels, n) && is_permutation(t.col_labels, n);
  // scan block-major so the failure list groups by block
  for (int br = 0; br < layout.row_bands(); ++br) {
    for (int bc = 0; bc < layout.col_bands(); ++bc) {
      for (int i = 0; i < layout.block_rows; ++i) {
        for (int j = 0; j < layout.block_cols; ++j) {
          const int r = br * layout.block_rows + i;
          const int c = bc * layout.block_cols + j;
          Element got = t.at(r, c);
          if (got < 0 || got >= n ||
              got != t.group.op(t.row_labels[r], t.col_labels[c])) {
            ok = false;
            out.add(TableProperty::kCayley, br, bc, {LineKind::kRow, i}, got);
          }
        }
      }
    }
  }
  report.is_cayley = ok;
}

void check_sudoku(const SudokuTable& t, const BlockLayout& layout,
                  VerificationReport& report, FailureCollector& out) {
  const int n = t.size();
  bool ok = true;
  std::vector<int> count(n);
  for (int bi = 0; bi < layout.row_bands(); ++bi) {
    for (int bj = 0; bj < layout.col_bands(); ++bj) {
      std::fill(count.begin(), count.end(), 0);
      for (int r = 0; r < layout.block_rows; ++r)
        for (int c = 0; c < layout.block_cols; ++c) {
          Element v = t.at(bi * layout.block_rows + r, bj * layout.block_cols + c);
          if (v >= 0 && v < n) ++count[v];
        }
      for (Element v = 0; v < n; ++v) {
        if (count[v] != 1) {
          ok = false;
          out.add(TableProperty::kSudoku, bi, bj, {LineKind::kRow, 0}, v);
        }
      }
    }
  }
  report.is_sudoku = ok;
}

void check_lines(const SudokuTable& t, const BlockLayout& layout,
                 VerificationReport& report, FailureCollector& out) {
  if (!layout.square_blocks()) {
    report.magic_checked = false;
    return;
  }
  report.magic_checked = true;
  const int k = layout.block_rows;
  const Element e = t.group.identity();
  bool magic = true, pandiagonal = true;

  auto check = [&](int bi, int bj, LineRef line, bool main_family) {
    Element p = fold_line(t, bi * k, bj * k, line_cells(line, k, k));
    if (p == e) return;
    if (main_family) {
      magic = false;
      out.add(TableProperty::kMagic, bi, bj, line, p);
    } else {
      pandiagonal = false;
      out.add(TableProperty::kPandiagonalMagic, bi, bj, line, p);
    }
  };

  for (int bi = 0; bi < layout.row_bands(); ++bi) {
    for (int bj = 0; bj < layout.col_bands(); ++bj) {
      for (int r = 0; r < k; ++r) check(bi, bj, {LineKind::kRow, r}, true);
      for (int c = 0; c < k; ++c) check(bi, bj, {LineKind::kColumn, c}, true);
      // j = k is the main diagonal and j = 1 the main antidiagonal; every
      // other shift belongs to the pandiagonal family only.
      for (int j = 1; j <= k; ++j)
        check(bi, bj, {LineKind::kBrokenDiagonal, j}, j == k);
      for (int j = 1; j <= k; ++j)
        check(bi, bj, {LineKind::kBrokenAntidiagonal, j}, j == 1);
    }
  }
  report.is_magic = magic;
  report.is_pandiagonal_magic = magic && pandiagonal;
}

}  // namespace

VerificationReport verify_table(const SudokuTable& t, const BlockLayout& layout) {
  require_layout(t, layout);
  VerificationReport report;
  FailureCollector out(report);
  check_cayley(t, layout, report, out);
  check_sudoku(t, layout, report, out);
  check_lines(t, layout, report, out);
  return report;
}

bool verify_cayley(const SudokuTable& t) {
  VerificationReport report;
  FailureCollector out(report);
  check_cayley(t, BlockLayout::of(t), report, out);
  return report.is_cayley;
}

bool verify_sudoku(const SudokuTable& t, const BlockLayout& layout) {
  require_layout(t, layout);
  VerificationReport report;
  FailureCollector out(report);
  check_sudoku(t, layout, report, out);
  return report.is_sudoku;
}

bool verify_magic(const SudokuTable& t, const BlockLayout& layout) {
  require_layout(t, layout);
  if (!layout.square_blocks())
    throw std::invalid_argument("magic verification needs square blocks");
  VerificationReport report;
  FailureCollector out(report);
  check_lines(t, layout, report, out);
  return report.is_magic;
}

bool verify_pandiagonal_magic(const SudokuTable& t, const BlockLayout& layout) {
  require_layout(t, layout);
  if (!layout.square_blocks())
    throw std::invalid_argument("magic verification needs square blocks");
  VerificationReport report;
  FailureCollector out(report);
  check_lines(t, layout, report, out);
  return report.is_pandiagonal_magic;
}

std::map<LineRef, Element> block_line_products(const SudokuTable& t,
                                               const BlockLayout& layout,
                                               int block_row, int block_col) {
  require_layout(t, layout);
  if (block_row < 0 || block_row >= layout.row_bands() || block_col < 0 ||
      block_col >= layout.col_bands())
    throw std::invalid_argument("block coordinates out of range");
  std::map<LineRef, Element> products;
  const int base_r = block_row * layout.block_rows;
  const int base_c = block_col * layout.block_cols;
  auto put = [&](LineRef line) {
    products[line] =
        fold_line(t, base_r, base_c, line_cells(line, layout.block_rows, layout.block_cols));
  };
  for (int r = 0; r < layout.block_rows; ++r) put({LineKind::kRow, r});
  for (int c = 0; c < layout.block_cols; ++c) put({LineKind::kColumn, c});
  if (layout.square_blocks()) {
    for (int j = 1; j <= layout.block_rows; ++j) {
      put({LineKind::kBrokenDiagonal, j});
      put({LineKind::kBrokenAntidiagonal, j});
    }
  }
  return products;
}

bool left_to_right_diagonals_trivial(const SudokuTable& t, const BlockLayout& layout) {
  require_layout(t, layout);
  if (!layout.square_blocks())
    throw std::invalid_argument("diagonal lines need square blocks");
  const int k = layout.block_rows;
  const Element e = t.group.identity();
  for (int bi = 0; bi < layout.row_bands(); ++bi) {
    for (int bj = 0; bj < layout.col_bands(); ++bj) {
      for (int j = 1; j <= k; ++j) {
        Element diag = e, anti = e;
        for (int c = 0; c < k; ++c) {
          // Column-by-column traversal: invert the row<->column relation of
          // the top-to-bottom definition.
          int rd = ((c - j) % k + k) % k;
          int ra = ((j - c - 2) % k + k) % k;
          diag = t.group.op(diag, t.at(bi * k + rd, bj * k + c));
          anti = t.group.op(anti, t.at(bi * k + ra, bj * k + c));
        }
        if (diag != e || anti != e) return false;
      }
    }
  }
  return true;
}

std::map<LineRef, int> block_line_sums(const RawGrid& grid, const BlockLayout& layout,
                                       int block_row, int block_col) {
  require_grid_layout(grid, layout);
  if (block_row < 0 || block_row >= layout.row_bands() || block_col < 0 ||
      block_col >= layout.col_bands())
    throw std::invalid_argument("block coordinates out of range");
  std::map<LineRef, int> sums;
  const int base_r = block_row * layout.block_rows;
  const int base_c = block_col * layout.block_cols;
  auto put = [&](LineRef line) {
    int acc = 0;
    for (auto [r, c] : line_cells(line, layout.block_rows, layout.block_cols))
      acc = (acc + grid.at(base_r + r, base_c + c)) % grid.symbols;
    sums[line] = acc;
  };
  for (int r = 0; r < layout.block_rows; ++r) put({LineKind::kRow, r});
  for (int c = 0; c < layout.block_cols; ++c) put({LineKind::kColumn, c});
  if (layout.square_blocks()) {
    for (int j = 1; j <= layout.block_rows; ++j) {
      put({LineKind::kBrokenDiagonal, j});
      put({LineKind::kBrokenAntidiagonal, j});
    }
  }
  return sums;
}

bool verify_blocks_contain_all(const RawGrid& grid, const BlockLayout& layout) {
  require_grid_layout(grid, layout);
  std::vector<int> count(grid.symbols);
  for (int bi = 0; bi < layout.row_bands(); ++bi) {
    for (int bj = 0; bj < layout.col_bands(); ++bj) {
      std::fill(count.begin(), count.end(), 0);
      for (int r = 0; r < layout.block_rows; ++r)
        for (int c = 0; c < layout.block_cols; ++c)
          ++count[grid.at(bi * layout.block_rows + r, bj * layout.block_cols + c)];
      for (int v = 0; v < grid.symbols; ++v)
        if (count[v] != 1) return false;
    }
  }
  return true;
}

bool verify_modular_magic_grid(const RawGrid& grid, const BlockLayout& layout,
                               VerificationReport* report) {
  require_grid_layout(grid, layout);
  if (!layout.square_blocks() || grid.rows != grid.cols ||
      grid.rows != layout.block_rows * layout.block_rows ||
      grid.symbols != grid.rows)
    throw std::invalid_argument(
        "modular magic check needs a k^2 x k^2 grid over k^2 symbols in k x k blocks");
  const int k = layout.block_rows;
  const int n = grid.rows;
  VerificationReport local;
  VerificationReport& rep = report ? *report : local;
  rep = VerificationReport{};
  FailureCollector out(rep);
  bool sudoku = true, magic = true;

  std::vector<int> count(n);
  auto scan_line = [&](bool by_row, int fixed) {
    std::fill(count.begin(), count.end(), 0);
    for (int i = 0; i < n; ++i) ++count[by_row ? grid.at(fixed, i) : grid.at(i, fixed)];
    for (int v = 0; v < n; ++v) {
      if (count[v] != 1) {
        sudoku = false;
        out.add(TableProperty::kSudoku, by_row ? fixed / k : -1,
                by_row ? -1 : fixed / k,
                {by_row ? LineKind::kRow : LineKind::kColumn, fixed % k}, v);
      }
    }
  };
  for (int r = 0; r < n; ++r) scan_line(true, r);
  for (int c = 0; c < n; ++c) scan_line(false, c);

  for (int bi = 0; bi < k; ++bi) {
    for (int bj = 0; bj < k; ++bj) {
      std::fill(count.begin(), count.end(), 0);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) ++count[grid.at(bi * k + r, bj * k + c)];
      for (int v = 0; v < n; ++v) {
        if (count[v] != 1) {
          sudoku = false;
          out.add(TableProperty::kSudoku, bi, bj, {LineKind::kRow, 0}, v);
        }
      }
    }
  }

  for (int bi = 0; bi < k; ++bi) {
    for (int bj = 0; bj < k; ++bj) {
      auto sums = block_line_sums(grid, layout, bi, bj);
      auto check = [&](LineRef line) {
        int s = sums.at(line);
        if (s != 0) {
          magic = false;
          out.add(TableProperty::kMagic, bi, bj, line, s);
        }
      };
      for (int r = 0; r < k; ++r) check({LineKind::kRow, r});
      for (int c = 0; c < k; ++c) check({LineKind::kColumn, c});
      check({LineKind::kBrokenDiagonal, k});
      check({LineKind::kBrokenAntidiagonal, 1});
    }
  }

  rep.is_sudoku = sudoku;
  rep.is_magic = sudoku && magic;
  rep.magic_checked = true;
  return rep.is_magic;
}

}  // namespace mcs
