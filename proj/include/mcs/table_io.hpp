#pragma once

#include <string>
#include <vector>

#include "mcs/table.hpp"
#include "mcs/verify.hpp"

namespace mcs {

/**
 * Serialized form of a SudokuTable.  Cells are element names, not indices,
 * so files can be proofread directly.  The body is carried verbatim: parsing
 * does not recompute products, which lets the verifier flag a body cell that
 * disagrees with its border labels instead of silently repairing it.
 */
struct TableFile {
  std::string group_spec;
  std::vector<std::string> element_names;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  int block_rows = 1;
  int block_cols = 1;
  std::vector<std::vector<std::string>> body;
};

/// Serialized form of a raw symbol grid with no border labels.
struct GridFile {
  int block_rows = 1;
  int block_cols = 1;
  int symbols = 0;
  std::vector<std::vector<int>> body;
};

/// Requires a group with a textual definition (nonempty spec) and
/// whitespace-free element names; both hold for every built-in constructor.
TableFile serialize(const SudokuTable& t);

/// Rebuilds the group from the file's spec, resolves all names, and returns
/// the table with the body exactly as stored.  Throws std::invalid_argument
/// on unresolvable names or malformed shape.
SudokuTable parse_table(const TableFile& f);

std::string table_file_to_text(const TableFile& f);
TableFile table_file_from_text(const std::string& text);

std::string grid_file_to_text(const GridFile& f);
GridFile grid_file_from_text(const std::string& text);

RawGrid grid_from_file(const GridFile& f);

enum class FileKind { kTable, kGrid };

/// Dispatch on the first line of a serialized file.
FileKind sniff_file_kind(const std::string& text);

/**
 * Bordered plain-text rendering: row labels separated from the body by a
 * double bar, a double rule under the column labels, and single rules and
 * bars at block boundaries.
 */
std::string render_ascii(const SudokuTable& t);

}  // namespace mcs
