#pragma once

#include <string>

#include "mcs/table.hpp"
#include "mcs/verify.hpp"

namespace mcs::fixtures {

/// Bundled 9x9 Cayley-sudoku table of C9 (subgroup {0,3,6}, canonical
/// orderings), as canonical table-file text.
const std::string& table1_text();

/// Bundled 9x9 modular magic sudoku grid over symbols 0..8, as canonical
/// grid-file text.
const std::string& table2_text();

/// Bundled pandiagonal magic table of C3 x C3, as canonical table-file text.
const std::string& table3_text();

SudokuTable table1();
RawGrid table2();
SudokuTable table3();

}  // namespace mcs::fixtures
