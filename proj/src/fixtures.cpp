#include "mcs/fixtures.hpp"

#include "mcs/table_io.hpp"

namespace mcs::fixtures {

// The reference tables are embedded as file text rather than rebuilt from
// the constructions, so tests can compare construction output against an
// independently transcribed source.

const std::string& table1_text() {
  static const std::string text = R"(cayley-table v1
group: C9
block-rows: 3
block-cols: 3
elements: 0 1 2 3 4 5 6 7 8
rows: 0 1 2 3 4 5 6 7 8
cols: 0 3 6 1 4 7 2 5 8
body:
0 3 6 1 4 7 2 5 8
1 4 7 2 5 8 3 6 0
2 5 8 3 6 0 4 7 1
3 6 0 4 7 1 5 8 2
4 7 1 5 8 2 6 0 3
5 8 2 6 0 3 7 1 4
6 0 3 7 1 4 8 2 5
7 1 4 8 2 5 0 3 6
8 2 5 0 3 6 1 4 7
)";
  return text;
}

const std::string& table2_text() {
  static const std::string text = R"(magic-grid v1
block-rows: 3
block-cols: 3
symbols: 9
body:
1 8 0 7 5 6 4 2 3
2 3 4 8 0 1 5 6 7
6 7 5 3 4 2 0 1 8
8 4 6 5 1 3 2 7 0
7 0 2 4 6 8 1 3 5
3 5 1 0 2 7 6 8 4
5 1 3 2 7 0 8 4 6
4 6 8 1 3 5 7 0 2
0 2 7 6 8 4 3 5 1
)";
  return text;
}

const std::string& table3_text() {
  static const std::string text = R"(cayley-table v1
group: C3 x C3
block-rows: 3
block-cols: 3
elements: 00 01 02 10 11 12 20 21 22
rows: 00 01 02 10 11 12 20 21 22
cols: 00 10 20 01 11 21 02 12 22
body:
00 10 20 01 11 21 02 12 22
01 11 21 02 12 22 00 10 20
02 12 22 00 10 20 01 11 21
10 20 00 11 21 01 12 22 02
11 21 01 12 22 02 10 20 00
12 22 02 10 20 00 11 21 01
20 00 10 21 01 11 22 02 12
21 01 11 22 02 12 20 00 10
22 02 12 20 00 10 21 01 11
)";
  return text;
}

SudokuTable table1() { return parse_table(table_file_from_text(table1_text())); }

RawGrid table2() { return grid_from_file(grid_file_from_text(table2_text())); }

SudokuTable table3() { return parse_table(table_file_from_text(table3_text())); }

}  // namespace mcs::fixtures
