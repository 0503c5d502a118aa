#include "mcs/table_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "mcs/group_spec.hpp"

namespace mcs {

namespace {

constexpr const char* kTableHeader = "cayley-table v1";
constexpr const char* kGridHeader = "magic-grid v1";

bool has_whitespace(const std::string& s) {
  return s.empty() ||
         std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

void append_tokens(std::ostringstream& out, const std::vector<std::string>& tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out << ' ';
    out << tokens[i];
  }
  out << '\n';
}

// Reads one "key: value" line; the value may contain spaces.
std::string read_field(std::istream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("missing field: " + key);
  const std::string prefix = key + ": ";
  if (line.rfind(prefix, 0) != 0) throw std::invalid_argument("expected field: " + key);
  return line.substr(prefix.size());
}

int read_int_field(std::istream& in, const std::string& key) {
  const std::string value = read_field(in, key);
  try {
    std::size_t pos = 0;
    const int parsed = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw std::invalid_argument("field is not a number: " + key);
  }
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

void expect_body_marker(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "body:")
    throw std::invalid_argument("expected body section");
}

void expect_end(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!split_tokens(line).empty())
      throw std::invalid_argument("unexpected trailing content");
  }
}

}  // namespace

TableFile serialize(const SudokuTable& t) {
  const FiniteGroup& g = t.group;
  if (g.spec().empty())
    throw std::invalid_argument("group has no textual definition to serialize");
  for (const std::string& name : g.names())
    if (has_whitespace(name))
      throw std::invalid_argument("element names must be single tokens");

  TableFile f;
  f.group_spec = g.spec();
  f.element_names = g.names();
  f.block_rows = t.block_rows;
  f.block_cols = t.block_cols;
  f.row_labels.reserve(t.row_labels.size());
  for (Element x : t.row_labels) f.row_labels.push_back(g.name(x));
  f.col_labels.reserve(t.col_labels.size());
  for (Element x : t.col_labels) f.col_labels.push_back(g.name(x));
  f.body.resize(static_cast<std::size_t>(g.order()));
  for (int r = 0; r < g.order(); ++r) {
    auto& row = f.body[static_cast<std::size_t>(r)];
    row.reserve(static_cast<std::size_t>(g.order()));
    for (int c = 0; c < g.order(); ++c) row.push_back(g.name(t.at(r, c)));
  }
  return f;
}

SudokuTable parse_table(const TableFile& f) {
  FiniteGroup g = group_from_spec(f.group_spec);
  const int order = g.order();
  if (f.element_names != g.names())
    throw std::invalid_argument("element names do not match the group");
  if (f.block_rows < 1 || f.block_cols < 1 || order % f.block_rows != 0 ||
      order % f.block_cols != 0)
    throw std::invalid_argument("block shape does not tile the table");
  if (static_cast<int>(f.row_labels.size()) != order ||
      static_cast<int>(f.col_labels.size()) != order)
    throw std::invalid_argument("label count does not match the group order");
  if (static_cast<int>(f.body.size()) != order)
    throw std::invalid_argument("body row count does not match the group order");

  auto resolve = [&g](const std::string& name) { return g.element(name); };
  SudokuTable t{g, {}, {}, f.block_rows, f.block_cols, {}};
  t.row_labels.reserve(static_cast<std::size_t>(order));
  t.col_labels.reserve(static_cast<std::size_t>(order));
  for (const std::string& name : f.row_labels) t.row_labels.push_back(resolve(name));
  for (const std::string& name : f.col_labels) t.col_labels.push_back(resolve(name));
  t.body.reserve(static_cast<std::size_t>(order) * order);
  for (const auto& row : f.body) {
    if (static_cast<int>(row.size()) != order)
      throw std::invalid_argument("body row length does not match the group order");
    for (const std::string& name : row) t.body.push_back(resolve(name));
  }
  return t;
}

std::string table_file_to_text(const TableFile& f) {
  std::ostringstream out;
  out << kTableHeader << '\n';
  out << "group: " << f.group_spec << '\n';
  out << "block-rows: " << f.block_rows << '\n';
  out << "block-cols: " << f.block_cols << '\n';
  out << "elements: ";
  append_tokens(out, f.element_names);
  out << "rows: ";
  append_tokens(out, f.row_labels);
  out << "cols: ";
  append_tokens(out, f.col_labels);
  out << "body:\n";
  for (const auto& row : f.body) append_tokens(out, row);
  return out.str();
}

TableFile table_file_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kTableHeader)
    throw std::invalid_argument("not a table file");

  TableFile f;
  f.group_spec = read_field(in, "group");
  f.block_rows = read_int_field(in, "block-rows");
  f.block_cols = read_int_field(in, "block-cols");
  f.element_names = split_tokens(read_field(in, "elements"));
  f.row_labels = split_tokens(read_field(in, "rows"));
  f.col_labels = split_tokens(read_field(in, "cols"));
  expect_body_marker(in);
  const std::size_t order = f.element_names.size();
  f.body.reserve(order);
  for (std::size_t r = 0; r < order; ++r) {
    if (!std::getline(in, line)) throw std::invalid_argument("body ends early");
    std::vector<std::string> row = split_tokens(line);
    if (row.size() != order)
      throw std::invalid_argument("body row has the wrong number of cells");
    f.body.push_back(std::move(row));
  }
  expect_end(in);
  return f;
}

std::string grid_file_to_text(const GridFile& f) {
  std::ostringstream out;
  out << kGridHeader << '\n';
  out << "block-rows: " << f.block_rows << '\n';
  out << "block-cols: " << f.block_cols << '\n';
  out << "symbols: " << f.symbols << '\n';
  out << "body:\n";
  for (const auto& row : f.body) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ' ';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

GridFile grid_file_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kGridHeader)
    throw std::invalid_argument("not a grid file");

  GridFile f;
  f.block_rows = read_int_field(in, "block-rows");
  f.block_cols = read_int_field(in, "block-cols");
  f.symbols = read_int_field(in, "symbols");
  if (f.symbols < 1) throw std::invalid_argument("symbol count must be positive");
  expect_body_marker(in);
  while (std::getline(in, line)) {
    const std::vector<std::string> tokens = split_tokens(line);
    if (tokens.empty()) continue;
    std::vector<int> row;
    row.reserve(tokens.size());
    for (const std::string& token : tokens) {
      try {
        std::size_t pos = 0;
        const int v = std::stoi(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        row.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("grid cell is not a number: " + token);
      }
    }
    f.body.push_back(std::move(row));
  }
  if (f.body.empty()) throw std::invalid_argument("grid body is empty");
  return f;
}

RawGrid grid_from_file(const GridFile& f) {
  RawGrid grid;
  grid.rows = static_cast<int>(f.body.size());
  grid.cols = static_cast<int>(f.body.front().size());
  grid.symbols = f.symbols;
  grid.cells.reserve(static_cast<std::size_t>(grid.rows) * grid.cols);
  for (const auto& row : f.body) {
    if (static_cast<int>(row.size()) != grid.cols)
      throw std::invalid_argument("grid rows have uneven lengths");
    for (int v : row) {
      if (v < 0 || v >= f.symbols)
        throw std::invalid_argument("grid cell out of symbol range");
      grid.cells.push_back(v);
    }
  }
  return grid;
}

FileKind sniff_file_kind(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (line == kTableHeader) return FileKind::kTable;
  if (line == kGridHeader) return FileKind::kGrid;
  throw std::invalid_argument("unrecognized file header");
}

std::string render_ascii(const SudokuTable& t) {
  const FiniteGroup& g = t.group;
  const int order = g.order();
  std::size_t width = 1;
  for (const std::string& name : g.names()) width = std::max(width, name.size());

  auto pad = [width](const std::string& s) {
    return std::string(width - s.size(), ' ') + s;
  };
  auto cell_line = [&](const std::string& label, const std::vector<Element>& cells) {
    std::string line = pad(label) + " || ";
    for (int c = 0; c < order; ++c) {
      if (c > 0) line += (c % t.block_cols == 0) ? " | " : " ";
      line += pad(g.name(cells[static_cast<std::size_t>(c)]));
    }
    return line;
  };
  auto rule_line = [&](char fill, char cross) {
    std::string line(width, fill);
    line += fill;
    line += cross;
    line += cross;
    line += fill;
    for (int c = 0; c < order; ++c) {
      if (c > 0) {
        if (c % t.block_cols == 0) {
          line += fill;
          line += cross;
          line += fill;
        } else {
          line += fill;
        }
      }
      line.append(width, fill);
    }
    return line;
  };

  std::ostringstream out;
  out << cell_line("", t.col_labels) << '\n';
  out << rule_line('=', '+') << '\n';
  for (int r = 0; r < order; ++r) {
    if (r > 0 && r % t.block_rows == 0) out << rule_line('-', '+') << '\n';
    std::vector<Element> row(t.body.begin() + static_cast<std::ptrdiff_t>(r) * order,
                             t.body.begin() + static_cast<std::ptrdiff_t>(r + 1) * order);
    out << cell_line(g.name(t.row_labels[static_cast<std::size_t>(r)]), row) << '\n';
  }
  return out.str();
}

}  // namespace mcs
