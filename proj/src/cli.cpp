#include "mcs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mcs/construct.hpp"
#include "mcs/group.hpp"
#include "mcs/group_spec.hpp"
#include "mcs/search.hpp"
#include "mcs/table_io.hpp"
#include "mcs/verify.hpp"

namespace mcs {

namespace {

constexpr int kMaxPrintedFailures = 10;

std::vector<Element> resolve_elements(const FiniteGroup& g,
                                      const std::vector<std::string>& names) {
  std::vector<Element> elements;
  elements.reserve(names.size());
  for (const std::string& name : names) elements.push_back(g.element(name));
  return elements;
}

const char* property_name(TableProperty p) {
  switch (p) {
    case TableProperty::kCayley: return "cayley";
    case TableProperty::kSudoku: return "sudoku";
    case TableProperty::kMagic: return "magic";
    case TableProperty::kPandiagonalMagic: break;
  }
  return "pandiagonal-magic";
}

std::string line_name(const LineRef& line) {
  std::ostringstream out;
  switch (line.kind) {
    case LineKind::kRow: out << "row " << line.index; break;
    case LineKind::kColumn: out << "column " << line.index; break;
    case LineKind::kBrokenDiagonal: out << "broken diagonal j=" << line.index; break;
    case LineKind::kBrokenAntidiagonal:
      out << "broken antidiagonal j=" << line.index;
      break;
  }
  return out.str();
}

void print_failures(std::ostream& out, const VerificationReport& report,
                    const std::function<std::string(Element)>& show) {
  out << "failures: " << report.failure_count << '\n';
  const int printed =
      std::min<long long>(report.failures.size(), kMaxPrintedFailures);
  for (int i = 0; i < printed; ++i) {
    const Failure& f = report.failures[static_cast<std::size_t>(i)];
    out << "  [" << property_name(f.property) << "] block (" << f.block_row << ","
        << f.block_col << ") " << line_name(f.line) << ": observed " << show(f.observed)
        << '\n';
  }
  if (report.failure_count > printed)
    out << "  (" << (report.failure_count - printed) << " more)\n";
}

void emit_table(const SudokuTable& table, bool ascii, const std::string& out_path,
                std::ostream& out) {
  const std::string text = ascii ? render_ascii(table) : table_file_to_text(serialize(table));
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write file: " + out_path);
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream content;
  content << file.rdbuf();
  return content.str();
}

int cmd_group(const std::string& spec, std::ostream& out) {
  const FiniteGroup g = group_from_spec(spec);
  out << "spec: " << g.spec() << '\n';
  out << "order: " << g.order() << '\n';
  out << "exponent: " << exponent(g) << '\n';
  out << "center-size: " << center(g).size() << '\n';
  const bool abelian = is_abelian(g);
  out << "abelian: " << (abelian ? "yes" : "no") << '\n';
  if (abelian) {
    out << "involutions: " << involution_count(g) << '\n';
    std::vector<Element> all(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) all[static_cast<std::size_t>(i)] = i;
    out << "product-of-all: " << g.name(product_of(g, all)) << '\n';
  }
  return kExitOk;
}

int cmd_construct_sudoku(const std::string& spec, const std::vector<std::string>& gens,
                         bool ascii, const std::string& out_path, std::ostream& out) {
  const FiniteGroup g = group_from_spec(spec);
  const SubgroupHandle h = subgroup_generated(g, resolve_elements(g, gens));
  const SudokuTable table = canonical_construction1(g, h);
  emit_table(table, ascii, out_path, out);
  return kExitOk;
}

int cmd_construct_magic(const std::string& spec, const std::vector<std::string>& gens,
                        const std::vector<std::string>& rep_names, bool ascii,
                        const std::string& out_path, std::ostream& out, std::ostream& err) {
  const FiniteGroup g = group_from_spec(spec);
  const SubgroupHandle n = subgroup_generated(g, resolve_elements(g, gens));
  std::optional<RepList> reps;
  if (!rep_names.empty()) {
    reps = RepList::create(g, n, resolve_elements(g, rep_names), CosetSide::kLeft);
  } else if (is_abelian(g)) {
    try {
      reps = abelian_reps(g, n);
    } catch (const std::invalid_argument&) {
      // No corrected representative list exists; fall through with the
      // canonical one so the hypothesis report pinpoints the obstruction.
      reps = coset_reps(g, n, CosetSide::kLeft);
    }
  } else {
    err << "error: --reps is required for a non-abelian group\n";
    return kExitUsage;
  }
  const MagicInstance inst = MagicInstance::create(g, n, *reps);
  try {
    const SudokuTable table = magic_table(inst);
    emit_table(table, ascii, out_path, out);
  } catch (const HypothesisRejected& rejected) {
    out << rejected.report.describe();
    return kExitPropertyFailure;
  }
  return kExitOk;
}

int finish_instance(const MagicInstance& inst, bool ascii, const std::string& out_path,
                    std::ostream& out) {
  const HypothesisReport report = check_mcs_hypotheses(inst);
  out << "group: " << inst.group.spec() << '\n';
  out << "order: " << inst.group.order() << '\n';
  out << "k: " << inst.k << '\n';
  if (!report.overall) {
    out << report.describe();
    return kExitPropertyFailure;
  }
  out << "hypotheses: pass\n";
  const SudokuTable table = magic_table(inst);
  const bool ok = verify_pandiagonal_magic(table, BlockLayout::of(table));
  out << "pandiagonal-magic: " << (ok ? "pass" : "FAIL") << '\n';
  if (!out_path.empty() || ascii) emit_table(table, ascii, out_path, out);
  return ok ? kExitOk : kExitPropertyFailure;
}

int cmd_construct_embed(const std::string& h_spec, bool ascii, const std::string& out_path,
                        std::ostream& out) {
  const FiniteGroup h = group_from_spec(h_spec);
  return finish_instance(build_embedding_group(h), ascii, out_path, out);
}

int cmd_construct_extraspecial(int p, const std::string& which, bool ascii,
                               const std::string& out_path, std::ostream& out) {
  const ExtraspecialCase c = which == "expP" ? ExtraspecialCase::kExponentP
                                             : ExtraspecialCase::kExponentPSquared;
  return finish_instance(build_extraspecial_instance(p, c), ascii, out_path, out);
}

int cmd_verify(const std::string& path, bool pandiagonal, std::ostream& out,
               std::ostream& err) {
  const std::string text = read_file(path);
  const FileKind kind = sniff_file_kind(text);

  if (kind == FileKind::kGrid) {
    if (pandiagonal) {
      err << "error: --pandiagonal does not apply to a raw grid file\n";
      return kExitUsage;
    }
    const GridFile file = grid_file_from_text(text);
    const RawGrid grid = grid_from_file(file);
    const BlockLayout layout{file.block_rows, file.block_cols, grid.rows, grid.cols};
    VerificationReport report;
    const bool ok = verify_modular_magic_grid(grid, layout, &report);
    out << "kind: grid\n";
    out << "sudoku: " << (report.is_sudoku ? "pass" : "FAIL") << '\n';
    out << "block-sums: " << (report.is_magic ? "pass" : "FAIL") << '\n';
    print_failures(out, report,
                   [](Element x) { return std::to_string(x); });
    return ok ? kExitOk : kExitPropertyFailure;
  }

  const SudokuTable table = parse_table(table_file_from_text(text));
  const BlockLayout layout = BlockLayout::of(table);
  const VerificationReport report = verify_table(table, layout);
  out << "kind: table\n";
  out << "cayley: " << (report.is_cayley ? "pass" : "FAIL") << '\n';
  out << "sudoku: " << (report.is_sudoku ? "pass" : "FAIL") << '\n';
  if (report.magic_checked) {
    out << "magic: " << (report.is_magic ? "pass" : "FAIL") << '\n';
    out << "pandiagonal-magic: " << (report.is_pandiagonal_magic ? "pass" : "FAIL")
        << '\n';
  } else {
    out << "magic: not checked (blocks not square)\n";
    out << "pandiagonal-magic: not checked (blocks not square)\n";
  }
  print_failures(out, report, [&table](Element x) { return table.group.name(x); });

  bool ok = report.is_cayley && report.is_sudoku;
  if (pandiagonal) ok = ok && report.magic_checked && report.is_pandiagonal_magic;
  return ok ? kExitOk : kExitPropertyFailure;
}

int cmd_search(const std::string& spec, const std::string& mode_name, long long max_pairs,
               const std::string& out_path, std::ostream& out) {
  const FiniteGroup g = group_from_spec(spec);
  const SearchMode mode =
      mode_name == "pandiagonal" ? SearchMode::kPandiagonal : SearchMode::kMagic;
  SearchOptions options;
  if (max_pairs > 0) options.max_pairs = max_pairs;
  const SearchOutcome outcome = decide_magic_existence(g, mode, options);
  out << certificate_to_text(outcome.certificate);
  if (outcome.witness && !out_path.empty())
    emit_table(*outcome.witness, false, out_path, out);
  return outcome.certificate.outcome == SearchOutcomeKind::kInconclusive
             ? kExitInconclusive
             : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley-sudoku tables of finite groups: construction, verification, search"};
  app.require_subcommand(1);

  std::string spec;
  std::vector<std::string> gens;
  std::vector<std::string> rep_names;
  std::string out_path;
  std::string file_path;
  std::string mode = "magic";
  std::string es_case;
  long long max_pairs = 0;
  int prime = 0;
  bool ascii = false;
  bool pandiagonal = false;

  CLI::App* group_cmd = app.add_subcommand("group", "print properties of a group");
  group_cmd->add_option("spec", spec, "group spec, e.g. \"C3 x C3\"")->required();

  CLI::App* construct = app.add_subcommand("construct", "build tables");
  construct->require_subcommand(1);

  CLI::App* sudoku_cmd =
      construct->add_subcommand("sudoku", "Cayley-sudoku table from a subgroup");
  sudoku_cmd->add_option("spec", spec, "group spec")->required();
  sudoku_cmd->add_option("--subgroup", gens, "generator element names")
      ->required()
      ->expected(-1);
  sudoku_cmd->add_flag("--ascii", ascii, "render as bordered text");
  sudoku_cmd->add_option("--out", out_path, "write to a file instead of stdout");

  CLI::App* magic_cmd =
      construct->add_subcommand("magic", "pandiagonal magic Cayley-sudoku table");
  magic_cmd->add_option("spec", spec, "group spec")->required();
  magic_cmd->add_option("--center-subgroup", gens, "generator element names for N")
      ->required()
      ->expected(-1);
  magic_cmd->add_option("--reps", rep_names, "ordered coset representative names")
      ->expected(-1);
  magic_cmd->add_flag("--ascii", ascii, "render as bordered text");
  magic_cmd->add_option("--out", out_path, "write to a file instead of stdout");

  CLI::App* embed_cmd = construct->add_subcommand(
      "embed", "magic table for H x H x Z_|H| x Z_|H| from a group H");
  embed_cmd->add_option("spec", spec, "spec of H")->required();
  embed_cmd->add_flag("--ascii", ascii, "render as bordered text");
  embed_cmd->add_option("--out", out_path, "write the table to a file");

  CLI::App* es_cmd = construct->add_subcommand(
      "extraspecial", "magic table for E x Z_p, E extra-special of order p^3");
  es_cmd->add_option("p", prime, "odd prime")->required();
  es_cmd->add_option("case", es_case, "expP or expP2")
      ->required()
      ->check(CLI::IsMember({"expP", "expP2"}));
  es_cmd->add_flag("--ascii", ascii, "render as bordered text");
  es_cmd->add_option("--out", out_path, "write the table to a file");

  CLI::App* verify_cmd = app.add_subcommand("verify", "verify a table or grid file");
  verify_cmd->add_option("file", file_path, "table or grid file")->required();
  verify_cmd->add_flag("--pandiagonal", pandiagonal,
                       "require the pandiagonal magic property as well");

  CLI::App* search_cmd =
      app.add_subcommand("search", "decide existence of a magic table");
  search_cmd->add_option("spec", spec, "group spec")->required();
  search_cmd->add_option("--mode", mode, "magic or pandiagonal")
      ->check(CLI::IsMember({"magic", "pandiagonal"}));
  search_cmd->add_option("--max-pairs", max_pairs, "partition pair budget");
  search_cmd->add_option("--out", out_path, "write a found witness table to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (group_cmd->parsed()) return cmd_group(spec, out);
    if (construct->parsed()) {
      if (sudoku_cmd->parsed())
        return cmd_construct_sudoku(spec, gens, ascii, out_path, out);
      if (magic_cmd->parsed())
        return cmd_construct_magic(spec, gens, rep_names, ascii, out_path, out, err);
      if (embed_cmd->parsed()) return cmd_construct_embed(spec, ascii, out_path, out);
      if (es_cmd->parsed())
        return cmd_construct_extraspecial(prime, es_case, ascii, out_path, out);
    }
    if (verify_cmd->parsed()) return cmd_verify(file_path, pandiagonal, out, err);
    if (search_cmd->parsed()) return cmd_search(spec, mode, max_pairs, out_path, out);
  } catch (const HypothesisRejected& rejected) {
    out << rejected.report.describe();
    return kExitPropertyFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace mcs
