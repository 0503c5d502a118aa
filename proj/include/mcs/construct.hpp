#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcs/group.hpp"
#include "mcs/table.hpp"

namespace mcs {

/**
 * Cayley-sudoku assembly from a subgroup H of G: columns are labeled by the
 * right cosets of H (in the given order, each coset in its given internal
 * order) and rows by sets T_1..T_k that each pick one representative from
 * every left coset of H.  The resulting table divides into blocks of
 * [G:H] x |H| cells each containing every element of G exactly once, for any
 * choice of the orderings.
 */
SudokuTable construction1(const FiniteGroup& g, const SubgroupHandle& h,
                          const std::vector<std::vector<Element>>& right_cosets,
                          const std::vector<std::vector<Element>>& left_rep_sets);

/// construction1 with everything in canonical order: cosets ordered by their
/// minimal element and listed ascending, and T_i collecting the i-th smallest
/// member of each left coset.
SudokuTable canonical_construction1(const FiniteGroup& g, const SubgroupHandle& h);

/**
 * Input to the magic-table construction: a group of square order k^2, a
 * subgroup N expected to be central of order k, an ordered complete set T of
 * left coset representatives of N, and the ordering of N used both for the
 * subgroup-product hypothesis and for expanding column labels (canonical
 * index order unless a different ordering is supplied).
 */
struct MagicInstance {
  FiniteGroup group;
  SubgroupHandle subgroup;           // N
  RepList reps;                      // T, left cosets
  int k = 0;
  std::vector<Element> subgroup_order;

  static MagicInstance create(FiniteGroup group, SubgroupHandle subgroup, RepList reps,
                              std::vector<Element> subgroup_order = {});
};

/**
 * Outcome of checking the four magic-construction hypotheses:
 *   1. exp(G) divides k,
 *   2. N is central of order k,
 *   3. the product of N's elements is the identity,
 *   4. for every i, the interleaved product t_1 t_i t_2 t_i ... t_k t_i is
 *      the identity.
 * Hypothesis 4 is evaluated literally by that product (not by any abelian
 * shortcut), so the report is meaningful for nonabelian groups as well.
 */
struct HypothesisReport {
  bool exp_divides_k = false;
  bool n_central_of_order_k = false;
  bool n_product_trivial = false;
  bool t_shifted_products_trivial = false;
  std::optional<int> failing_shift;  // 1-based i of the first failing product
  bool overall = false;

  std::string describe() const;
};

HypothesisReport check_mcs_hypotheses(const MagicInstance& inst);

/// Thrown by magic_table when any hypothesis fails; carries the full report.
class HypothesisRejected : public std::runtime_error {
 public:
  explicit HypothesisRejected(HypothesisReport report);
  const HypothesisReport report;
};

/**
 * The k x k-blocked table with column labels [Nt_1],...,[Nt_k] (each coset
 * expanded as n_1 t_i, n_2 t_i, ...) and row labels [Tn_1],...,[Tn_k] (each
 * expanded as t_1 n_m, t_2 n_m, ...).  When the hypotheses hold, every block
 * row, column, broken diagonal, and broken antidiagonal multiplies to the
 * identity; when any fails the construction refuses with HypothesisRejected.
 */
SudokuTable magic_table(const MagicInstance& inst);

/**
 * For abelian G with |G| = k^2, exp(G) | k, |N| = k, trivial N-product, and
 * trivial G/N-product: canonical coset representatives corrected in the last
 * position by n = (product of the canonical representatives)^{-1}, which
 * yields a representative list satisfying the interleaved-product hypothesis.
 * Each violated precondition is reported as its own invalid_argument.
 */
RepList abelian_reps(const FiniteGroup& g, const SubgroupHandle& n);

/// G = H x H x Z_|H| x Z_|H| with N = 1 x 1 x Z_|H| x Z_|H| and T = H x H x 1 x 1
/// in lexicographic order; a ready-to-build magic instance for any finite H.
MagicInstance build_embedding_group(const FiniteGroup& h);

enum class ExtraspecialCase { kExponentP, kExponentPSquared };

/// G = E x Z_p for the extra-special group E of order p^3 of the requested
/// exponent, with N = Z(G) and T = [(b^l a^k, 1)] ordered lexicographically
/// on (l, k).
MagicInstance build_extraspecial_instance(int p, ExtraspecialCase which);

}  // namespace mcs
