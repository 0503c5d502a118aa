#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcs/group.hpp"
#include "mcs/table.hpp"
#include "mcs/verify.hpp"

namespace mcs {

enum class SearchMode { kMagic, kPandiagonal };

enum class SearchOutcomeKind { kWitness, kNonexistence, kInconclusive };

/**
 * Machine-checkable summary of a search run.  The statistics are exact and
 * deterministic: partition enumeration is lexicographic, pairs are scanned in
 * (row partition, column partition) index order, and the run stops at the
 * first verified witness.  partitions_per_side is 0 when the partition space
 * was too large to enumerate at all (the outcome is then inconclusive with
 * zero pairs examined).  Wall-clock time is deliberately kept out of the
 * certificate so that serialization and replay are reproducible.
 */
struct SearchCertificate {
  std::string group_spec;
  int k = 0;
  SearchMode mode = SearchMode::kMagic;
  long long partitions_per_side = 0;
  long long pairs_examined = 0;
  long long pairs_surviving = 0;
  long long orderings_examined = 0;
  long long pair_budget = 0;
  SearchOutcomeKind outcome = SearchOutcomeKind::kInconclusive;
};

struct SearchOutcome {
  SearchCertificate certificate;
  std::optional<SudokuTable> witness;  // present iff outcome == kWitness
  double seconds = 0;                  // measured, never serialized
};

struct SearchOptions {
  /// Skip cyclically shifted re-orderings of the first row and column bands.
  /// Applied only where the shift symmetry provably preserves the searched
  /// property (abelian groups, or pandiagonal mode).
  bool reduce_orderings = true;
  /// Upper bound on partition pairs examined before giving up.
  long long max_pairs = 10'000'000;
};

/// One side's band partition: k bands of k element indices, each band sorted
/// ascending and bands ordered by their first element.
using BandPartition = std::vector<std::vector<Element>>;

/**
 * Decides whether |G| = k^2 admits a table whose row and column labels are
 * banded into k blocks of k with every block line product the identity.
 *
 * Phase 1 scans all pairs of unordered row/column band partitions, discarding
 * pairs that fail ordering-invariant necessary conditions (for abelian G the
 * closed-form row, column, and block-content conditions; for nonabelian G the
 * block-content condition only).  Phase 2 enumerates within-band orderings
 * for surviving pairs and verifies candidate tables, which is exhaustive for
 * k <= 3; larger k reports inconclusive when survivors exist.
 *
 * Throws std::invalid_argument when |G| is not a perfect square.
 */
SearchOutcome decide_magic_existence(const FiniteGroup& g,
                                     SearchMode mode = SearchMode::kMagic,
                                     const SearchOptions& options = {});

/// All band partitions of [0, order) into order/k bands, lexicographically
/// ordered.  Intended for tests and small orders; throws when the count
/// exceeds the internal enumeration cap.
std::vector<BandPartition> enumerate_band_partitions(int order, int k);

/// Phase-1 test for a single pair, exposed so soundness can be checked
/// against independently constructed magic tables.
bool phase1_pair_survives(const FiniteGroup& g, const BandPartition& row_bands,
                          const BandPartition& col_bands);

/**
 * Re-runs phase 1 with an independent enumerator (restricted-growth strings,
 * filtered to equal band sizes, then sorted) and a literal per-block line
 * check, and confirms the certificate's partition count and survivor count
 * over the recorded pair prefix.  Returns false on any mismatch.  Throws
 * std::invalid_argument when the group does not match k^2 or its order is too
 * large for the replay enumerator.
 */
bool replay_certificate(const FiniteGroup& g, const SearchCertificate& cert);

std::string certificate_to_text(const SearchCertificate& cert);
SearchCertificate certificate_from_text(const std::string& text);

}  // namespace mcs
