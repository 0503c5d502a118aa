#include "mcs/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace mcs {

namespace {

constexpr long long kPartitionCap = 4'000'000;

// Ways to split `order` labeled cells into unordered bands of size k,
// saturating at kPartitionCap + 1.  The smallest unplaced element anchors
// each band, leaving C(remaining - 1, k - 1) companion choices.
long long capped_partition_count(int order, int k) {
  constexpr long long kSat = kPartitionCap + 1;
  long long total = 1;
  for (int remaining = order; remaining > 0; remaining -= k) {
    const int n = remaining - 1;
    const int r = k - 1;
    long long c = 1;
    for (int i = 1; i <= r; ++i) {
      if (c > 2'000'000'000'000LL) return kSat;
      c = c * (n - r + i) / i;
    }
    if (c > 0 && total > kSat / c) return kSat;
    total *= c;
    if (total > kPartitionCap) return kSat;
  }
  return total;
}

// Emits every band partition of [0, order) into bands of size k, flattened
// band-major with bands anchored at their minima, in lexicographic order of
// the flattened form.  The sink returns false to stop early.
class PartitionEnumerator {
 public:
  PartitionEnumerator(int order, int k) : order_(order), k_(k), used_(order, 0) {
    current_.reserve(static_cast<std::size_t>(order));
  }

  void run(const std::function<bool(const std::uint8_t*)>& sink) {
    sink_ = &sink;
    stop_ = false;
    place_band();
  }

 private:
  void place_band() {
    if (stop_) return;
    if (static_cast<int>(current_.size()) == order_) {
      if (!(*sink_)(current_.data())) stop_ = true;
      return;
    }
    int anchor = 0;
    while (used_[anchor]) ++anchor;
    used_[anchor] = 1;
    current_.push_back(static_cast<std::uint8_t>(anchor));
    pick(anchor + 1, k_ - 1);
    used_[anchor] = 0;
    current_.pop_back();
  }

  void pick(int from, int need) {
    if (stop_) return;
    if (need == 0) {
      place_band();
      return;
    }
    for (int x = from; x <= order_ - need; ++x) {
      if (used_[x]) continue;
      used_[x] = 1;
      current_.push_back(static_cast<std::uint8_t>(x));
      pick(x + 1, need - 1);
      used_[x] = 0;
      current_.pop_back();
      if (stop_) return;
    }
  }

  int order_;
  int k_;
  std::vector<char> used_;
  std::vector<std::uint8_t> current_;
  const std::function<bool(const std::uint8_t*)>* sink_ = nullptr;
  bool stop_ = false;
};

struct Phase1Context {
  const FiniteGroup* g = nullptr;
  int order = 0;
  int k = 0;
  bool abelian = false;
  Element id = 0;
  std::vector<Element> pow_k;    // x^k per element
  std::vector<long long> stamp;  // per-element epoch marks for distinctness
  long long epoch = 0;
  std::vector<Element> rp;  // row band product scratch
  std::vector<Element> cp;  // column band product scratch
};

Phase1Context make_phase1_context(const FiniteGroup& g, int k) {
  Phase1Context ctx;
  ctx.g = &g;
  ctx.order = g.order();
  ctx.k = k;
  ctx.abelian = is_abelian(g);
  ctx.id = g.identity();
  ctx.pow_k.resize(static_cast<std::size_t>(ctx.order));
  for (Element x = 0; x < ctx.order; ++x) ctx.pow_k[x] = power(g, x, k);
  ctx.stamp.assign(static_cast<std::size_t>(ctx.order), 0);
  ctx.rp.resize(static_cast<std::size_t>(k));
  ctx.cp.resize(static_cast<std::size_t>(k));
  return ctx;
}

// Ordering-invariant necessary conditions for a magic table on this band
// pair.  For abelian G every block must satisfy x^k * prod(C) = e for each of
// its row labels x and prod(R) * c^k = e for each column label c; every block
// must also contain each group element exactly once.  For nonabelian G only
// the containment condition is ordering-invariant, so only it is checked.
bool pair_survives(Phase1Context& ctx, const std::uint8_t* rows, const std::uint8_t* cols) {
  const FiniteGroup& g = *ctx.g;
  const int k = ctx.k;
  if (ctx.abelian) {
    for (int a = 0; a < k; ++a) {
      Element p = ctx.id;
      for (int i = 0; i < k; ++i) p = g.op(p, rows[a * k + i]);
      ctx.rp[a] = p;
    }
    for (int b = 0; b < k; ++b) {
      Element p = ctx.id;
      for (int i = 0; i < k; ++i) p = g.op(p, cols[b * k + i]);
      ctx.cp[b] = p;
    }
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        for (int i = 0; i < k; ++i)
          if (g.op(ctx.pow_k[rows[a * k + i]], ctx.cp[b]) != ctx.id) return false;
        for (int i = 0; i < k; ++i)
          if (g.op(ctx.rp[a], ctx.pow_k[cols[b * k + i]]) != ctx.id) return false;
      }
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      ++ctx.epoch;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          const Element v = g.op(rows[a * k + i], cols[b * k + j]);
          if (ctx.stamp[v] == ctx.epoch) return false;
          ctx.stamp[v] = ctx.epoch;
        }
    }
  return true;
}

// All orderings of one band: the full k! permutations, or (k-1)! with the
// band's minimum pinned first when cyclic shifts are known to preserve the
// searched property.
std::vector<std::vector<Element>> band_orderings(const std::uint8_t* band, int k,
                                                 bool pin_first) {
  std::vector<Element> base(band, band + k);
  std::vector<std::vector<Element>> result;
  if (pin_first && k > 1) {
    std::vector<Element> tail(base.begin() + 1, base.end());
    do {
      std::vector<Element> ordering;
      ordering.reserve(static_cast<std::size_t>(k));
      ordering.push_back(base[0]);
      ordering.insert(ordering.end(), tail.begin(), tail.end());
      result.push_back(std::move(ordering));
    } while (std::next_permutation(tail.begin(), tail.end()));
  } else {
    std::vector<Element> p = base;
    do {
      result.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return result;
}

std::optional<SudokuTable> try_orderings(const FiniteGroup& g, const std::uint8_t* rows,
                                         const std::uint8_t* cols, int k, SearchMode mode,
                                         bool reduce, long long* orderings_examined) {
  std::vector<std::vector<std::vector<Element>>> row_ord(static_cast<std::size_t>(k));
  std::vector<std::vector<std::vector<Element>>> col_ord(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) row_ord[a] = band_orderings(rows + a * k, k, reduce && a == 0);
  for (int b = 0; b < k; ++b) col_ord[b] = band_orderings(cols + b * k, k, reduce && b == 0);

  const std::size_t dims = static_cast<std::size_t>(2 * k);
  std::vector<std::size_t> idx(dims, 0);
  std::vector<Element> row_labels;
  std::vector<Element> col_labels;
  for (;;) {
    row_labels.clear();
    col_labels.clear();
    for (int a = 0; a < k; ++a) {
      const auto& o = row_ord[a][idx[a]];
      row_labels.insert(row_labels.end(), o.begin(), o.end());
    }
    for (int b = 0; b < k; ++b) {
      const auto& o = col_ord[b][idx[k + b]];
      col_labels.insert(col_labels.end(), o.begin(), o.end());
    }
    ++*orderings_examined;
    SudokuTable t = make_table(g, row_labels, col_labels, k, k);
    const BlockLayout layout = BlockLayout::of(t);
    const bool ok = (mode == SearchMode::kMagic) ? verify_magic(t, layout)
                                                 : verify_pandiagonal_magic(t, layout);
    if (ok) return t;

    std::size_t d = 0;
    for (; d < dims; ++d) {
      const std::size_t limit =
          d < static_cast<std::size_t>(k) ? row_ord[d].size() : col_ord[d - k].size();
      if (++idx[d] < limit) break;
      idx[d] = 0;
    }
    if (d == dims) return std::nullopt;
  }
}

const char* mode_name(SearchMode mode) {
  return mode == SearchMode::kMagic ? "magic" : "pandiagonal";
}

const char* outcome_name(SearchOutcomeKind kind) {
  switch (kind) {
    case SearchOutcomeKind::kWitness: return "witness";
    case SearchOutcomeKind::kNonexistence: return "nonexistence";
    case SearchOutcomeKind::kInconclusive: break;
  }
  return "inconclusive";
}

}  // namespace

std::vector<BandPartition> enumerate_band_partitions(int order, int k) {
  if (order < 1 || k < 1 || order % k != 0)
    throw std::invalid_argument("band size must divide the number of elements");
  if (capped_partition_count(order, k) > kPartitionCap)
    throw std::invalid_argument("partition space too large to enumerate");
  std::vector<BandPartition> result;
  PartitionEnumerator enumerator(order, k);
  enumerator.run([&](const std::uint8_t* flat) {
    BandPartition p;
    p.reserve(static_cast<std::size_t>(order / k));
    for (int b = 0; b < order / k; ++b)
      p.emplace_back(flat + b * k, flat + (b + 1) * k);
    result.push_back(std::move(p));
    return true;
  });
  return result;
}

bool phase1_pair_survives(const FiniteGroup& g, const BandPartition& row_bands,
                          const BandPartition& col_bands) {
  const int order = g.order();
  int k = 0;
  while (static_cast<long long>(k + 1) * (k + 1) <= order) ++k;
  if (static_cast<long long>(k) * k != order)
    throw std::invalid_argument("group order is not a perfect square");

  auto flatten = [&](const BandPartition& bands) {
    if (static_cast<int>(bands.size()) != k)
      throw std::invalid_argument("expected k bands of k elements");
    std::vector<std::vector<Element>> sorted_bands = bands;
    std::vector<char> seen(static_cast<std::size_t>(order), 0);
    for (auto& band : sorted_bands) {
      if (static_cast<int>(band.size()) != k)
        throw std::invalid_argument("expected k bands of k elements");
      std::sort(band.begin(), band.end());
      for (Element x : band) {
        if (x < 0 || x >= order || seen[x])
          throw std::invalid_argument("bands do not partition the group");
        seen[x] = 1;
      }
    }
    std::sort(sorted_bands.begin(), sorted_bands.end());
    std::vector<std::uint8_t> flat;
    flat.reserve(static_cast<std::size_t>(order));
    for (const auto& band : sorted_bands)
      for (Element x : band) flat.push_back(static_cast<std::uint8_t>(x));
    return flat;
  };

  if (order > 255) throw std::invalid_argument("group too large for the band search");
  const std::vector<std::uint8_t> rows = flatten(row_bands);
  const std::vector<std::uint8_t> cols = flatten(col_bands);
  Phase1Context ctx = make_phase1_context(g, k);
  return pair_survives(ctx, rows.data(), cols.data());
}

SearchOutcome decide_magic_existence(const FiniteGroup& g, SearchMode mode,
                                     const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int order = g.order();
  int k = 0;
  while (static_cast<long long>(k + 1) * (k + 1) <= order) ++k;
  if (static_cast<long long>(k) * k != order)
    throw std::invalid_argument("group order is not a perfect square");

  SearchOutcome out;
  SearchCertificate& cert = out.certificate;
  cert.group_spec = g.spec();
  cert.k = k;
  cert.mode = mode;
  cert.pair_budget = options.max_pairs;

  auto finish = [&](SearchOutcomeKind kind) {
    cert.outcome = kind;
    out.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(out);
  };

  const long long count = capped_partition_count(order, k);
  if (count > kPartitionCap) {
    // The partition space cannot even be enumerated; report the bound hit.
    return finish(SearchOutcomeKind::kInconclusive);
  }
  cert.partitions_per_side = count;

  std::vector<std::uint8_t> flat;
  flat.reserve(static_cast<std::size_t>(count) * order);
  PartitionEnumerator enumerator(order, k);
  enumerator.run([&](const std::uint8_t* p) {
    flat.insert(flat.end(), p, p + order);
    return true;
  });

  Phase1Context ctx = make_phase1_context(g, k);
  const bool ordering_phase = (k <= 3);
  const bool reduce =
      options.reduce_orderings && (ctx.abelian || mode == SearchMode::kPandiagonal);
  const long long total_pairs = count * count;
  bool budget_hit = false;

  for (long long i = 0; i < count; ++i) {
    const std::uint8_t* rows = flat.data() + i * order;
    for (long long j = 0; j < count; ++j) {
      if (cert.pairs_examined == options.max_pairs) {
        budget_hit = true;
        break;
      }
      ++cert.pairs_examined;
      const std::uint8_t* cols = flat.data() + j * order;
      if (!pair_survives(ctx, rows, cols)) continue;
      ++cert.pairs_surviving;
      if (ordering_phase) {
        std::optional<SudokuTable> witness =
            try_orderings(g, rows, cols, k, mode, reduce, &cert.orderings_examined);
        if (witness) {
          out.witness = std::move(witness);
          return finish(SearchOutcomeKind::kWitness);
        }
      }
    }
    if (budget_hit) break;
  }

  if (budget_hit && cert.pairs_examined < total_pairs)
    return finish(SearchOutcomeKind::kInconclusive);
  if (!ordering_phase && cert.pairs_surviving > 0)
    return finish(SearchOutcomeKind::kInconclusive);
  return finish(SearchOutcomeKind::kNonexistence);
}

bool replay_certificate(const FiniteGroup& g, const SearchCertificate& cert) {
  const int order = g.order();
  if (static_cast<long long>(cert.k) * cert.k != order) return false;
  const int k = cert.k;

  const long long count = capped_partition_count(order, k);
  if (cert.partitions_per_side == 0) {
    // An unenumerated certificate only claims the space was over the cap.
    return count > kPartitionCap && cert.pairs_examined == 0 && cert.pairs_surviving == 0;
  }
  if (count > kPartitionCap) return false;
  if (order > 12)
    throw std::invalid_argument("replay enumeration supported only for small groups");

  // Independent partition enumeration: restricted growth strings filtered to
  // equal band sizes.  A restricted growth string lists each element's band
  // label with labels introduced in first-use order, which makes the decoded
  // form canonical (bands anchored at their minima) by construction.
  std::vector<std::vector<std::uint8_t>> partitions;
  std::vector<int> label(static_cast<std::size_t>(order), 0);
  std::function<void(int, int)> rec = [&](int pos, int max_used) {
    if (pos == order) {
      if (max_used + 1 != k) return;
      std::vector<int> sizes(static_cast<std::size_t>(k), 0);
      for (int x = 0; x < order; ++x) ++sizes[label[x]];
      for (int b = 0; b < k; ++b)
        if (sizes[b] != k) return;
      std::vector<std::uint8_t> form;
      form.reserve(static_cast<std::size_t>(order));
      for (int b = 0; b < k; ++b)
        for (int x = 0; x < order; ++x)
          if (label[x] == b) form.push_back(static_cast<std::uint8_t>(x));
      partitions.push_back(std::move(form));
      return;
    }
    for (int b = 0; b <= std::min(max_used + 1, k - 1); ++b) {
      label[pos] = b;
      rec(pos + 1, std::max(max_used, b));
    }
  };
  rec(0, -1);
  std::sort(partitions.begin(), partitions.end());

  if (static_cast<long long>(partitions.size()) != cert.partitions_per_side) return false;
  const long long total_pairs =
      static_cast<long long>(partitions.size()) * static_cast<long long>(partitions.size());
  if (cert.pairs_examined < 0 || cert.pairs_examined > total_pairs) return false;
  // a nonexistence claim must have exhausted the pair space, and a witness
  // claim must have at least one surviving pair to order
  if (cert.outcome == SearchOutcomeKind::kNonexistence && cert.pairs_examined != total_pairs)
    return false;
  if (cert.outcome == SearchOutcomeKind::kWitness && cert.pairs_surviving == 0) return false;

  // Literal per-block line check, written directly from the table picture
  // rather than the closed-form conditions.
  const bool abelian = is_abelian(g);
  const Element id = g.identity();
  auto literal_survives = [&](const std::vector<std::uint8_t>& rows,
                              const std::vector<std::uint8_t>& cols) {
    std::vector<char> hit(static_cast<std::size_t>(order));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        if (abelian) {
          for (int i = 0; i < k; ++i) {
            Element p = id;
            for (int j = 0; j < k; ++j) p = g.op(p, g.op(rows[a * k + i], cols[b * k + j]));
            if (p != id) return false;
          }
          for (int j = 0; j < k; ++j) {
            Element p = id;
            for (int i = 0; i < k; ++i) p = g.op(p, g.op(rows[a * k + i], cols[b * k + j]));
            if (p != id) return false;
          }
        }
        std::fill(hit.begin(), hit.end(), 0);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            const Element v = g.op(rows[a * k + i], cols[b * k + j]);
            if (hit[v]) return false;
            hit[v] = 1;
          }
      }
    return true;
  };

  long long examined = 0;
  long long surviving = 0;
  for (std::size_t i = 0; i < partitions.size() && examined < cert.pairs_examined; ++i)
    for (std::size_t j = 0; j < partitions.size() && examined < cert.pairs_examined; ++j) {
      ++examined;
      if (literal_survives(partitions[i], partitions[j])) ++surviving;
    }
  return surviving == cert.pairs_surviving;
}

std::string certificate_to_text(const SearchCertificate& cert) {
  std::ostringstream out;
  out << "magic-search-certificate v1\n";
  out << "group: " << cert.group_spec << '\n';
  out << "k: " << cert.k << '\n';
  out << "mode: " << mode_name(cert.mode) << '\n';
  out << "partitions-per-side: " << cert.partitions_per_side << '\n';
  out << "pairs-examined: " << cert.pairs_examined << '\n';
  out << "pairs-surviving: " << cert.pairs_surviving << '\n';
  out << "orderings-examined: " << cert.orderings_examined << '\n';
  out << "pair-budget: " << cert.pair_budget << '\n';
  out << "outcome: " << outcome_name(cert.outcome) << '\n';
  return out.str();
}

SearchCertificate certificate_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "magic-search-certificate v1")
    throw std::invalid_argument("not a search certificate");

  auto next_field = [&](const std::string& key) {
    if (!std::getline(in, line))
      throw std::invalid_argument("certificate missing field: " + key);
    const std::string prefix = key + ": ";
    if (line.rfind(prefix, 0) != 0)
      throw std::invalid_argument("certificate expected field: " + key);
    return line.substr(prefix.size());
  };
  auto next_number = [&](const std::string& key) {
    const std::string value = next_field(key);
    try {
      std::size_t pos = 0;
      const long long parsed = std::stoll(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
      return parsed;
    } catch (const std::exception&) {
      throw std::invalid_argument("certificate field is not a number: " + key);
    }
  };

  SearchCertificate cert;
  cert.group_spec = next_field("group");
  cert.k = static_cast<int>(next_number("k"));
  const std::string mode = next_field("mode");
  if (mode == "magic") {
    cert.mode = SearchMode::kMagic;
  } else if (mode == "pandiagonal") {
    cert.mode = SearchMode::kPandiagonal;
  } else {
    throw std::invalid_argument("certificate has unknown mode: " + mode);
  }
  cert.partitions_per_side = next_number("partitions-per-side");
  cert.pairs_examined = next_number("pairs-examined");
  cert.pairs_surviving = next_number("pairs-surviving");
  cert.orderings_examined = next_number("orderings-examined");
  cert.pair_budget = next_number("pair-budget");
  const std::string outcome = next_field("outcome");
  if (outcome == "witness") {
    cert.outcome = SearchOutcomeKind::kWitness;
  } else if (outcome == "nonexistence") {
    cert.outcome = SearchOutcomeKind::kNonexistence;
  } else if (outcome == "inconclusive") {
    cert.outcome = SearchOutcomeKind::kInconclusive;
  } else {
    throw std::invalid_argument("certificate has unknown outcome: " + outcome);
  }
  while (std::getline(in, line))
    if (!line.empty())
      throw std::invalid_argument("certificate has trailing content");
  return cert;
}

}  // namespace mcs
