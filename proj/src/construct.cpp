#include "mcs/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace mcs {

namespace {

std::vector<Element> sorted(std::vector<Element> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

void require_same_group(const FiniteGroup& g, const FiniteGroup& other, const char* what) {
  if (!g.same_as(other))
    throw std::invalid_argument(std::string(what) + " belongs to a different group");
}

}  // namespace

SudokuTable construction1(const FiniteGroup& g, const SubgroupHandle& h,
                          const std::vector<std::vector<Element>>& right_cosets,
                          const std::vector<std::vector<Element>>& left_rep_sets) {
  require_same_group(g, h.parent(), "subgroup");
  const int order = g.order();
  const int k = h.size();
  const int n = order / k;

  if (static_cast<int>(right_cosets.size()) != n)
    throw std::invalid_argument("expected one list per right coset");
  std::vector<char> seen(order, 0);
  for (const auto& coset : right_cosets) {
    if (static_cast<int>(coset.size()) != k)
      throw std::invalid_argument("right coset list has the wrong size");
    for (Element x : coset)
      if (x < 0 || x >= order)
        throw std::invalid_argument("element index out of range");
    // The listed cells must form the right coset through the first entry.
    std::vector<Element> expected;
    expected.reserve(k);
    for (Element m : h.elements()) expected.push_back(g.op(m, coset[0]));
    if (sorted(coset) != sorted(expected))
      throw std::invalid_argument("list is not a right coset of the subgroup");
    for (Element x : coset) {
      if (seen[x]) throw std::invalid_argument("right cosets do not partition the group");
      seen[x] = 1;
    }
  }

  if (static_cast<int>(left_rep_sets.size()) != k)
    throw std::invalid_argument("expected |H| left representative sets");
  // Identify each left coset by its minimal member.
  std::vector<Element> coset_key(order);
  for (Element x = 0; x < order; ++x) {
    Element key = order;
    for (Element m : h.elements()) key = std::min(key, g.op(x, m));
    coset_key[x] = key;
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (const auto& t : left_rep_sets) {
    if (static_cast<int>(t.size()) != n)
      throw std::invalid_argument("left representative set has the wrong size");
    std::set<Element> keys;
    for (Element x : t) {
      if (x < 0 || x >= order)
        throw std::invalid_argument("element index out of range");
      if (seen[x])
        throw std::invalid_argument("left representative sets do not partition the group");
      seen[x] = 1;
      if (!keys.insert(coset_key[x]).second)
        throw std::invalid_argument("left representative set meets a coset twice");
    }
  }

  std::vector<Element> rows;
  std::vector<Element> cols;
  rows.reserve(order);
  cols.reserve(order);
  for (const auto& t : left_rep_sets) rows.insert(rows.end(), t.begin(), t.end());
  for (const auto& coset : right_cosets) cols.insert(cols.end(), coset.begin(), coset.end());
  return make_table(g, std::move(rows), std::move(cols), n, k);
}

SudokuTable canonical_construction1(const FiniteGroup& g, const SubgroupHandle& h) {
  require_same_group(g, h.parent(), "subgroup");
  const int order = g.order();
  const int k = h.size();
  const int n = order / k;

  // Scanning element indices upward discovers each coset at its minimal
  // member, so the push order is the canonical coset order.
  std::vector<std::vector<Element>> right;
  right.reserve(n);
  std::vector<char> covered(order, 0);
  for (Element x = 0; x < order; ++x) {
    if (covered[x]) continue;
    std::vector<Element> coset;
    coset.reserve(k);
    for (Element m : h.elements()) coset.push_back(g.op(m, x));
    std::sort(coset.begin(), coset.end());
    for (Element y : coset) covered[y] = 1;
    right.push_back(std::move(coset));
  }

  std::vector<std::vector<Element>> left;
  left.reserve(n);
  std::fill(covered.begin(), covered.end(), 0);
  for (Element x = 0; x < order; ++x) {
    if (covered[x]) continue;
    std::vector<Element> coset;
    coset.reserve(k);
    for (Element m : h.elements()) coset.push_back(g.op(x, m));
    std::sort(coset.begin(), coset.end());
    for (Element y : coset) covered[y] = 1;
    left.push_back(std::move(coset));
  }

  std::vector<std::vector<Element>> reps(k, std::vector<Element>(n));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) reps[i][j] = left[j][i];
  return construction1(g, h, right, reps);
}

MagicInstance MagicInstance::create(FiniteGroup group, SubgroupHandle subgroup, RepList reps,
                                    std::vector<Element> subgroup_order) {
  require_same_group(group, subgroup.parent(), "subgroup");
  require_same_group(group, reps.parent(), "representative list");
  if (reps.side() != CosetSide::kLeft)
    throw std::invalid_argument("magic construction needs left coset representatives");
  if (reps.subgroup().elements() != subgroup.elements())
    throw std::invalid_argument("representative list is for a different subgroup");
  const int k = subgroup.size();
  if (static_cast<long long>(k) * k != group.order())
    throw std::invalid_argument("group order must be the square of the subgroup order");
  if (subgroup_order.empty()) {
    subgroup_order = subgroup.elements();
  } else if (sorted(subgroup_order) != subgroup.elements()) {
    throw std::invalid_argument("subgroup ordering must list exactly the subgroup's elements");
  }
  return MagicInstance{std::move(group), std::move(subgroup), std::move(reps), k,
                       std::move(subgroup_order)};
}

std::string HypothesisReport::describe() const {
  std::ostringstream out;
  auto verdict = [](bool ok) { return ok ? "pass" : "FAIL"; };
  out << "hypothesis 1 (exponent of G divides k): " << verdict(exp_divides_k) << '\n';
  out << "hypothesis 2 (N is central of order k): " << verdict(n_central_of_order_k) << '\n';
  out << "hypothesis 3 (product over N is the identity): " << verdict(n_product_trivial)
      << '\n';
  out << "hypothesis 4 (interleaved products over T are the identity): "
      << verdict(t_shifted_products_trivial);
  if (failing_shift) out << " (first failure at i = " << *failing_shift << ")";
  out << '\n';
  return out.str();
}

HypothesisReport check_mcs_hypotheses(const MagicInstance& inst) {
  const FiniteGroup& g = inst.group;
  const int k = inst.k;
  HypothesisReport r;

  r.exp_divides_k = (k % exponent(g) == 0);

  bool central = (inst.subgroup.size() == k);
  for (Element m : inst.subgroup.elements()) {
    for (Element x = 0; x < g.order() && central; ++x)
      central = (g.op(m, x) == g.op(x, m));
    if (!central) break;
  }
  r.n_central_of_order_k = central;

  r.n_product_trivial = (product_of(g, inst.subgroup_order) == g.identity());

  const std::vector<Element>& t = inst.reps.reps();
  r.t_shifted_products_trivial = true;
  for (int i = 0; i < k; ++i) {
    Element p = g.identity();
    for (int m = 0; m < k; ++m) p = g.op(g.op(p, t[m]), t[i]);
    if (p != g.identity()) {
      r.t_shifted_products_trivial = false;
      r.failing_shift = i + 1;
      break;
    }
  }

  r.overall = r.exp_divides_k && r.n_central_of_order_k && r.n_product_trivial &&
              r.t_shifted_products_trivial;
  return r;
}

namespace {

std::string rejection_message(const HypothesisReport& r) {
  return "magic construction hypotheses not satisfied\n" + r.describe();
}

}  // namespace

HypothesisRejected::HypothesisRejected(HypothesisReport r)
    : std::runtime_error(rejection_message(r)), report(std::move(r)) {}

SudokuTable magic_table(const MagicInstance& inst) {
  HypothesisReport report = check_mcs_hypotheses(inst);
  if (!report.overall) throw HypothesisRejected(std::move(report));

  const FiniteGroup& g = inst.group;
  const int k = inst.k;
  const std::vector<Element>& t = inst.reps.reps();
  const std::vector<Element>& ns = inst.subgroup_order;

  std::vector<Element> cols;
  std::vector<Element> rows;
  cols.reserve(static_cast<std::size_t>(k) * k);
  rows.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int m = 0; m < k; ++m) cols.push_back(g.op(ns[m], t[i]));
  for (int m = 0; m < k; ++m)
    for (int j = 0; j < k; ++j) rows.push_back(g.op(t[j], ns[m]));
  return make_table(g, std::move(rows), std::move(cols), k, k);
}

RepList abelian_reps(const FiniteGroup& g, const SubgroupHandle& n) {
  require_same_group(g, n.parent(), "subgroup");
  if (!is_abelian(g)) throw std::invalid_argument("group is not abelian");
  const int k = n.size();
  if (static_cast<long long>(k) * k != g.order())
    throw std::invalid_argument("group order must be the square of the subgroup order");
  if (k % exponent(g) != 0)
    throw std::invalid_argument("group exponent does not divide the subgroup order");
  if (product_of(g, n.elements()) != g.identity())
    throw std::invalid_argument("product over the subgroup is not the identity");
  RepList canonical = coset_reps(g, n, CosetSide::kLeft);
  const Element total = product_of(g, canonical.reps());
  if (!n.contains(total))
    throw std::invalid_argument(
        "coset product nontrivial: the cosets of the subgroup do not multiply to the "
        "identity coset");

  // Correct the last representative so the full product collapses to the
  // identity; the correction stays inside its coset because total lies in N.
  std::vector<Element> reps = canonical.reps();
  reps.back() = g.op(reps.back(), g.inverse(total));
  return RepList::create(g, n, std::move(reps), CosetSide::kLeft);
}

MagicInstance build_embedding_group(const FiniteGroup& h) {
  const int n = h.order();
  const FiniteGroup zn = make_cyclic(n);
  FiniteGroup g = direct_product(direct_product(direct_product(h, h), zn), zn);

  // With the nested product indexing, (h1, h2, z1, z2) sits at
  // ((h1*n + h2)*n + z1)*n + z2, so the trailing Z_n x Z_n copy occupies
  // indices 0..n^2-1 and the leading H x H copy the multiples of n^2.
  const int k = n * n;
  std::vector<Element> tail(static_cast<std::size_t>(k));
  std::iota(tail.begin(), tail.end(), 0);
  SubgroupHandle nn = SubgroupHandle::create(g, std::move(tail));

  std::vector<Element> t(static_cast<std::size_t>(k));
  for (int m = 0; m < k; ++m) t[static_cast<std::size_t>(m)] = m * k;
  RepList reps = RepList::create(g, nn, std::move(t), CosetSide::kLeft);
  return MagicInstance::create(std::move(g), std::move(nn), std::move(reps));
}

MagicInstance build_extraspecial_instance(int p, ExtraspecialCase which) {
  const bool exp_p = (which == ExtraspecialCase::kExponentP);
  const FiniteGroup e = exp_p ? make_heisenberg(p) : make_modular_extraspecial(p);
  const FiniteGroup zp = make_cyclic(p);
  FiniteGroup g = direct_product(e, zp);

  SubgroupHandle z = center(g);
  if (z.size() != p * p)
    throw std::logic_error("center of the product has unexpected size");

  // Generator indices in each realization (see the group builders).
  const Element a = exp_p ? p * p : p;
  const Element b = exp_p ? p : 1;
  std::vector<Element> t;
  t.reserve(static_cast<std::size_t>(p) * p);
  for (int l = 0; l < p; ++l)
    for (int i = 0; i < p; ++i) {
      const Element in_e = e.op(power(e, b, l), power(e, a, i));
      t.push_back(in_e * p + 1);  // paired with 1 in the Z_p factor
    }
  RepList reps = RepList::create(g, z, std::move(t), CosetSide::kLeft);
  return MagicInstance::create(std::move(g), std::move(z), std::move(reps));
}

}  // namespace mcs
