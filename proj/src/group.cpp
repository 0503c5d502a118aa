#include "mcs/group.hpp"

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace mcs {

struct FiniteGroup::State {
  int order = 0;
  Element identity = 0;
  std::vector<std::uint16_t> table;                 // empty for deferred groups
  std::function<Element(Element, Element)> op_fn;   // set when table is empty
  std::vector<Element> inverse;                     // empty for deferred groups
  std::function<Element(Element)> inverse_fn;
  std::vector<std::string> names;
  std::unordered_map<std::string, Element> by_name;
  std::string spec;

  Element apply(Element a, Element b) const {
    return table.empty() ? op_fn(a, b)
                         : static_cast<Element>(table[static_cast<std::size_t>(a) * order + b]);
  }
};

namespace {

Element scan_identity(const FiniteGroup::State& s) {
  for (Element e = 0; e < s.order; ++e) {
    bool ok = true;
    for (Element x = 0; x < s.order && ok; ++x)
      ok = s.apply(e, x) == x && s.apply(x, e) == x;
    if (ok) return e;
  }
  throw std::invalid_argument("operation has no two-sided identity");
}

void check_names(FiniteGroup::State& s) {
  if (static_cast<int>(s.names.size()) != s.order)
    throw std::invalid_argument("element name count does not match order");
  s.by_name.reserve(s.names.size());
  for (Element x = 0; x < s.order; ++x) {
    if (s.names[x].empty())
      throw std::invalid_argument("empty element name");
    if (!s.by_name.emplace(s.names[x], x).second)
      throw std::invalid_argument("duplicate element name: " + s.names[x]);
  }
}

// Exhaustive for small orders; a fixed pseudo-random sample above that, so
// construction stays deterministic.
void check_associativity(const FiniteGroup::State& s) {
  const int n = s.order;
  if (n <= 256) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (s.apply(s.apply(a, b), c) != s.apply(a, s.apply(b, c)))
            throw std::invalid_argument("operation is not associative");
    return;
  }
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, n - 1);
  for (int i = 0; i < 2048; ++i) {
    Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (s.apply(s.apply(a, b), c) != s.apply(a, s.apply(b, c)))
      throw std::invalid_argument("operation is not associative");
  }
}

void check_identity(const FiniteGroup::State& s) {
  if (s.identity < 0 || s.identity >= s.order)
    throw std::invalid_argument("identity index out of range");
  for (Element x = 0; x < s.order; ++x)
    if (s.apply(s.identity, x) != x || s.apply(x, s.identity) != x)
      throw std::invalid_argument("claimed identity is not two-sided");
}

void materialize_inverses(FiniteGroup::State& s) {
  if (s.table.empty() && s.inverse_fn) {
    // Deferred group keeps the callback; spot-check it on a fixed sample.
    std::mt19937 rng(0xd1ce);
    std::uniform_int_distribution<Element> pick(0, s.order - 1);
    for (int i = 0; i < 256; ++i) {
      Element x = i < 8 ? std::min(i, s.order - 1) : pick(rng);
      Element y = s.inverse_fn(x);
      if (y < 0 || y >= s.order || s.apply(x, y) != s.identity ||
          s.apply(y, x) != s.identity)
        throw std::invalid_argument("element without a two-sided inverse");
    }
    return;
  }
  s.inverse.assign(s.order, -1);
  if (s.inverse_fn) {
    for (Element x = 0; x < s.order; ++x) s.inverse[x] = s.inverse_fn(x);
  } else {
    for (Element x = 0; x < s.order; ++x) {
      for (Element y = 0; y < s.order; ++y) {
        if (s.apply(x, y) == s.identity) {
          s.inverse[x] = y;
          break;
        }
      }
    }
  }
  for (Element x = 0; x < s.order; ++x) {
    Element y = s.inverse[x];
    if (y < 0 || y >= s.order || s.apply(x, y) != s.identity ||
        s.apply(y, x) != s.identity)
      throw std::invalid_argument("element without a two-sided inverse");
  }
}

void validate(FiniteGroup::State& s) {
  if (s.order <= 0) throw std::invalid_argument("group order must be positive");
  check_names(s);
  if (!s.table.empty()) {
    if (s.table.size() != static_cast<std::size_t>(s.order) * s.order)
      throw std::invalid_argument("multiplication table has wrong size");
    for (std::uint16_t v : s.table)
      if (v >= s.order) throw std::invalid_argument("table entry out of range");
  }
  if (s.identity < 0) s.identity = scan_identity(s);
  check_identity(s);
  materialize_inverses(s);
  check_associativity(s);
}

bool all_single_char(const std::vector<std::string>& names) {
  return std::all_of(names.begin(), names.end(),
                     [](const std::string& n) { return n.size() == 1; });
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FiniteGroup::FiniteGroup(std::shared_ptr<const State> state) : state_(std::move(state)) {}

FiniteGroup FiniteGroup::from_table(int order, std::vector<std::uint16_t> table,
                                    std::vector<std::string> names,
                                    std::string spec, Element identity) {
  auto s = std::make_shared<State>();
  s->order = order;
  s->identity = identity;
  s->table = std::move(table);
  s->names = std::move(names);
  s->spec = std::move(spec);
  validate(*s);
  return FiniteGroup(std::move(s));
}

FiniteGroup FiniteGroup::from_op(int order,
                                 std::function<Element(Element, Element)> op,
                                 std::function<Element(Element)> inverse,
                                 Element identity, std::vector<std::string> names,
                                 std::string spec) {
  auto s = std::make_shared<State>();
  s->order = order;
  s->identity = identity;
  s->names = std::move(names);
  s->spec = std::move(spec);
  if (order > 0 && order <= kTableThreshold) {
    s->table.resize(static_cast<std::size_t>(order) * order);
    for (Element a = 0; a < order; ++a)
      for (Element b = 0; b < order; ++b) {
        Element v = op(a, b);
        if (v < 0 || v >= order)
          throw std::invalid_argument("operation result out of range");
        s->table[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint16_t>(v);
      }
  } else {
    s->op_fn = std::move(op);
    s->inverse_fn = std::move(inverse);
  }
  if (!s->table.empty() && inverse) s->inverse_fn = std::move(inverse);
  validate(*s);
  return FiniteGroup(std::move(s));
}

int FiniteGroup::order() const noexcept { return state_->order; }

Element FiniteGroup::op(Element a, Element b) const {
  assert(a >= 0 && a < state_->order && b >= 0 && b < state_->order);
  return state_->apply(a, b);
}

Element FiniteGroup::identity() const noexcept { return state_->identity; }

Element FiniteGroup::inverse(Element a) const {
  assert(a >= 0 && a < state_->order);
  if (!state_->inverse.empty()) return state_->inverse[a];
  return state_->inverse_fn(a);
}

const std::string& FiniteGroup::name(Element a) const {
  if (a < 0 || a >= state_->order)
    throw std::out_of_range("element index out of range");
  return state_->names[a];
}

const std::vector<std::string>& FiniteGroup::names() const noexcept {
  return state_->names;
}

Element FiniteGroup::element(std::string_view name) const {
  auto found = find_element(name);
  if (!found)
    throw std::invalid_argument("no element named '" + std::string(name) + "'");
  return *found;
}

std::optional<Element> FiniteGroup::find_element(std::string_view name) const noexcept {
  auto it = state_->by_name.find(std::string(name));
  if (it == state_->by_name.end()) return std::nullopt;
  return it->second;
}

const std::string& FiniteGroup::spec() const noexcept { return state_->spec; }

bool FiniteGroup::has_table() const noexcept { return !state_->table.empty(); }

bool FiniteGroup::same_as(const FiniteGroup& other) const noexcept {
  return state_ == other.state_;
}

// ---------------------------------------------------------------------------
// SubgroupHandle / RepList
// ---------------------------------------------------------------------------

SubgroupHandle::SubgroupHandle(FiniteGroup parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {}

SubgroupHandle SubgroupHandle::create(FiniteGroup parent, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty())
    throw std::invalid_argument("subgroup must be nonempty");
  if (elements.front() < 0 || elements.back() >= parent.order())
    throw std::invalid_argument("subgroup element out of range");
  auto member = [&](Element x) {
    return std::binary_search(elements.begin(), elements.end(), x);
  };
  if (!member(parent.identity()))
    throw std::invalid_argument("subgroup does not contain the identity");
  for (Element x : elements) {
    if (!member(parent.inverse(x)))
      throw std::invalid_argument("subgroup not closed under inverses");
    for (Element y : elements)
      if (!member(parent.op(x, y)))
        throw std::invalid_argument("subgroup not closed under the operation");
  }
  // Lagrange: |G| must be a multiple of |H| once closure holds.
  assert(parent.order() % static_cast<int>(elements.size()) == 0);
  return SubgroupHandle(std::move(parent), std::move(elements));
}

bool SubgroupHandle::contains(Element x) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

RepList::RepList(FiniteGroup parent, SubgroupHandle subgroup,
                 std::vector<Element> reps, CosetSide side)
    : parent_(std::move(parent)),
      subgroup_(std::move(subgroup)),
      reps_(std::move(reps)),
      side_(side) {}

RepList RepList::create(FiniteGroup parent, SubgroupHandle subgroup,
                        std::vector<Element> reps, CosetSide side) {
  if (!parent.same_as(subgroup.parent()))
    throw std::invalid_argument("subgroup belongs to a different group");
  const int index = parent.order() / subgroup.size();
  if (static_cast<int>(reps.size()) != index)
    throw std::invalid_argument("representative count does not match subgroup index");
  // Identify each coset by its minimal member and require the reps to hit
  // every coset exactly once.
  std::vector<char> seen(parent.order(), 0);
  for (Element r : reps) {
    if (r < 0 || r >= parent.order())
      throw std::invalid_argument("representative out of range");
    Element key = parent.order();
    for (Element h : subgroup.elements()) {
      Element x = side == CosetSide::kLeft ? parent.op(r, h) : parent.op(h, r);
      key = std::min(key, x);
    }
    if (seen[key])
      throw std::invalid_argument("two representatives share a coset");
    seen[key] = 1;
  }
  return RepList(std::move(parent), std::move(subgroup), std::move(reps), side);
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

FiniteGroup make_cyclic(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic group order must be >= 1");
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  return FiniteGroup::from_op(
      n, [n](Element a, Element b) { return (a + b) % n; },
      [n](Element a) { return (n - a) % n; }, 0, std::move(names), "C" + std::to_string(n));
}

namespace {

std::string compose_spec(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.spec().empty() || b.spec().empty()) return "";
  // Products associate to the left, so only a product on the right needs
  // parentheses to round-trip through the spec grammar.
  bool b_is_product = b.spec().find(" x ") != std::string::npos;
  return a.spec() + " x " + (b_is_product ? "(" + b.spec() + ")" : b.spec());
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  const long long order = static_cast<long long>(na) * nb;
  if (order > std::numeric_limits<Element>::max() / 2)
    throw std::invalid_argument("direct product too large");
  const bool juxtapose = all_single_char(a.names()) && all_single_char(b.names());
  std::vector<std::string> names;
  names.reserve(order);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      names.push_back(juxtapose ? a.names()[i] + b.names()[j]
                                : "(" + a.names()[i] + "," + b.names()[j] + ")");
  FiniteGroup fa = a, fb = b;  // shared-state copies kept alive by the closures
  return FiniteGroup::from_op(
      static_cast<int>(order),
      [fa, fb, nb](Element x, Element y) {
        return fa.op(x / nb, y / nb) * nb + fb.op(x % nb, y % nb);
      },
      [fa, fb, nb](Element x) {
        return fa.inverse(x / nb) * nb + fb.inverse(x % nb);
      },
      a.identity() * nb + b.identity(), std::move(names), compose_spec(a, b));
}

FiniteGroup make_symmetric(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("symmetric group supported for 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::unordered_map<std::string, Element> index;
  std::vector<std::string> names;
  names.reserve(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    std::string word;
    for (int v : perms[i]) word += static_cast<char>('1' + v);
    index.emplace(word, static_cast<Element>(i));
    names.push_back(std::move(word));
  }

  const int order = static_cast<int>(perms.size());
  std::vector<std::uint16_t> table(static_cast<std::size_t>(order) * order);
  std::string key(n, '1');
  for (Element x = 0; x < order; ++x) {
    for (Element y = 0; y < order; ++y) {
      // op(p,q) applies q first, then p: (p*q)(i) = p[q[i]].
      for (int i = 0; i < n; ++i)
        key[i] = static_cast<char>('1' + perms[x][perms[y][i]]);
      table[static_cast<std::size_t>(x) * order + y] =
          static_cast<std::uint16_t>(index.at(key));
    }
  }
  return FiniteGroup::from_table(order, std::move(table), std::move(names),
                                 "S" + std::to_string(n), 0);
}

namespace {

std::string tuple_name(std::initializer_list<int> parts, bool juxtapose) {
  std::string out;
  if (juxtapose) {
    for (int v : parts) out += std::to_string(v);
    return out;
  }
  out = "(";
  bool first = true;
  for (int v : parts) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + ")";
}

}  // namespace

FiniteGroup make_heisenberg(int p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("Heisenberg construction needs an odd prime");
  const int pp = p * p, order = p * p * p;
  std::vector<std::string> names;
  names.reserve(order);
  const bool juxt = p <= 10;  // components stay single digits
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      for (int z = 0; z < p; ++z) names.push_back(tuple_name({x, y, z}, juxt));
  auto op = [p, pp](Element u, Element v) {
    int x1 = u / pp, y1 = (u / p) % p, z1 = u % p;
    int x2 = v / pp, y2 = (v / p) % p, z2 = v % p;
    return ((x1 + x2) % p) * pp + ((y1 + y2) % p) * p + (z1 + z2 + x1 * y2) % p;
  };
  auto inv = [p, pp](Element u) {
    int x = u / pp, y = (u / p) % p, z = u % p;
    return ((p - x) % p) * pp + ((p - y) % p) * p + ((p - z) % p + x * y) % p;
  };
  FiniteGroup g = FiniteGroup::from_op(order, op, inv, 0, std::move(names),
                                       "Heis(" + std::to_string(p) + ")");
  // The presentation promises a^p = b^p = c^p = 1, ab = bac, ac = ca, bc = cb
  // with a = (1,0,0), b = (0,1,0), c = (0,0,1); verify rather than trust.
  const Element a = pp, b = p, c = 1, e = 0;
  if (power(g, a, p) != e || power(g, b, p) != e || power(g, c, p) != e ||
      g.op(a, b) != g.op(g.op(b, a), c) || g.op(a, c) != g.op(c, a) ||
      g.op(b, c) != g.op(c, b))
    throw std::logic_error("Heisenberg realization violates its presentation");
  return g;
}

FiniteGroup make_modular_extraspecial(int p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("modular extraspecial construction needs an odd prime");
  const int pp = p * p, order = p * p * p;
  // (1+p)^j mod p^2 for j in [0, p); (1+p)^p = 1 mod p^2 keeps the action
  // well defined on exponents mod p.
  std::vector<int> pow1p(p, 1);
  for (int j = 1; j < p; ++j) pow1p[j] = pow1p[j - 1] * (1 + p) % pp;
  std::vector<std::string> names;
  names.reserve(order);
  const bool juxt = pp <= 10;  // only p = 3 keeps the first slot one digit
  for (int i = 0; i < pp; ++i)
    for (int j = 0; j < p; ++j) names.push_back(tuple_name({i, j}, juxt));
  auto op = [p, pp, pow1p](Element u, Element v) {
    int i1 = u / p, j1 = u % p;
    int i2 = v / p, j2 = v % p;
    return (i1 * pow1p[j2] + i2) % pp * p + (j1 + j2) % p;
  };
  auto inv = [p, pp, pow1p](Element u) {
    int i = u / p, j = u % p;
    int jinv = (p - j) % p;
    return (pp - i * pow1p[jinv] % pp) % pp * p + jinv;
  };
  FiniteGroup g = FiniteGroup::from_op(order, op, inv, 0, std::move(names),
                                       "M(" + std::to_string(p) + ")");
  // Presentation: a^{p^2} = b^p = 1, ab = ba^{1+p}, with a = (1,0), b = (0,1).
  const Element a = p, b = 1, e = 0;
  if (power(g, a, pp) != e || power(g, a, p) == e || power(g, b, p) != e ||
      g.op(a, b) != g.op(b, power(g, a, 1 + p)))
    throw std::logic_error("modular extraspecial realization violates its presentation");
  return g;
}

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

Element power(const FiniteGroup& g, Element x, long long k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  Element acc = g.identity(), base = x;
  while (k > 0) {
    if (k & 1) acc = g.op(acc, base);
    base = g.op(base, base);
    k >>= 1;
  }
  return acc;
}

int element_order(const FiniteGroup& g, Element x) {
  Element y = x;
  int n = 1;
  while (y != g.identity()) {
    y = g.op(y, x);
    ++n;
  }
  return n;
}

int exponent(const FiniteGroup& g) {
  long long exp = 1;
  for (Element x = 0; x < g.order(); ++x)
    exp = std::lcm(exp, static_cast<long long>(element_order(g, x)));
  return static_cast<int>(exp);
}

bool is_abelian(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a + 1; b < g.order(); ++b)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

SubgroupHandle center(const FiniteGroup& g) {
  std::vector<Element> members;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y)
      central = g.op(x, y) == g.op(y, x);
    if (central) members.push_back(x);
  }
  return SubgroupHandle::create(g, std::move(members));
}

SubgroupHandle subgroup_generated(const FiniteGroup& g, std::span<const Element> gens) {
  if (gens.empty())
    throw std::invalid_argument("generator list must be nonempty");
  for (Element x : gens)
    if (x < 0 || x >= g.order())
      throw std::invalid_argument("generator out of range");
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = 1;
  // Finite closure under the operation also yields inverses.
  for (std::size_t next = 0; next < members.size(); ++next) {
    Element x = members[next];
    for (Element s : gens) {
      for (Element y : {g.op(x, s), g.op(s, x)}) {
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return SubgroupHandle::create(g, std::move(members));
}

RepList coset_reps(const FiniteGroup& g, const SubgroupHandle& n, CosetSide side) {
  std::vector<char> covered(g.order(), 0);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    // x is minimal in its coset: everything smaller is already covered.
    reps.push_back(x);
    for (Element h : n.elements()) {
      Element y = side == CosetSide::kLeft ? g.op(x, h) : g.op(h, x);
      covered[y] = 1;
    }
  }
  return RepList::create(g, n, std::move(reps), side);
}

Element product_of(const FiniteGroup& g, std::span<const Element> xs) {
  Element acc = g.identity();
  for (Element x : xs) acc = g.op(acc, x);
  return acc;
}

namespace {

void require_abelian(const FiniteGroup& g, const char* what) {
  if (!is_abelian(g))
    throw std::invalid_argument(std::string(what) + " is defined here for abelian groups only");
}

}  // namespace

bool product_of_all_trivial(const FiniteGroup& a) {
  require_abelian(a, "product_of_all_trivial");
  Element acc = a.identity();
  for (Element x = 0; x < a.order(); ++x) acc = a.op(acc, x);
  return acc == a.identity();
}

int involution_count(const FiniteGroup& a) {
  require_abelian(a, "involution_count");
  int count = 0;
  for (Element x = 0; x < a.order(); ++x)
    if (x != a.identity() && a.op(x, x) == a.identity()) ++count;
  return count;
}

}  // namespace mcs
