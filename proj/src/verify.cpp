#include "cgt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>

namespace cgt {

namespace {

constexpr long long kSaturated = std::numeric_limits<long long>::max() / 4;

// base^exp saturated well below overflow; every observed quantity is at most
// the group order, so a saturated bound always dominates.
long long sat_pow(long long base, long long exp) {
  if (base <= 1) return base == 1 || exp == 0 ? 1 : 0;
  long long acc = 1;
  for (long long i = 0; i < exp; ++i) {
    if (acc > kSaturated / base) return kSaturated;
    acc *= base;
  }
  return acc;
}

std::string pow_str(long long value) {
  return value >= kSaturated ? std::string("(saturated)") : std::to_string(value);
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

int orbit_size_under(const FiniteGroup& g, int x, const std::vector<int>& set) {
  std::vector<std::uint8_t> seen(g.order(), 0);
  int count = 0;
  for (int s : set) {
    int y = g.conj(x, s);
    if (!seen[y]) {
      seen[y] = 1;
      ++count;
    }
  }
  return count;
}

}  // namespace

// ---------------------------------------------------------------------------
// Core constructions
// ---------------------------------------------------------------------------

FcProfile fc_profile(const FiniteGroup& group, const Word& w, const ValueSet& values) {
  if (values.group != &group) throw ParentMismatchError("value set belongs to a different group");
  if (!values.exact) throw InvalidArgumentError("conjugacy profile needs an exact value set");
  FcProfile out;
  out.group = group.name();
  out.word = w.str();
  out.orbit_sizes.resize(group.order());
  for (int x = 0; x < group.order(); ++x) {
    out.orbit_sizes[x] = orbit_size_under(group, x, values.values);
    out.max_orbit = std::max(out.max_orbit, out.orbit_sizes[x]);
  }
  return out;
}

Decomposition decompose_commutator_value(const FiniteGroup& group, const Word& w,
                                         std::span<const int> tuple, int m) {
  if (m < 1)
    throw InvalidArgumentError("decomposition needs m >= 1; with m = 0 the value is a w-value");
  const int n = w.arity();
  if (static_cast<int>(tuple.size()) != n + m)
    throw InvalidArgumentError("tuple length must be arity + m = " + std::to_string(n + m));
  for (int id : tuple)
    if (id < 0 || id >= group.order()) throw InvalidArgumentError("tuple element id out of range");

  const int base_value = w.evaluate_ids(group, tuple.subspan(0, n));
  std::vector<int> base_witness(tuple.begin(), tuple.begin() + n);

  // m = 1: [u, g] = u^-1 u^g with u^g = w(witness^g).
  auto conj_witness = [&](const std::vector<int>& witness, int g) {
    std::vector<int> out(witness.size());
    for (std::size_t i = 0; i < witness.size(); ++i) out[i] = group.conj(witness[i], g);
    return out;
  };

  int conjugator = tuple[n];
  std::vector<DecompositionFactor> factors;
  factors.push_back({group.inv(base_value), base_witness, -1});
  factors.push_back({group.conj(base_value, conjugator), conj_witness(base_witness, conjugator), +1});

  // Inductive step: (w_1..w_k) -> (w_k^-1,..,w_1^-1, w_1^g,..,w_k^g).
  for (int level = 2; level <= m; ++level) {
    int g = tuple[n + level - 1];
    std::vector<DecompositionFactor> next;
    next.reserve(2 * factors.size());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      next.push_back({group.inv(it->element), it->witness, -it->sign});
    for (const auto& f : factors)
      next.push_back({group.conj(f.element, g), conj_witness(f.witness, g), f.sign});
    factors = std::move(next);
  }

  Decomposition out;
  out.m = m;
  int target = base_value;
  for (int level = 1; level <= m; ++level) target = group.comm(target, tuple[n + level - 1]);
  out.target = target;
  out.factors = std::move(factors);
  return out;
}

bool verify_decomposition(const FiniteGroup& group, const Word& w, const Decomposition& d) {
  if (d.m < 1 || d.m > 62) return false;
  if (d.factors.size() > (1ull << d.m)) return false;
  int product = group.identity_id();
  for (const auto& f : d.factors) {
    int value = w.evaluate_ids(group, f.witness);
    int expected = f.sign > 0 ? value : group.inv(value);
    if (expected != f.element) return false;
    product = group.mul(product, f.element);
  }
  return product == d.target;
}

int central_exponent(const FiniteGroup& group, int x, std::span<const int> basis_ids) {
  std::vector<int> gens(basis_ids.begin(), basis_ids.end());
  gens.insert(gens.begin(), x);
  Subgroup h = subgroup_closure(group, gens);
  std::vector<int> z = subgroup_center_ids(group, h.elements());
  std::vector<std::uint8_t> in_z(group.order(), 0);
  for (int id : z) in_z[id] = 1;

  long long e = 1;
  for (int b : basis_ids) {
    int acc = b;
    long long eb = 1;
    while (!in_z[acc]) {
      acc = group.mul(acc, b);
      ++eb;
    }
    e = std::lcm(e, eb);
  }
  return static_cast<int>(e);
}

ConjugatorBasis conjugator_basis(const FiniteGroup& group, int x, const ValueSet& starred) {
  if (starred.group != &group) throw ParentMismatchError("value set belongs to a different group");
  if (!starred.starred || !starred.exact)
    throw InvalidArgumentError("conjugator basis needs an exact starred value set");
  ConjugatorBasis out;
  std::vector<std::uint8_t> seen(group.order(), 0);
  for (int b : starred.values) {
    int y = group.conj(x, b);
    if (!seen[y]) {
      seen[y] = 1;
      out.basis.push_back(b);
      out.conjugates.push_back(y);
    }
  }
  return out;
}

std::optional<std::vector<int>> find_sorted_exponents(const FiniteGroup& group, int x,
                                                      std::span<const int> basis, int e,
                                                      int target) {
  if (e < 1) throw InvalidArgumentError("central exponent must be positive");
  const int r = static_cast<int>(basis.size());
  if (r == 0) return x == target ? std::optional<std::vector<int>>({}) : std::nullopt;

  // Odometer over (e_r, ..., e_1) starting from all zeros with e_1 moving
  // fastest; chain[i] caches x conjugated by b_r^{e_r} ... b_{i+1}^{e_{i+1}}.
  std::vector<int> exps(r, 0);
  std::vector<int> chain(r + 1, x);
  for (;;) {
    if (chain[0] == target) return exps;
    int pos = 0;
    while (pos < r && exps[pos] == e - 1) ++pos;
    if (pos == r) return std::nullopt;
    ++exps[pos];
    chain[pos] = group.conj(chain[pos], basis[pos]);
    for (int j = pos - 1; j >= 0; --j) {
      exps[j] = 0;
      chain[j] = chain[j + 1];
    }
  }
}

std::optional<SortedConjugatorForm> sorted_conjugator_form(const FiniteGroup& group,
                                                           const ValueSet& starred_v, int x,
                                                           std::span<const int> y_factors) {
  for (int f : y_factors)
    if (!starred_v.contains(f))
      throw InvalidArgumentError("factor " + std::to_string(f) +
                                 " is not in the starred value set");
  int y = group.identity_id();
  for (int f : y_factors) y = group.mul(y, f);

  ConjugatorBasis basis = conjugator_basis(group, x, starred_v);
  int e = central_exponent(group, x, basis.basis);
  auto exps = find_sorted_exponents(group, x, basis.basis, e, group.conj(x, y));
  if (!exps) return std::nullopt;
  SortedConjugatorForm out;
  out.basis = std::move(basis.basis);
  out.exponents = std::move(*exps);
  out.exponent_bound = e;
  return out;
}

WreathOrbit wreath_orbit(const FiniteGroup& wreath_group, int a, int m) {
  const WreathInfo* info = wreath_group.wreath();
  if (!info) throw InvalidArgumentError("group was not built as a wreath product");
  if (m < 0) throw InvalidArgumentError("m must be non-negative");
  int ea, ea2, eps;
  info->decode(wreath_group.identity_id(), ea, ea2, eps);
  if (a < 0 || a >= info->base_order) throw InvalidArgumentError("base element id out of range");

  const int y = info->encode(a, ea, 0);  // ((a, 1), 0)
  const int b = info->swap_id;
  const int t = wreath_group.element_order(y);
  if (t % 2 == 0)
    throw InvalidArgumentError("base element must have odd order, got " + std::to_string(t));

  std::vector<std::uint8_t> seen(wreath_group.order(), 0);
  int size = 0;
  for (int k = 0; k < t; ++k) {
    int c = wreath_group.pow(y, k);
    for (int i = 0; i < m; ++i) c = wreath_group.comm(c, b);
    int image = wreath_group.conj(b, c);
    if (!seen[image]) {
      seen[image] = 1;
      ++size;
    }
  }

  const long long shift = (m % 2 == 0 ? 1 : -1) * (1ll << m);
  int p = wreath_group.pow(y, shift);
  int z = wreath_group.mul(p, wreath_group.conj(wreath_group.inv(p), b));
  return {size, wreath_group.element_order(z)};
}

bool iterated_commutator_identity(const FiniteGroup& group, int y, int b, int m) {
  if (m < 0 || m > 60) throw InvalidArgumentError("m out of range");
  const int e = group.identity_id();
  if (group.mul(b, b) != e)
    throw InapplicableError("inapplicable: b^2 != 1 for b = " + group.label(b));
  if (group.comm(y, group.conj(y, b)) != e)
    throw InapplicableError("inapplicable: [y, y^b] != 1 for y = " + group.label(y) +
                            ", b = " + group.label(b));

  int lhs = y;
  for (int i = 0; i <= m; ++i) lhs = group.comm(lhs, b);

  const long long shift = (m % 2 == 0 ? 1 : -1) * (1ll << m);
  int p = group.pow(y, shift);
  int rhs = group.mul(group.conj(p, b), group.inv(p));
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Session
// ---------------------------------------------------------------------------

VerifySession::VerifySession(GroupPtr group, std::string group_name, EnumerationBudget budget)
    : group_(std::move(group)), name_(std::move(group_name)), budget_(std::move(budget)) {}

const ValueSet& VerifySession::values(const Word& w) {
  std::string key = w.free_reduced().str();
  auto it = values_.find(key);
  if (it == values_.end()) {
    EnumerationBudget exact = budget_;
    exact.sample.reset();  // cached sets are always exact
    it = values_.emplace(key, w_values(*group_, w, exact)).first;
  }
  return it->second;
}

const ValueSet& VerifySession::starred_values(const Word& w) {
  std::string key = w.free_reduced().str();
  auto it = starred_.find(key);
  if (it == starred_.end()) it = starred_.emplace(key, star(values(w))).first;
  return it->second;
}

const Subgroup& VerifySession::verbal(const Word& w) {
  std::string key = w.free_reduced().str();
  auto it = verbal_.find(key);
  if (it == verbal_.end()) it = verbal_.emplace(key, verbal_subgroup(*group_, values(w))).first;
  return it->second;
}

int VerifySession::width(const Word& w) {
  std::string key = w.free_reduced().str();
  auto it = width_.find(key);
  if (it == width_.end())
    it = width_.emplace(key, width_decomposition(*group_, starred_values(w)).width).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

VerificationReport check_group_axioms(const FiniteGroup& group, const std::string& name,
                                      std::uint64_t seed) {
  VerificationReport rep;
  rep.check = "axioms";
  rep.group = name;
  const int n = group.order();
  long long violations = 0;
  long long triples = 0;

  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          ++triples;
          if (group.mul(group.mul(a, b), c) != group.mul(a, group.mul(b, c))) ++violations;
        }
    // inverse uniqueness
    for (int a = 0; a < n; ++a) {
      int count = 0;
      for (int b = 0; b < n; ++b)
        if (group.mul(a, b) == group.identity_id() && group.mul(b, a) == group.identity_id())
          ++count;
      if (count != 1) ++violations;
    }
  } else {
    std::mt19937_64 rng(mix_seed(seed, name));
    for (int i = 0; i < 10'000; ++i) {
      ++triples;
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n),
          c = static_cast<int>(rng() % n);
      if (group.mul(group.mul(a, b), c) != group.mul(a, group.mul(b, c))) ++violations;
    }
  }
  const int e = group.identity_id();
  for (int g = 0; g < n; ++g) {
    if (group.mul(e, g) != g || group.mul(g, e) != g) ++violations;
    if (group.mul(g, group.inv(g)) != e || group.mul(group.inv(g), g) != e) ++violations;
  }
  rep.set("order", n);
  rep.set("triples", triples);
  rep.bound = "0 violations of associativity, identity and inverse axioms";
  rep.observed = violations;
  rep.pass = violations == 0;
  return rep;
}

VerificationReport check_decomposition(VerifySession& s, const Word& w, int m, int tuples,
                                       std::uint64_t seed) {
  const FiniteGroup& g = s.group();
  VerificationReport rep;
  rep.check = "decomposition";
  rep.group = s.group_name();
  rep.word = w.str();
  rep.m = m;

  std::mt19937_64 rng(mix_seed(seed, "decomposition/" + rep.group + "/" + rep.word + "/" +
                                         std::to_string(m)));
  const int n = w.arity();
  long long failures = 0;
  long long worst_len = 0;
  std::vector<int> tuple(static_cast<std::size_t>(n + m));
  // The all-identity tuple first (its v-value is trivial), then random ones.
  for (int i = 0; i <= tuples; ++i) {
    if (i == 0) {
      std::fill(tuple.begin(), tuple.end(), g.identity_id());
    } else {
      for (int& id : tuple) id = static_cast<int>(rng() % g.order());
    }
    Decomposition d = decompose_commutator_value(g, w, tuple, m);
    worst_len = std::max<long long>(worst_len, static_cast<long long>(d.factors.size()));
    if (!verify_decomposition(g, w, d)) {
      ++failures;
      if (!rep.witness) {
        nlohmann::ordered_json witness;
        witness["tuple"] = tuple;
        rep.witness = witness;
      }
    }
  }
  rep.set("tuples", tuples + 1);
  rep.set("max_len", 1ll << m);
  rep.set("worst_len", worst_len);
  rep.bound = "every decomposition has length <= 2^m, verified witnesses and exact product";
  rep.observed = failures;
  rep.pass = failures == 0 && worst_len <= (1ll << m);
  return rep;
}

VerificationReport check_conjugacy_bound(VerifySession& s, const Word& w, int m) {
  const FiniteGroup& g = s.group();
  VerificationReport rep;
  rep.check = "conjugacy-bound";
  rep.group = s.group_name();
  rep.word = w.str();
  rep.m = m;

  const Word v = w.append_commutator_variables(m);
  const ValueSet& wstar = s.starred_values(w);
  const ValueSet& vvals = s.values(v);

  long long violations = 0;
  long long s_max = 0;
  long long orbit_max = 0;
  for (int x = 0; x < g.order(); ++x) {
    long long sx = orbit_size_under(g, x, wstar.values);
    long long ox = orbit_size_under(g, x, vvals.values);
    s_max = std::max(s_max, sx);
    orbit_max = std::max(orbit_max, ox);
    if (ox > sat_pow(sx, 1ll << m)) {
      ++violations;
      if (!rep.witness) {
        nlohmann::ordered_json witness;
        witness["x"] = x;
        witness["s"] = sx;
        witness["orbit_v"] = ox;
        rep.witness = witness;
      }
    }
  }
  rep.set("s_max", s_max);
  rep.set("v_orbit_max", orbit_max);
  rep.bound = "|x^{G_v}| <= |x^{G_w*}|^(2^m) for every x";
  rep.observed = violations;
  rep.pass = violations == 0;
  return rep;
}

VerificationReport check_central_exponent(VerifySession& s, const Word& w, int m) {
  const FiniteGroup& g = s.group();
  VerificationReport rep;
  rep.check = "central-exponent";
  rep.group = s.group_name();
  rep.word = w.str();
  rep.m = m;

  const Word v = w.append_commutator_variables(m);
  const ValueSet& vstar = s.starred_values(v);

  long long violations = 0;
  long long e_max = 0;
  long long r_max = 0;
  for (int x = 0; x < g.order(); ++x) {
    ConjugatorBasis basis = conjugator_basis(g, x, vstar);
    int e = central_exponent(g, x, basis.basis);
    e_max = std::max<long long>(e_max, e);
    r_max = std::max<long long>(r_max, static_cast<long long>(basis.basis.size()));

    std::vector<int> gens = basis.basis;
    gens.insert(gens.begin(), x);
    Subgroup h = subgroup_closure(g, gens);
    std::vector<int> z = subgroup_center_ids(g, h.elements());
    std::vector<std::uint8_t> in_z(g.order(), 0);
    for (int id : z) in_z[id] = 1;

    bool all_central = true;
    for (int b : basis.basis)
      if (!in_z[g.pow(b, e)]) all_central = false;
    bool minimal = true;
    if (e > 1) {
      minimal = false;
      for (int b : basis.basis)
        if (!in_z[g.pow(b, e - 1)]) minimal = true;  // e-1 must fail somewhere
    }
    if (!all_central || !minimal) {
      ++violations;
      if (!rep.witness) {
        nlohmann::ordered_json witness;
        witness["x"] = x;
        witness["e"] = e;
        rep.witness = witness;
      }
    }
  }
  rep.set("e_max", e_max);
  rep.set("r_max", r_max);
  rep.bound = "b^e central in <x,B> for every b, with e minimal";
  rep.observed = violations;
  rep.pass = violations == 0;
  return rep;
}

VerificationReport check_fc_embedding(VerifySession& s, const Word& w, int m, int y_sample) {
  const FiniteGroup& g = s.group();
  VerificationReport rep;
  rep.check = "fc-embedding";
  rep.group = s.group_name();
  rep.word = w.str();
  rep.m = m;

  const Word v = w.append_commutator_variables(m);
  const ValueSet& vstar = s.starred_values(v);
  const Subgroup& vg = s.verbal(v);

  // Pick the y battery: every element of v(G), or a seeded sample.
  std::vector<int> ys = vg.elements();
  if (static_cast<int>(ys.size()) > y_sample) {
    std::mt19937_64 rng(mix_seed(s.budget().seed, "fc-embedding/" + rep.group + "/" + rep.word +
                                                      "/" + std::to_string(m)));
    std::vector<int> sample;
    sample.reserve(y_sample);
    for (int i = 0; i < y_sample; ++i) sample.push_back(ys[rng() % ys.size()]);
    ys = std::move(sample);
  }

  long long failures = 0;
  long long e_max = 0;
  long long r_max = 0;
  long long orbit_max = 0;
  long long searches = 0;
  for (int x = 0; x < g.order(); ++x) {
    ConjugatorBasis basis = conjugator_basis(g, x, vstar);
    const int e = central_exponent(g, x, basis.basis);
    const long long r = static_cast<long long>(basis.basis.size());
    e_max = std::max<long long>(e_max, e);
    r_max = std::max(r_max, r);

    for (int y : ys) {
      ++searches;
      auto exps = find_sorted_exponents(g, x, basis.basis, e, g.conj(x, y));
      if (!exps) {
        ++failures;
        if (!rep.witness) {
          nlohmann::ordered_json witness;
          witness["x"] = x;
          witness["y"] = y;
          witness["e"] = e;
          witness["r"] = r;
          rep.witness = witness;
        }
      }
    }

    long long orbit = orbit_size_under(g, x, vg.elements());
    orbit_max = std::max(orbit_max, orbit);
    bool ok = e == 1 ? orbit == 1 : orbit < sat_pow(e, r);
    if (!ok) {
      ++failures;
      if (!rep.witness) {
        nlohmann::ordered_json witness;
        witness["x"] = x;
        witness["orbit"] = orbit;
        witness["e"] = e;
        witness["r"] = r;
        rep.witness = witness;
      }
    }
  }
  rep.set("r_max", r_max);
  rep.set("e_max", e_max);
  rep.set("searches", searches);
  rep.set("orbit_max", orbit_max);
  rep.bound = "sorted exponent vector exists for every (x, y); |x^{v(G)}| < e^r (= 1 when e = 1)";
  rep.observed = failures;
  rep.pass = failures == 0;
  return rep;
}

VerificationReport check_bfc_embedding(VerifySession& s, const Word& w, int m) {
  const FiniteGroup& g = s.group();
  VerificationReport rep;
  rep.check = "bfc-embedding";
  rep.group = s.group_name();
  rep.word = w.str();
  rep.m = m;

  const Word v = w.append_commutator_variables(m);
  const ValueSet& wvals = s.values(w);
  const ValueSet& vvals = s.values(v);
  const ValueSet& vstar = s.starred_values(v);
  const Subgroup& vg = s.verbal(v);

  const long long r_fc = fc_profile(g, w, wvals).max_orbit;

  long long s_max = 0;   // max |x^{G_v}|
  long long e_max = 0;   // max central exponent
  long long r_max = 0;   // max conjugator basis size
  long long orbit_max = 0;
  for (int x = 0; x < g.order(); ++x) {
    s_max = std::max<long long>(s_max, orbit_size_under(g, x, vvals.values));
    ConjugatorBasis basis = conjugator_basis(g, x, vstar);
    e_max = std::max<long long>(e_max, central_exponent(g, x, basis.basis));
    r_max = std::max<long long>(r_max, static_cast<long long>(basis.basis.size()));
    orbit_max = std::max<long long>(orbit_max, orbit_size_under(g, x, vg.elements()));
  }

  rep.set("r", r_fc);
  rep.set("s_max", s_max);
  rep.set("e_max", e_max);
  rep.set("r_max", r_max);
  rep.observed = orbit_max;
  if (e_max == 1) {
    rep.bound = "all orbits under v(G) are singletons (e_max = 1)";
    rep.pass = orbit_max == 1;
  } else {
    long long bound = sat_pow(e_max, r_max);
    rep.bound = "max |x^{v(G)}| < e_max^r_max = " + pow_str(bound);
    rep.pass = orbit_max < bound;
  }
  return rep;
}

VerificationReport check_width_order_bound(VerifySession& s, const Word& w, int m) {
  VerificationReport rep;
  rep.check = "width-order-bound";
  rep.group = s.group_name();
  rep.word = w.str();
  rep.m = m;

  const Word v = w.append_commutator_variables(m);
  const long long r = static_cast<long long>(s.values(w).values.size());
  const long long gv = static_cast<long long>(s.values(v).values.size());
  const long long vg_order = s.verbal(v).order();
  const long long k = s.width(v);

  const long long ingredient = sat_pow(2 * r, 1ll << m);
  const long long full = sat_pow(2 * r, (1ll << m) * k);

  rep.set("r", r);
  rep.set("k", k);
  rep.set("gv", gv);
  rep.set("vg", vg_order);
  rep.bound = "|v(G)| <= (2r)^(2^m k) = " + pow_str(full) + " and |G_v| <= (2r)^(2^m) = " +
              pow_str(ingredient);
  rep.observed = vg_order;
  rep.pass = vg_order <= full && gv <= ingredient;
  if (!rep.pass) {
    nlohmann::ordered_json witness;
    witness["gv"] = gv;
    witness["vg"] = vg_order;
    rep.witness = witness;
  }
  return rep;
}

VerificationReport check_commutator_identity(const FiniteGroup& group, const std::string& name,
                                             int m_max) {
  VerificationReport rep;
  rep.check = "commutator-identity";
  rep.group = name;

  long long pairs = 0;
  long long mismatches = 0;
  const int e = group.identity_id();
  for (int b = 0; b < group.order(); ++b) {
    if (group.mul(b, b) != e) continue;
    for (int y = 0; y < group.order(); ++y) {
      if (group.comm(y, group.conj(y, b)) != e) continue;
      ++pairs;
      for (int m = 0; m <= m_max; ++m) {
        if (!iterated_commutator_identity(group, y, b, m)) {
          ++mismatches;
          if (!rep.witness) {
            nlohmann::ordered_json witness;
            witness["y"] = y;
            witness["b"] = b;
            witness["m"] = m;
            rep.witness = witness;
          }
        }
      }
    }
  }
  rep.set("pairs", pairs);
  rep.set("m_max", m_max);
  rep.bound = "closed form equals literal iteration for every applicable (y, b, m)";
  rep.observed = mismatches;
  rep.pass = mismatches == 0;
  return rep;
}

std::vector<VerificationReport> check_wreath_orbit_growth(std::span<const int> t_values,
                                                          std::span<const int> m_values,
                                                          const BuildOptions& opts) {
  std::vector<VerificationReport> out;
  for (int t : t_values) {
    if (t < 1 || t % 2 == 0)
      throw InvalidArgumentError("wreath orbit growth needs odd t >= 1, got " + std::to_string(t));
    GroupPtr base = cyclic_group(t, opts);
    GroupPtr wreath = wreath_c2(base, opts);
    const int a = t == 1 ? base->identity_id() : 1;  // the generator r
    for (int m : m_values) {
      WreathOrbit orbit = wreath_orbit(*wreath, a, m);
      VerificationReport rep;
      rep.check = "wreath-orbit";
      rep.group = wreath->name();
      rep.m = m;
      rep.set("t", t);
      rep.set("predicted", orbit.predicted);
      rep.bound = "orbit of the swap element under iterated-commutator conjugators has size t";
      rep.observed = orbit.orbit_size;
      rep.pass = orbit.orbit_size == t && orbit.predicted == t;
      out.push_back(std::move(rep));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------------

SuiteResult run_suite(const SuiteConfig& config, const SuiteProgress& progress) {
  SuiteResult result;
  auto emit = [&](VerificationReport rep) {
    if (!rep.pass) result.all_pass = false;
    if (progress) progress(rep);
    result.reports.push_back(std::move(rep));
  };

  for (const auto& spec : config.groups) {
    GroupPtr group = build_group(spec, config.build);
    VerifySession session(group, spec, config.budget);

    emit(check_group_axioms(*group, spec, config.budget.seed));
    if (group->order() <= 512) {
      emit(check_commutator_identity(*group, spec, config.identity_m_max));
    } else {
      result.skips.push_back({"commutator-identity", spec, "", 0,
                              "group order above the exhaustive pair limit 512"});
    }

    for (const auto& word_text : config.words) {
      Word w = Word::parse(word_text);
      for (int m : config.m_values) {
        if (m >= 1)
          emit(check_decomposition(session, w, m, config.decomposition_tuples,
                                   config.budget.seed));

        const Word v = w.append_commutator_variables(m);
        long long need = enumeration_tuples(*group, v, config.budget.max_tuples);
        if (need > config.budget.max_tuples) {
          std::string reason = "value enumeration needs " + std::to_string(group->order()) + "^" +
                               std::to_string(v.variables().size()) + " tuples, above max_tuples";
          for (const char* check : {"conjugacy-bound", "central-exponent", "fc-embedding",
                                    "bfc-embedding", "width-order-bound"})
            result.skips.push_back({check, spec, word_text, m, reason});
          continue;
        }
        emit(check_conjugacy_bound(session, w, m));
        emit(check_central_exponent(session, w, m));
        emit(check_fc_embedding(session, w, m, config.y_sample));
        emit(check_bfc_embedding(session, w, m));
        emit(check_width_order_bound(session, w, m));
      }
    }
  }

  for (auto& rep : check_wreath_orbit_growth(config.wreath_t, config.wreath_m, config.build))
    emit(std::move(rep));

  return result;
}

}  // namespace cgt
