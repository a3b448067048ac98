#include "cgt/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cgt {

namespace {

std::uint64_t hash_images(const std::vector<int>& images) {
  std::uint64_t h = 1469598103934665603ull;
  for (int v : images) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

bool is_permutation(const std::vector<int>& images, int degree) {
  if (static_cast<int>(images.size()) != degree) return false;
  std::vector<std::uint8_t> seen(degree, 0);
  for (int v : images) {
    if (v < 0 || v >= degree || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// (s*t)(i) = t(s(i))
std::vector<int> compose(const std::vector<int>& s, const std::vector<int>& t) {
  std::vector<int> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = t[s[i]];
  return out;
}

std::vector<int> invert_images(const std::vector<int>& s) {
  std::vector<int> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[s[i]] = static_cast<int>(i);
  return out;
}

}  // namespace

std::shared_ptr<FiniteGroup> FiniteGroup::from_cayley_table(
    std::string name, const std::vector<std::vector<int>>& table,
    std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw FileFormatError("group table is empty");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->order_ = n;
  g->backend_ = Backend::CayleyTable;
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw FileFormatError("group table is not square");
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n) throw FileFormatError("group table entry out of range");
      g->table_[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
  // Latin-square check: every row and column is a permutation of the ids.
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint8_t> row(n, 0), col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (row[g->table_[static_cast<std::size_t>(i) * n + j]]++)
        throw FileFormatError("group table row has repeated entries");
      if (col[g->table_[static_cast<std::size_t>(j) * n + i]]++)
        throw FileFormatError("group table column has repeated entries");
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw InvalidArgumentError("label list does not match group order");
  g->labels_ = std::move(labels);
  g->finish_table_init();
  return g;
}

void FiniteGroup::finish_table_init() {
  const int n = order_;
  identity_id_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = table_[static_cast<std::size_t>(e) * n + a] == a &&
           table_[static_cast<std::size_t>(a) * n + e] == a;
    if (ok) {
      identity_id_ = e;
      break;
    }
  }
  if (identity_id_ < 0) throw FileFormatError("group table has no identity element");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[static_cast<std::size_t>(a) * n + b] == identity_id_) {
        if (table_[static_cast<std::size_t>(b) * n + a] != identity_id_)
          throw FileFormatError("group table inverse is one-sided");
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) throw FileFormatError("group table element has no inverse");
  }
}

std::shared_ptr<FiniteGroup> FiniteGroup::from_permutations(
    std::string name, int degree, const std::vector<std::vector<int>>& generators,
    long long max_order) {
  if (degree < 1) throw InvalidArgumentError("permutation degree must be positive");
  for (const auto& gen : generators)
    if (!is_permutation(gen, degree))
      throw FileFormatError("generator is not a permutation of the stated degree");

  std::vector<std::vector<int>> elements;
  std::unordered_map<std::uint64_t, std::vector<int>> index;
  auto find = [&](const std::vector<int>& p) -> int {
    auto it = index.find(hash_images(p));
    if (it == index.end()) return -1;
    for (int id : it->second)
      if (elements[id] == p) return id;
    return -1;
  };

  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  elements.push_back(identity);
  index[hash_images(identity)].push_back(0);

  // BFS in generator order; ids are the discovery order with identity = 0.
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      auto next = compose(elements[head], gen);
      if (find(next) < 0) {
        if (static_cast<long long>(elements.size()) >= max_order)
          throw OrderCapError("permutation group exceeds order cap " + std::to_string(max_order));
        index[hash_images(next)].push_back(static_cast<int>(elements.size()));
        elements.push_back(std::move(next));
      }
    }
  }
  return from_permutation_list(std::move(name), degree, std::move(elements));
}

std::shared_ptr<FiniteGroup> FiniteGroup::from_permutation_list(
    std::string name, int degree, std::vector<std::vector<int>> elements,
    std::vector<std::string> labels) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw InvalidArgumentError("empty element list");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->order_ = n;
  g->backend_ = Backend::Permutation;
  g->degree_ = degree;
  g->perms_ = std::move(elements);
  for (int id = 0; id < n; ++id) {
    if (!is_permutation(g->perms_[id], degree))
      throw InvalidArgumentError("element list entry is not a permutation");
    g->perm_index_[hash_images(g->perms_[id])].push_back(id);
  }

  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  auto id_it = g->find_permutation(identity);
  if (!id_it) throw InvalidArgumentError("element list lacks the identity permutation");
  g->identity_id_ = *id_it;

  g->inverse_.assign(n, -1);
  for (int id = 0; id < n; ++id) {
    auto inv = g->find_permutation(invert_images(g->perms_[id]));
    if (!inv) throw InvalidArgumentError("element list is not closed under inversion");
    g->inverse_[id] = *inv;
  }

  // Small permutation groups get a multiplication cache.
  if (n <= kTableCacheLimit) {
    g->table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        auto prod = g->find_permutation(compose(g->perms_[a], g->perms_[b]));
        if (!prod) throw InvalidArgumentError("element list is not closed under products");
        g->table_[static_cast<std::size_t>(a) * n + b] = *prod;
      }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw InvalidArgumentError("label list does not match group order");
  g->labels_ = std::move(labels);
  return g;
}

GroupElement FiniteGroup::element(int id) const {
  if (id < 0 || id >= order_)
    throw InvalidArgumentError("element id " + std::to_string(id) + " out of range for group " +
                               name_ + " of order " + std::to_string(order_));
  return {this, id};
}

int FiniteGroup::perm_mul(int a, int b) const {
  thread_local std::vector<int> scratch;
  const auto& pa = perms_[a];
  const auto& pb = perms_[b];
  scratch.resize(pa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) scratch[i] = pb[pa[i]];
  auto it = perm_index_.find(hash_images(scratch));
  if (it != perm_index_.end())
    for (int id : it->second)
      if (perms_[id] == scratch) return id;
  throw Error("group is not closed under multiplication");
}

int FiniteGroup::pow(int g, long long k) const {
  if (k < 0) return pow(inv(g), -k);
  int acc = identity_id_;
  int base = g;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int g) const {
  int acc = g;
  int ord = 1;
  while (acc != identity_id_) {
    acc = mul(acc, g);
    ++ord;
  }
  return ord;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteGroup::label(int id) const {
  if (!labels_.empty()) return labels_[id];
  if (backend_ == Backend::Permutation) return cycle_notation(perms_[id]);
  return "g" + std::to_string(id);
}

const std::vector<int>& FiniteGroup::images(int id) const {
  if (backend_ != Backend::Permutation)
    throw InvalidArgumentError("group " + name_ + " has no permutation backend");
  return perms_[id];
}

std::optional<int> FiniteGroup::find_permutation(const std::vector<int>& images) const {
  auto it = perm_index_.find(hash_images(images));
  if (it == perm_index_.end()) return std::nullopt;
  for (int id : it->second)
    if (perms_[id] == images) return id;
  return std::nullopt;
}

namespace {

const FiniteGroup& same_parent(GroupElement a, GroupElement b) {
  if (a.group == nullptr || b.group == nullptr)
    throw InvalidArgumentError("element has no parent group");
  if (a.group != b.group)
    throw ParentMismatchError("elements belong to different groups: " + a.group->name() +
                              " and " + b.group->name());
  return *a.group;
}

}  // namespace

GroupElement multiply(GroupElement g, GroupElement h) {
  const auto& G = same_parent(g, h);
  return {&G, G.mul(g.id, h.id)};
}

GroupElement inverse(GroupElement g) {
  if (g.group == nullptr) throw InvalidArgumentError("element has no parent group");
  return {g.group, g.group->inv(g.id)};
}

GroupElement conjugate(GroupElement x, GroupElement g) {
  const auto& G = same_parent(x, g);
  return {&G, G.conj(x.id, g.id)};
}

GroupElement commutator(GroupElement a, GroupElement b) {
  const auto& G = same_parent(a, b);
  return {&G, G.comm(a.id, b.id)};
}

Subgroup::Subgroup(const FiniteGroup& group, std::vector<int> sorted_elements,
                   std::vector<int> generators)
    : group_(&group), elements_(std::move(sorted_elements)), generators_(std::move(generators)) {
  mask_.assign(group.order(), 0);
  for (int id : elements_) mask_[id] = 1;
}

bool Subgroup::is_normal_in_parent() const {
  for (int h : elements_)
    for (int g = 0; g < group_->order(); ++g)
      if (!contains(group_->conj(h, g))) return false;
  return true;
}

Subgroup subgroup_closure(const FiniteGroup& group, std::span<const int> generators) {
  std::vector<std::uint8_t> seen(group.order(), 0);
  std::vector<int> frontier;
  seen[group.identity_id()] = 1;
  frontier.push_back(group.identity_id());
  std::vector<int> gens(generators.begin(), generators.end());
  for (int g : gens) {
    if (g < 0 || g >= group.order()) throw InvalidArgumentError("generator id out of range");
    if (!seen[g]) {
      seen[g] = 1;
      frontier.push_back(g);
    }
  }
  // BFS over right multiplication by the generators; in a finite group this
  // also closes the set under inverses.
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    for (int g : gens) {
      int next = group.mul(frontier[head], g);
      if (!seen[next]) {
        seen[next] = 1;
        frontier.push_back(next);
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  return Subgroup(group, std::move(frontier), std::move(gens));
}

Subgroup center(const FiniteGroup& group) {
  std::vector<int> all(group.order());
  std::iota(all.begin(), all.end(), 0);
  return centralizer(group, all);
}

Subgroup centralizer(const FiniteGroup& group, std::span<const int> subset) {
  std::vector<int> elems;
  for (int c = 0; c < group.order(); ++c) {
    bool commutes = true;
    for (int s : subset) {
      if (group.mul(c, s) != group.mul(s, c)) {
        commutes = false;
        break;
      }
    }
    if (commutes) elems.push_back(c);
  }
  return Subgroup(group, std::move(elems), {});
}

std::vector<int> subgroup_center_ids(const FiniteGroup& group,
                                     const std::vector<int>& subgroup_elements) {
  std::vector<int> out;
  for (int z : subgroup_elements) {
    bool commutes = true;
    for (int h : subgroup_elements) {
      if (group.mul(z, h) != group.mul(h, z)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(z);
  }
  return out;
}

CentralQuotient quotient_by_central(const FiniteGroup& group, const Subgroup& kernel) {
  if (&kernel.group() != &group)
    throw ParentMismatchError("kernel subgroup belongs to a different group");
  for (int z : kernel.elements())
    for (int g = 0; g < group.order(); ++g)
      if (group.mul(z, g) != group.mul(g, z))
        throw InvalidArgumentError("kernel is not central in " + group.name());

  const int n = group.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int g = 0; g < n; ++g) {
    if (coset_of[g] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(g);  // g is minimal in its coset: smaller members were already swept
    for (int z : kernel.elements()) coset_of[group.mul(g, z)] = c;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) {
    labels[i] = "[" + group.label(reps[i]) + "]";
    for (int j = 0; j < q; ++j) table[i][j] = coset_of[group.mul(reps[i], reps[j])];
  }
  CentralQuotient out;
  out.group = FiniteGroup::from_cayley_table(group.name() + "/Z", table, std::move(labels));
  out.projection = std::move(coset_of);
  return out;
}

std::vector<int> conjugacy_orbit(const FiniteGroup& group, int x, std::span<const int> subset) {
  std::vector<std::uint8_t> seen(group.order(), 0);
  std::vector<int> orbit;
  for (int s : subset) {
    int y = group.conj(x, s);
    if (!seen[y]) {
      seen[y] = 1;
      orbit.push_back(y);
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::string cycle_notation(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<std::uint8_t> done(n, 0);
  std::ostringstream out;
  bool any = false;
  for (int start = 0; start < n; ++start) {
    if (done[start] || images[start] == start) {
      done[start] = 1;
      continue;
    }
    any = true;
    out << '(';
    int cur = start;
    bool first = true;
    while (!done[cur]) {
      done[cur] = 1;
      if (!first) out << ' ';
      out << cur + 1;
      first = false;
      cur = images[cur];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::vector<int> parse_cycle_notation(const std::string& text, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw FileFormatError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw FileFormatError("expected point number in cycle notation: " + text);
      int v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree)
        throw FileFormatError("cycle point " + std::to_string(v) + " out of range 1.." +
                              std::to_string(degree));
      cycle.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw FileFormatError("unterminated cycle in: " + text);
    ++i;  // ')'
    skip_ws();
    any = true;
    if (cycle.size() > 1) {
      // Apply after the cycles already read: total = previous * this cycle.
      std::vector<int> cyc(degree);
      std::iota(cyc.begin(), cyc.end(), 0);
      for (std::size_t k = 0; k + 1 < cycle.size(); ++k) cyc[cycle[k]] = cycle[k + 1];
      cyc[cycle.back()] = cycle[0];
      for (int p = 0; p < degree; ++p) images[p] = cyc[images[p]];
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
      for (std::size_t l = k + 1; l < cycle.size(); ++l)
        if (cycle[k] == cycle[l]) throw FileFormatError("repeated point in cycle: " + text);
  }
  if (!any) throw FileFormatError("empty cycle notation: " + text);
  return images;
}

}  // namespace cgt
