#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Element of a FiniteGroup: a dense id plus a pointer to its parent.
// Ids are stable for the lifetime of the group object.
struct GroupElement {
  const FiniteGroup* group = nullptr;
  int id = -1;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

enum class Backend { CayleyTable, Permutation };

// Structural data attached to groups built as A wr C2. Element ids follow
// the fixed encoding id = (eps * |A| + a1) * |A| + a2 for the element
// ((a1, a2), eps), regardless of backend.
struct WreathInfo {
  int base_order = 0;
  int swap_id = -1;

  int encode(int a1, int a2, int eps) const {
    return (eps * base_order + a1) * base_order + a2;
  }
  void decode(int id, int& a1, int& a2, int& eps) const {
    a2 = id % base_order;
    a1 = (id / base_order) % base_order;
    eps = id / (base_order * base_order);
  }
};

// A finite group with total multiplication over dense element ids.
// Immutable after construction; all queries are safe for concurrent use.
//
// Conventions used throughout:
//   permutation product   (s*t)(i) = t(s(i))   (apply s first)
//   conjugation           x^g = g^-1 * x * g
//   commutator            [a,b] = a^-1 * b^-1 * a * b,  [a,b,c] = [[a,b],c]
class FiniteGroup {
 public:
  // Cayley-table group. `table[i][j]` is the id of element_i * element_j.
  // Validates shape, Latin-square property, identity and two-sided inverses;
  // associativity is left to the axiom checks.
  static std::shared_ptr<FiniteGroup> from_cayley_table(
      std::string name, const std::vector<std::vector<int>>& table,
      std::vector<std::string> labels = {});

  // Permutation group generated by `generators` (0-based image vectors on
  // `degree` points). Elements are enumerated by BFS over the generators in
  // the given order, identity first, so ids are deterministic.
  static std::shared_ptr<FiniteGroup> from_permutations(
      std::string name, int degree, const std::vector<std::vector<int>>& generators,
      long long max_order = kDefaultOrderCap);

  // Permutation group from an explicit, complete element list (used by
  // constructions that can enumerate elements directly in a fixed order).
  static std::shared_ptr<FiniteGroup> from_permutation_list(std::string name, int degree,
                                                            std::vector<std::vector<int>> elements,
                                                            std::vector<std::string> labels = {});

  static constexpr long long kDefaultOrderCap = 1'000'000;

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  Backend backend() const { return backend_; }
  int degree() const { return degree_; }  // 0 for table backend

  GroupElement identity() const { return {this, identity_id_}; }
  int identity_id() const { return identity_id_; }
  GroupElement element(int id) const;  // range-checked

  // Raw id arithmetic (no parent checks; hot-path safe).
  int mul(int a, int b) const {
    return table_.empty() ? perm_mul(a, b) : table_[static_cast<std::size_t>(a) * order_ + b];
  }
  int inv(int a) const { return inverse_[a]; }
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
  int comm(int a, int b) const { return mul(inv(mul(b, a)), mul(a, b)); }
  int pow(int g, long long k) const;
  int element_order(int g) const;

  bool is_abelian() const;

  // Display label for an element: construction-supplied label, cycle
  // notation for permutation groups, or "g<id>".
  std::string label(int id) const;

  // Permutation backend access.
  const std::vector<int>& images(int id) const;
  std::optional<int> find_permutation(const std::vector<int>& images) const;

  const WreathInfo* wreath() const { return wreath_ ? &*wreath_ : nullptr; }
  void set_wreath(WreathInfo info) { wreath_ = info; }

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

 private:
  FiniteGroup() = default;
  void finish_table_init();
  int perm_mul(int a, int b) const;

  std::string name_;
  int order_ = 0;
  Backend backend_ = Backend::CayleyTable;
  int identity_id_ = 0;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;

  // Cayley backend: row-major order x order table (also filled for small
  // permutation groups as a multiplication cache).
  std::vector<int> table_;

  // Permutation backend.
  int degree_ = 0;
  std::vector<std::vector<int>> perms_;
  std::unordered_map<std::uint64_t, std::vector<int>> perm_index_;  // hash -> ids

  std::optional<WreathInfo> wreath_;

  static constexpr int kTableCacheLimit = 4096;
};

// Element-level operations with parent checks.
GroupElement multiply(GroupElement g, GroupElement h);
GroupElement inverse(GroupElement g);
GroupElement conjugate(GroupElement x, GroupElement g);   // g^-1 x g
GroupElement commutator(GroupElement a, GroupElement b);  // a^-1 b^-1 a b

// Subset of a group closed under product and inverse, with generator list
// and O(1) membership.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& group, std::vector<int> sorted_elements,
           std::vector<int> generators);

  const FiniteGroup& group() const { return *group_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }  // sorted ids
  const std::vector<int>& generators() const { return generators_; }
  bool contains(int id) const { return mask_[id] != 0; }
  bool is_trivial() const { return elements_.size() == 1; }

  bool is_normal_in_parent() const;

 private:
  const FiniteGroup* group_;
  std::vector<int> elements_;
  std::vector<int> generators_;
  std::vector<std::uint8_t> mask_;
};

// Smallest subgroup containing `generators` (empty set gives the trivial
// subgroup). Deterministic BFS enumeration in generator order.
Subgroup subgroup_closure(const FiniteGroup& group, std::span<const int> generators);

Subgroup center(const FiniteGroup& group);
Subgroup centralizer(const FiniteGroup& group, std::span<const int> subset);

// Center of the subgroup H as a set of ids: elements of H commuting with
// all of H.
std::vector<int> subgroup_center_ids(const FiniteGroup& group, const std::vector<int>& subgroup_elements);

// Quotient of G by a central subgroup, as a Cayley-table group on cosets
// (ordered by least representative id) plus the projection map.
struct CentralQuotient {
  GroupPtr group;
  std::vector<int> projection;  // element id -> coset id
};
CentralQuotient quotient_by_central(const FiniteGroup& group, const Subgroup& kernel);

// {x^s : s in subset}, sorted by id.
std::vector<int> conjugacy_orbit(const FiniteGroup& group, int x, std::span<const int> subset);

// 1-based cycle notation for a 0-based image vector, e.g. "(1 2 3)".
std::string cycle_notation(const std::vector<int>& images);
// Parse 1-based cycle notation into images on `degree` points.
std::vector<int> parse_cycle_notation(const std::string& text, int degree);

}  // namespace cgt
