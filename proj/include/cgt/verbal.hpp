#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/group.hpp"
#include "cgt/word.hpp"

namespace cgt {

// Controls exhaustive tuple enumeration. Enumeration over |G|^k tuples is
// exact while k-th power of the order stays within max_tuples; otherwise it
// fails with BudgetError unless a sample size is set.
struct EnumerationBudget {
  long long max_tuples = 100'000'000;
  std::optional<long long> sample;  // uniform random tuples; result inexact
  std::uint64_t seed = 12345;
  int threads = 0;  // 0 = hardware concurrency
};

// The set of values a word takes in a group (optionally with inverses
// adjoined). Values are sorted ids; `exact` is false for sampled sets.
struct ValueSet {
  const FiniteGroup* group = nullptr;
  Word word;
  std::vector<int> values;
  bool starred = false;
  bool exact = true;

  bool contains(int id) const;
};

// All w-values {w(g_1,...,g_n)} by tuple enumeration.
ValueSet w_values(const FiniteGroup& group, const Word& w,
                  const EnumerationBudget& budget = {});

// S* = S with inverses adjoined.
ValueSet star(const ValueSet& values);

// Subgroup generated by all w-values; verified normal in the parent.
Subgroup verbal_subgroup(const FiniteGroup& group, const Word& w,
                         const EnumerationBudget& budget = {});
Subgroup verbal_subgroup(const FiniteGroup& group, const ValueSet& values);

// V_0 = w(G), V_{k+1} = [V_k, G].
struct VerbalChain {
  Word word;
  int m = 0;
  std::vector<Subgroup> chain;  // size m+1
};

// Computes the chain and, when the appended word's value set fits the
// budget, cross-checks V_m against the verbal subgroup of
// [w, x_{n+1}, ..., x_{n+m}].
VerbalChain iterated_commutator_chain(const FiniteGroup& group, const Word& w, int m,
                                      const EnumerationBudget& budget = {});

// [H, G]: subgroup generated by commutators of H with G.
Subgroup commutator_with_group(const FiniteGroup& group, const Subgroup& sub);

// Width of w in G: BFS layers of G_w* products needed to cover w(G);
// 0 iff w(G) is trivial. Also checks that one extra layer adds nothing.
// Requires an exact value set.
int word_width(const FiniteGroup& group, const ValueSet& values);
int word_width(const FiniteGroup& group, const Word& w,
               const EnumerationBudget& budget = {});

// BFS factorization of every element of <S*> into G_w* factors: returns,
// for each covered id, one shortest factor list (ids into `starred`).
struct WidthDecomposition {
  int width = 0;
  std::vector<std::vector<int>> factors;  // by element id; empty unless covered
};
WidthDecomposition width_decomposition(const FiniteGroup& group, const ValueSet& starred);

// Tuples an exhaustive enumeration of w over `group` would visit
// (|G| to the number of distinct variables in the reduced letters),
// saturated at cap + 1.
long long enumeration_tuples(const FiniteGroup& group, const Word& w, long long cap);

}  // namespace cgt
