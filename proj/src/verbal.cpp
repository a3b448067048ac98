#include "cgt/verbal.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <thread>

namespace cgt {

namespace {

// Variables that actually occur in the reduced letters; enumerating over the
// others cannot change the value set.
std::vector<int> effective_vars(const Word& w) {
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(w.arity()) + 1, 0);
  std::vector<int> vars;
  for (int letter : w.letters()) {
    int v = std::abs(letter);
    if (!seen[v]) {
      seen[v] = 1;
      vars.push_back(v);
    }
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

long long checked_pow(long long base, int exp, long long cap) {
  long long acc = 1;
  for (int i = 0; i < exp; ++i) {
    if (acc > cap / base) return cap + 1;
    acc *= base;
  }
  return acc;
}

// Evaluates the word letters over assignments indexed by effective variable
// slot (not by variable index).
struct CompiledWord {
  std::vector<int> slot_letters;  // +-(slot+1)
  int slots = 0;

  explicit CompiledWord(const Word& w) {
    auto vars = effective_vars(w);
    slots = static_cast<int>(vars.size());
    std::vector<int> slot_of(static_cast<std::size_t>(w.arity()) + 1, -1);
    for (std::size_t i = 0; i < vars.size(); ++i) slot_of[vars[i]] = static_cast<int>(i);
    for (int letter : w.letters()) {
      int s = slot_of[std::abs(letter)] + 1;
      slot_letters.push_back(letter > 0 ? s : -s);
    }
  }

  int eval(const FiniteGroup& group, const int* assignment) const {
    int acc = group.identity_id();
    for (int letter : slot_letters) {
      int g = assignment[std::abs(letter) - 1];
      acc = group.mul(acc, letter > 0 ? g : group.inv(g));
    }
    return acc;
  }
};

// Exhaustive enumeration of one chunk of the first slot's range.
void enumerate_chunk(const FiniteGroup& group, const CompiledWord& cw, int first_lo, int first_hi,
                     std::vector<std::uint8_t>& found) {
  const int n = group.order();
  std::vector<int> asg(static_cast<std::size_t>(cw.slots), 0);
  for (int first = first_lo; first < first_hi; ++first) {
    asg[0] = first;
    std::fill(asg.begin() + 1, asg.end(), 0);
    for (;;) {
      found[cw.eval(group, asg.data())] = 1;
      int pos = cw.slots - 1;
      while (pos >= 1) {
        if (++asg[pos] < n) break;
        asg[pos] = 0;
        --pos;
      }
      if (pos < 1) break;
    }
  }
}

}  // namespace

bool ValueSet::contains(int id) const {
  return std::binary_search(values.begin(), values.end(), id);
}

ValueSet w_values(const FiniteGroup& group, const Word& w, const EnumerationBudget& budget) {
  ValueSet out;
  out.group = &group;
  out.word = w;

  CompiledWord cw(w);
  if (cw.slots == 0) {
    out.values = {group.identity_id()};
    return out;
  }

  const int n = group.order();
  long long tuples = checked_pow(n, cw.slots, budget.max_tuples);
  std::vector<std::uint8_t> found(n, 0);

  if (tuples <= budget.max_tuples) {
    unsigned hw = budget.threads > 0 ? static_cast<unsigned>(budget.threads)
                                     : std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    long long per_first = tuples / n;
    if (hw <= 1 || per_first < 4096 || n < 2) {
      enumerate_chunk(group, cw, 0, n, found);
    } else {
      unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(n));
      std::vector<std::vector<std::uint8_t>> parts(workers, std::vector<std::uint8_t>(n, 0));
      std::vector<std::thread> pool;
      int chunk = (n + static_cast<int>(workers) - 1) / static_cast<int>(workers);
      for (unsigned t = 0; t < workers; ++t) {
        int lo = static_cast<int>(t) * chunk;
        int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, t] { enumerate_chunk(group, cw, lo, hi, parts[t]); });
      }
      for (auto& th : pool) th.join();
      for (const auto& part : parts)
        for (int i = 0; i < n; ++i) found[i] |= part[i];
    }
  } else if (budget.sample) {
    std::mt19937_64 rng(budget.seed);
    std::vector<int> asg(static_cast<std::size_t>(cw.slots), 0);
    for (long long s = 0; s < *budget.sample; ++s) {
      for (int& a : asg) a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      found[cw.eval(group, asg.data())] = 1;
    }
    found[group.identity_id()] = 1;  // the all-identity tuple is always a value
    out.exact = false;
  } else {
    throw BudgetError("value enumeration needs " + std::to_string(n) + "^" +
                      std::to_string(cw.slots) + " tuples, above max_tuples = " +
                      std::to_string(budget.max_tuples) +
                      " (raise --max-tuples or pass --sample)");
  }

  for (int i = 0; i < n; ++i)
    if (found[i]) out.values.push_back(i);
  return out;
}

ValueSet star(const ValueSet& values) {
  ValueSet out = values;
  out.starred = true;
  std::vector<std::uint8_t> present(values.group->order(), 0);
  for (int v : values.values) present[v] = 1;
  for (int v : values.values) present[values.group->inv(v)] = 1;
  out.values.clear();
  for (int i = 0; i < values.group->order(); ++i)
    if (present[i]) out.values.push_back(i);
  return out;
}

Subgroup verbal_subgroup(const FiniteGroup& group, const ValueSet& values) {
  if (values.group != &group) throw ParentMismatchError("value set belongs to a different group");
  if (!values.exact) throw InvalidArgumentError("verbal subgroup needs an exact value set");
  Subgroup sub = subgroup_closure(group, values.values);
  if (!sub.is_normal_in_parent())
    throw Error("verbal subgroup is not normal; group operations are inconsistent");
  return sub;
}

Subgroup verbal_subgroup(const FiniteGroup& group, const Word& w, const EnumerationBudget& budget) {
  return verbal_subgroup(group, w_values(group, w, budget));
}

Subgroup commutator_with_group(const FiniteGroup& group, const Subgroup& sub) {
  if (&sub.group() != &group) throw ParentMismatchError("subgroup belongs to a different group");
  // Seed with commutators of the generators, then sweep the full set until
  // no commutator [h, g] is missing.
  std::vector<int> gens;
  std::vector<std::uint8_t> seen(group.order(), 0);
  auto add = [&](int id) {
    if (!seen[id]) {
      seen[id] = 1;
      gens.push_back(id);
    }
  };
  const auto& seed = sub.generators().empty() ? sub.elements() : sub.generators();
  for (int h : seed)
    for (int g = 0; g < group.order(); ++g) add(group.comm(h, g));

  Subgroup result = subgroup_closure(group, gens);
  for (;;) {
    bool grew = false;
    for (int h : sub.elements()) {
      for (int g = 0; g < group.order(); ++g) {
        int c = group.comm(h, g);
        if (!result.contains(c)) {
          add(c);
          grew = true;
        }
      }
    }
    if (!grew) return result;
    result = subgroup_closure(group, gens);
  }
}

VerbalChain iterated_commutator_chain(const FiniteGroup& group, const Word& w, int m,
                                      const EnumerationBudget& budget) {
  if (m < 0) throw InvalidArgumentError("m must be non-negative");
  VerbalChain out;
  out.word = w;
  out.m = m;
  out.chain.push_back(verbal_subgroup(group, w, budget));
  for (int k = 0; k < m; ++k)
    out.chain.push_back(commutator_with_group(group, out.chain.back()));

  // Cross-check against the verbal subgroup of [w, x_{n+1}, ..., x_{n+m}]
  // when that enumeration fits the budget.
  if (m > 0) {
    try {
      Subgroup direct = verbal_subgroup(group, w.append_commutator_variables(m), budget);
      if (direct.elements() != out.chain.back().elements())
        throw Error("iterated commutator chain disagrees with the appended-word subgroup");
    } catch (const BudgetError&) {
      // enumeration too large; the chain itself is still exact
    }
  }
  return out;
}

WidthDecomposition width_decomposition(const FiniteGroup& group, const ValueSet& starred) {
  if (starred.group != &group) throw ParentMismatchError("value set belongs to a different group");
  if (!starred.exact) throw InvalidArgumentError("width needs an exact value set");
  if (!starred.starred) throw InvalidArgumentError("width runs over the starred value set");

  WidthDecomposition out;
  out.factors.assign(group.order(), {});
  Subgroup target = subgroup_closure(group, starred.values);

  // BFS over products; layer k holds everything expressible with <= k
  // factors (the identity is a value, so layers are nested).
  std::vector<int> covered = {group.identity_id()};
  std::vector<std::uint8_t> seen(group.order(), 0);
  seen[group.identity_id()] = 1;
  std::size_t layer_start = 0;
  int width = 0;
  while (covered.size() < static_cast<std::size_t>(target.order())) {
    std::size_t layer_end = covered.size();
    ++width;
    for (std::size_t i = layer_start; i < layer_end; ++i) {
      for (int v : starred.values) {
        int next = group.mul(covered[i], v);
        if (!seen[next]) {
          seen[next] = 1;
          out.factors[next] = out.factors[covered[i]];
          out.factors[next].push_back(v);
          covered.push_back(next);
        }
      }
    }
    layer_start = layer_end;
    if (layer_end == covered.size())
      throw Error("width BFS stalled before covering the verbal subgroup");
  }
  // One extra layer must add nothing: k+1 factors always reduce to k.
  for (std::size_t i = 0; i < covered.size(); ++i)
    for (int v : starred.values)
      if (!seen[group.mul(covered[i], v)])
        throw Error("width BFS produced an element outside the verbal subgroup");
  out.width = width;
  return out;
}

int word_width(const FiniteGroup& group, const ValueSet& values) {
  const ValueSet* starred = &values;
  ValueSet tmp;
  if (!values.starred) {
    tmp = star(values);
    starred = &tmp;
  }
  return width_decomposition(group, *starred).width;
}

int word_width(const FiniteGroup& group, const Word& w, const EnumerationBudget& budget) {
  return word_width(group, w_values(group, w, budget));
}

long long enumeration_tuples(const FiniteGroup& group, const Word& w, long long cap) {
  auto vars = effective_vars(w);
  if (vars.empty()) return 1;
  return checked_pow(group.order(), static_cast<int>(vars.size()), cap);
}

}  // namespace cgt
