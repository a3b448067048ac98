#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgt/constructions.hpp"
#include "cgt/group.hpp"
#include "cgt/report.hpp"
#include "cgt/verbal.hpp"
#include "cgt/word.hpp"

namespace cgt {

// ---------------------------------------------------------------------------
// Core constructions behind the checks
// ---------------------------------------------------------------------------

// Conjugacy profile of a group under the w-value set: per-element orbit
// sizes |x^{G_w}| and their maximum.
struct FcProfile {
  std::string group;
  std::string word;
  std::vector<int> orbit_sizes;  // by element id
  int max_orbit = 0;
};
FcProfile fc_profile(const FiniteGroup& group, const Word& w, const ValueSet& values);

// One factor of a decomposition: a w-value or the inverse of one, with the
// assignment tuple witnessing it.
struct DecompositionFactor {
  int element = -1;
  std::vector<int> witness;  // assignment ids for x_1..x_n
  int sign = 1;              // +1: element = w(witness); -1: element = w(witness)^-1
};

struct Decomposition {
  int target = -1;  // the v-value [w(g_1..g_n), g_{n+1}, ..., g_{n+m}]
  int m = 0;
  std::vector<DecompositionFactor> factors;  // product == target, size <= 2^m
};

// Decomposes the v-value at `tuple` (length arity(w) + m) into at most 2^m
// starred w-values, following the inductive construction
//   [u, g] = u^-1 u^g,   (w_1..w_k) -> (w_k^-1,..,w_1^-1, w_1^g,..,w_k^g).
// Rejects m = 0.
Decomposition decompose_commutator_value(const FiniteGroup& group, const Word& w,
                                         std::span<const int> tuple, int m);

// Checks every factor against its witness and the product against the target.
bool verify_decomposition(const FiniteGroup& group, const Word& w, const Decomposition& d);

// Least e >= 1 with b^e in Z(<x> u B) for every b in B (the lcm of the
// per-element minimal exponents).
int central_exponent(const FiniteGroup& group, int x, std::span<const int> basis_ids);

// Conjugator basis for x over a starred value set: scanning values in id
// order, keep the first b producing each new conjugate x^b.
struct ConjugatorBasis {
  std::vector<int> basis;       // b_1, ..., b_r
  std::vector<int> conjugates;  // x^{b_i}, aligned with basis
};
ConjugatorBasis conjugator_basis(const FiniteGroup& group, int x, const ValueSet& starred);

// x^y re-expressed as x^{b_r^{e_r} ... b_1^{e_1}} with every exponent < e.
struct SortedConjugatorForm {
  std::vector<int> basis;      // b_1, ..., b_r
  std::vector<int> exponents;  // exponents[i] belongs to basis[i]
  int exponent_bound = 1;      // e
};

// Lexicographic search over exponent vectors (all-zero first, e_1 fastest);
// nullopt when no vector reproduces `target` = x^y.
std::optional<std::vector<int>> find_sorted_exponents(const FiniteGroup& group, int x,
                                                      std::span<const int> basis, int e,
                                                      int target);

// Full pipeline for one (x, y): basis from G_v*, e from the central
// exponent, then the exponent search. `y_factors` are ids of G_v* elements
// whose product is y.
std::optional<SortedConjugatorForm> sorted_conjugator_form(const FiniteGroup& group,
                                                           const ValueSet& starred_v, int x,
                                                           std::span<const int> y_factors);

// Orbit {b^{[y^k, b, ..., b]} : k} in wr2(A) (m copies of b), with
// y = ((a,1),0). Returns the orbit size and the size predicted by the
// closed form. `a` must have odd order.
struct WreathOrbit {
  int orbit_size = 0;
  int predicted = 0;
};
WreathOrbit wreath_orbit(const FiniteGroup& wreath_group, int a, int m);

// Literal iteration check of [y, b, ..., b] (m+1 copies) against the closed
// form y^{s 2^m b} y^{-s 2^m}, s = (-1)^m. Preconditions b^2 = 1 and
// [y, y^b] = 1; throws InapplicableError when they fail.
bool iterated_commutator_identity(const FiniteGroup& group, int y, int b, int m);

// ---------------------------------------------------------------------------
// Checks producing reports
// ---------------------------------------------------------------------------

// Caches value sets, subgroups and widths across checks on one group.
class VerifySession {
 public:
  VerifySession(GroupPtr group, std::string group_name, EnumerationBudget budget);

  const FiniteGroup& group() const { return *group_; }
  const std::string& group_name() const { return name_; }
  const EnumerationBudget& budget() const { return budget_; }

  const ValueSet& values(const Word& w);          // exact w-values
  const ValueSet& starred_values(const Word& w);  // exact G_w*
  const Subgroup& verbal(const Word& w);
  int width(const Word& w);

 private:
  GroupPtr group_;
  std::string name_;
  EnumerationBudget budget_;
  std::map<std::string, ValueSet> values_;
  std::map<std::string, ValueSet> starred_;
  std::map<std::string, Subgroup> verbal_;
  std::map<std::string, int> width_;
};

// Exhaustive associativity/identity/inverse checks (sampled above order 64).
VerificationReport check_group_axioms(const FiniteGroup& group, const std::string& name,
                                      std::uint64_t seed = 12345);

// Random-tuple decomposition check: length, witnesses, product.
VerificationReport check_decomposition(VerifySession& s, const Word& w, int m, int tuples,
                                       std::uint64_t seed);

// |x^{G_v}| <= |x^{G_w*}|^{2^m} for every x.
VerificationReport check_conjugacy_bound(VerifySession& s, const Word& w, int m);

// For every x: e from the conjugator basis satisfies b^e in Z(<x,B>) for
// all b, and e-1 fails for some b when e > 1.
VerificationReport check_central_exponent(VerifySession& s, const Word& w, int m);

// FC-embedding mechanics: per x, basis + central exponent + sorted form for
// every y (all y when |v(G)| <= 512, else `y_sample` seeded random ones),
// and the orbit bound |x^{v(G)}| < e^r (singleton orbit when e = 1).
VerificationReport check_fc_embedding(VerifySession& s, const Word& w, int m,
                                      int y_sample = 512);

// BFC-embedding constants: uniform r, s, e over all x and the uniform
// orbit bound.
VerificationReport check_bfc_embedding(VerifySession& s, const Word& w, int m);

// |v(G)| <= (2r)^(2^m k) with r = |G_w| and k = width of v, plus the
// ingredient bound |G_v| <= (2r)^(2^m).
VerificationReport check_width_order_bound(VerifySession& s, const Word& w, int m);

// Closed form vs literal iteration over all applicable (y, b, m <= m_max).
VerificationReport check_commutator_identity(const FiniteGroup& group, const std::string& name,
                                             int m_max = 4);

// Orbit growth in wr2(C_t): one report per (t, m), orbit size must equal t.
std::vector<VerificationReport> check_wreath_orbit_growth(std::span<const int> t_values,
                                                          std::span<const int> m_values,
                                                          const BuildOptions& opts = {});

// ---------------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------------

struct SuiteConfig {
  std::vector<std::string> groups = {"C6",      "S3",      "D8",  "Q8",    "D12",
                                     "A4",      "S4",      "wr2(C3)", "wr2(C5)", "C3xS3"};
  std::vector<std::string> words = {"x1", "x1^2", "[x1,x2]", "[x1^2,x2^2]", "[x1,x2,x3]"};
  std::vector<int> m_values = {0, 1, 2, 3};
  std::vector<int> wreath_t = {1, 3, 5, 7, 9};
  std::vector<int> wreath_m = {1, 2};
  int identity_m_max = 4;
  int decomposition_tuples = 200;
  int y_sample = 512;
  EnumerationBudget budget;
  BuildOptions build;
};

struct SuiteSkip {
  std::string check;
  std::string group;
  std::string word;
  int m = 0;
  std::string reason;
};

struct SuiteResult {
  std::vector<VerificationReport> reports;
  std::vector<SuiteSkip> skips;
  bool all_pass = true;
};

using SuiteProgress = std::function<void(const VerificationReport&)>;

SuiteResult run_suite(const SuiteConfig& config, const SuiteProgress& progress = {});

}  // namespace cgt
