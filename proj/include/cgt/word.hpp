#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/group.hpp"

namespace cgt {

// Free-group word in variables x1..x99.
//
// Grammar:
//   word    := factor (('*')? factor)*
//   factor  := atom ('^' integer)*
//   atom    := variable | '1' | '(' word ')' | '[' word (',' word)+ ']'
//   variable:= 'x' digits            (index 1..99)
//
// '[u,v,w]' is the left-normed commutator [[u,v],w]; '1' is the empty word.
// A word stores its AST plus the freely reduced letter sequence; evaluation
// runs on the letters, structural evaluation on the AST.
class Word {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  enum class Kind { Empty, Var, Inverse, Power, Product, Commutator };

  struct Node {
    Kind kind = Kind::Empty;
    int var = 0;             // Kind::Var
    long long exponent = 0;  // Kind::Power (> 0; parser desugars the rest)
    std::vector<NodePtr> children;
  };

  Word();  // empty word

  static Word parse(std::string_view text);  // throws WordParseError
  static Word var(int index);
  static Word inverse_of(const Word& w);
  static Word power_of(const Word& w, long long exponent);
  static Word product_of(const Word& u, const Word& v);
  static Word commutator_of(const std::vector<Word>& parts);  // left-normed

  // Highest variable index occurring in the AST (0 for the empty word).
  int arity() const { return arity_; }
  // Distinct variable indices occurring in the AST, sorted.
  std::vector<int> variables() const;

  // Freely reduced letters: +i for x_i, -i for x_i^-1.
  const std::vector<int>& letters() const { return letters_; }

  const NodePtr& ast() const { return ast_; }

  std::string str() const;

  // Canonical freely reduced form; printing it and parsing back round-trips.
  Word free_reduced() const;

  // [w, x_{n+1}, ..., x_{n+m}] with n = arity(); m = 0 returns w unchanged.
  Word append_commutator_variables(int m) const;

  // Letter-sequence evaluation. `assignment[i-1]` is the element id bound to
  // x_i; must cover arity() entries.
  int evaluate_ids(const FiniteGroup& group, std::span<const int> assignment) const;
  // Structural evaluation over the AST (used to cross-check the flat path).
  int evaluate_ast_ids(const FiniteGroup& group, std::span<const int> assignment) const;

  // Map-based evaluation: every variable occurring in the AST must be bound,
  // and all bindings must live in `group`.
  GroupElement evaluate(const FiniteGroup& group, const std::map<int, GroupElement>& assignment) const;

  // Words compare by reduced letter sequence.
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

 private:
  explicit Word(NodePtr ast);

  NodePtr ast_;
  std::vector<int> letters_;
  int arity_ = 0;
};

// Formal product b_{i1} ... b_{ij} over a fixed basis, stored as 1-based
// indices.
struct FormalProduct {
  std::vector<int> factors;
};

// Strict order on formal products: shorter first; for equal length compare
// from the rightmost differing position.
bool formal_product_less(const FormalProduct& p, const FormalProduct& q);

}  // namespace cgt
