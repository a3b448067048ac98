#include "cgt/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace cgt {

namespace {

using Node = Word::Node;
using NodePtr = Word::NodePtr;
using Kind = Word::Kind;

NodePtr make_empty() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Empty;
  return n;
}

NodePtr make_var(int index) {
  if (index < 1 || index > 99)
    throw InvalidArgumentError("variable index must be in 1..99, got " + std::to_string(index));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = index;
  return n;
}

NodePtr make_inverse(NodePtr u) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Inverse;
  n->children = {std::move(u)};
  return n;
}

NodePtr make_power(NodePtr u, long long k) {
  // Negative exponents desugar to the inverse of a positive power.
  if (k == 0) return make_empty();
  if (k < 0) return make_inverse(make_power(std::move(u), -k));
  if (k == 1) return u;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Power;
  n->exponent = k;
  n->children = {std::move(u)};
  return n;
}

NodePtr make_product(NodePtr u, NodePtr v) {
  if (u->kind == Kind::Empty) return v;
  if (v->kind == Kind::Empty) return u;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->children = {std::move(u), std::move(v)};
  return n;
}

NodePtr make_commutator(std::vector<NodePtr> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Commutator;
  n->children = std::move(parts);
  return n;
}

void flatten(const NodePtr& node, std::vector<int>& out, bool inverted) {
  switch (node->kind) {
    case Kind::Empty:
      return;
    case Kind::Var:
      out.push_back(inverted ? -node->var : node->var);
      return;
    case Kind::Inverse:
      flatten(node->children[0], out, !inverted);
      return;
    case Kind::Power: {
      for (long long i = 0; i < node->exponent; ++i) flatten(node->children[0], out, inverted);
      return;
    }
    case Kind::Product:
      if (!inverted) {
        flatten(node->children[0], out, false);
        flatten(node->children[1], out, false);
      } else {
        flatten(node->children[1], out, true);
        flatten(node->children[0], out, true);
      }
      return;
    case Kind::Commutator: {
      // [u,v] = u^-1 v^-1 u v, left-normed over the child list.
      // [u,v]^-1 = v^-1 u^-1 v u.
      std::vector<int> acc;
      flatten(node->children[0], acc, false);
      for (std::size_t i = 1; i < node->children.size(); ++i) {
        std::vector<int> b;
        flatten(node->children[i], b, false);
        std::vector<int> next;
        next.reserve(2 * (acc.size() + b.size()));
        for (auto it = acc.rbegin(); it != acc.rend(); ++it) next.push_back(-*it);
        for (auto it = b.rbegin(); it != b.rend(); ++it) next.push_back(-*it);
        next.insert(next.end(), acc.begin(), acc.end());
        next.insert(next.end(), b.begin(), b.end());
        acc = std::move(next);
      }
      if (!inverted) {
        out.insert(out.end(), acc.begin(), acc.end());
      } else {
        for (auto it = acc.rbegin(); it != acc.rend(); ++it) out.push_back(-*it);
      }
      return;
    }
  }
}

std::vector<int> reduce_letters(const std::vector<int>& raw) {
  std::vector<int> stack;
  for (int letter : raw) {
    if (!stack.empty() && stack.back() == -letter)
      stack.pop_back();
    else
      stack.push_back(letter);
  }
  return stack;
}

int ast_arity(const NodePtr& node) {
  switch (node->kind) {
    case Kind::Empty:
      return 0;
    case Kind::Var:
      return node->var;
    default: {
      int a = 0;
      for (const auto& c : node->children) a = std::max(a, ast_arity(c));
      return a;
    }
  }
}

void collect_vars(const NodePtr& node, std::set<int>& out) {
  if (node->kind == Kind::Var) {
    out.insert(node->var);
    return;
  }
  for (const auto& c : node->children) collect_vars(c, out);
}

// Recursive-descent parser for the grammar in the header.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    skip_ws();
    if (eof()) throw WordParseError("empty word expression", 0);
    auto w = parse_word();
    skip_ws();
    if (!eof()) throw WordParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return w;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_atom_start() {
    if (eof()) return false;
    char c = peek();
    return c == 'x' || c == '(' || c == '[' || c == '1';
  }

  NodePtr parse_word() {
    auto acc = parse_factor();
    for (;;) {
      skip_ws();
      if (!eof() && peek() == '*') {
        ++pos_;
        skip_ws();
        acc = make_product(std::move(acc), parse_factor());
      } else if (at_atom_start()) {
        acc = make_product(std::move(acc), parse_factor());
      } else {
        return acc;
      }
    }
  }

  NodePtr parse_factor() {
    auto atom = parse_atom();
    for (;;) {
      skip_ws();
      if (!eof() && peek() == '^') {
        ++pos_;
        skip_ws();
        atom = make_power(std::move(atom), parse_integer());
      } else {
        return atom;
      }
    }
  }

  long long parse_integer() {
    bool neg = false;
    if (!eof() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw WordParseError("expected integer exponent", pos_);
    long long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000) throw WordParseError("exponent too large", pos_);
    }
    return neg ? -v : v;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (eof()) throw WordParseError("expected variable, '1', '(' or '['", pos_);
    char c = peek();
    if (c == 'x') {
      std::size_t start = pos_;
      ++pos_;
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw WordParseError("expected variable index after 'x'", pos_);
      int v = 0;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        v = v * 10 + (text_[pos_++] - '0');
        if (v > 99) throw WordParseError("variable index must be in 1..99", start);
      }
      if (v == 0) throw WordParseError("variable index 0 is not allowed", start);
      return make_var(v);
    }
    if (c == '1') {
      ++pos_;
      return make_empty();
    }
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      auto w = parse_word();
      skip_ws();
      if (eof() || peek() != ')') throw WordParseError("unbalanced '('", open);
      ++pos_;
      return w;
    }
    if (c == '[') {
      std::size_t open = pos_;
      ++pos_;
      std::vector<NodePtr> parts;
      parts.push_back(parse_word());
      skip_ws();
      while (!eof() && peek() == ',') {
        ++pos_;
        parts.push_back(parse_word());
        skip_ws();
      }
      if (eof() || peek() != ']') throw WordParseError("unbalanced '['", open);
      if (parts.size() < 2) throw WordParseError("commutator needs at least two entries", open);
      ++pos_;
      return make_commutator(std::move(parts));
    }
    throw WordParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence_needs_parens(const NodePtr& node) {
  return node->kind == Kind::Product || node->kind == Kind::Power || node->kind == Kind::Inverse;
}

void print_node(const NodePtr& node, std::ostringstream& out) {
  switch (node->kind) {
    case Kind::Empty:
      out << '1';
      return;
    case Kind::Var:
      out << 'x' << node->var;
      return;
    case Kind::Inverse: {
      const auto& c = node->children[0];
      if (c->kind == Kind::Power && c->children[0]->kind == Kind::Var) {
        print_node(c->children[0], out);
        out << "^-" << c->exponent;
      } else if (precedence_needs_parens(c)) {
        out << '(';
        print_node(c, out);
        out << ")^-1";
      } else {
        print_node(c, out);
        out << "^-1";
      }
      return;
    }
    case Kind::Power: {
      const auto& c = node->children[0];
      if (precedence_needs_parens(c)) {
        out << '(';
        print_node(c, out);
        out << ')';
      } else {
        print_node(c, out);
      }
      out << '^' << node->exponent;
      return;
    }
    case Kind::Product:
      print_node(node->children[0], out);
      out << '*';
      print_node(node->children[1], out);
      return;
    case Kind::Commutator: {
      out << '[';
      for (std::size_t i = 0; i < node->children.size(); ++i) {
        if (i) out << ',';
        print_node(node->children[i], out);
      }
      out << ']';
      return;
    }
  }
}

// Rebuilds a canonical AST (product of signed variable powers) from a
// reduced letter sequence.
NodePtr ast_from_letters(const std::vector<int>& letters) {
  if (letters.empty()) return make_empty();
  NodePtr acc;
  std::size_t i = 0;
  while (i < letters.size()) {
    int letter = letters[i];
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letter) ++j;
    long long count = static_cast<long long>(j - i);
    NodePtr run = make_power(make_var(std::abs(letter)), letter > 0 ? count : -count);
    acc = acc ? make_product(std::move(acc), std::move(run)) : run;
    i = j;
  }
  return acc;
}

}  // namespace

Word::Word() : Word(make_empty()) {}

Word::Word(NodePtr ast) : ast_(std::move(ast)) {
  std::vector<int> raw;
  flatten(ast_, raw, false);
  letters_ = reduce_letters(raw);
  arity_ = ast_arity(ast_);
}

Word Word::parse(std::string_view text) { return Word(Parser(text).parse()); }

Word Word::var(int index) { return Word(make_var(index)); }

Word Word::inverse_of(const Word& w) { return Word(make_inverse(w.ast_)); }

Word Word::power_of(const Word& w, long long exponent) {
  return Word(make_power(w.ast_, exponent));
}

Word Word::product_of(const Word& u, const Word& v) {
  return Word(make_product(u.ast_, v.ast_));
}

Word Word::commutator_of(const std::vector<Word>& parts) {
  if (parts.size() < 2) throw InvalidArgumentError("commutator needs at least two entries");
  std::vector<NodePtr> nodes;
  nodes.reserve(parts.size());
  for (const auto& p : parts) nodes.push_back(p.ast_);
  return Word(make_commutator(std::move(nodes)));
}

std::vector<int> Word::variables() const {
  std::set<int> vars;
  collect_vars(ast_, vars);
  return {vars.begin(), vars.end()};
}

std::string Word::str() const {
  std::ostringstream out;
  print_node(ast_, out);
  return out.str();
}

Word Word::free_reduced() const { return Word(ast_from_letters(letters_)); }

Word Word::append_commutator_variables(int m) const {
  if (m < 0) throw InvalidArgumentError("m must be non-negative");
  if (m == 0) return *this;
  std::vector<NodePtr> parts;
  parts.push_back(ast_);
  for (int i = 1; i <= m; ++i) parts.push_back(make_var(arity_ + i));
  return Word(make_commutator(std::move(parts)));
}

int Word::evaluate_ids(const FiniteGroup& group, std::span<const int> assignment) const {
  if (static_cast<int>(assignment.size()) < arity_)
    throw InvalidArgumentError("assignment covers " + std::to_string(assignment.size()) +
                               " variables, word needs " + std::to_string(arity_));
  int acc = group.identity_id();
  for (int letter : letters_) {
    int g = assignment[static_cast<std::size_t>(std::abs(letter)) - 1];
    acc = group.mul(acc, letter > 0 ? g : group.inv(g));
  }
  return acc;
}

namespace {

int eval_node(const NodePtr& node, const FiniteGroup& group, std::span<const int> assignment) {
  switch (node->kind) {
    case Kind::Empty:
      return group.identity_id();
    case Kind::Var:
      return assignment[static_cast<std::size_t>(node->var) - 1];
    case Kind::Inverse:
      return group.inv(eval_node(node->children[0], group, assignment));
    case Kind::Power:
      return group.pow(eval_node(node->children[0], group, assignment), node->exponent);
    case Kind::Product:
      return group.mul(eval_node(node->children[0], group, assignment),
                       eval_node(node->children[1], group, assignment));
    case Kind::Commutator: {
      int acc = eval_node(node->children[0], group, assignment);
      for (std::size_t i = 1; i < node->children.size(); ++i)
        acc = group.comm(acc, eval_node(node->children[i], group, assignment));
      return acc;
    }
  }
  throw Error("unreachable");
}

}  // namespace

int Word::evaluate_ast_ids(const FiniteGroup& group, std::span<const int> assignment) const {
  if (static_cast<int>(assignment.size()) < arity_)
    throw InvalidArgumentError("assignment does not cover the word's variables");
  return eval_node(ast_, group, assignment);
}

GroupElement Word::evaluate(const FiniteGroup& group,
                            const std::map<int, GroupElement>& assignment) const {
  std::vector<int> flat(static_cast<std::size_t>(arity_), group.identity_id());
  for (int v : variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw InvalidArgumentError("missing binding for x" + std::to_string(v));
    if (it->second.group != &group)
      throw ParentMismatchError("binding for x" + std::to_string(v) +
                                " belongs to a different group");
    flat[static_cast<std::size_t>(v) - 1] = it->second.id;
  }
  return {&group, evaluate_ids(group, flat)};
}

bool formal_product_less(const FormalProduct& p, const FormalProduct& q) {
  if (p.factors.size() != q.factors.size()) return p.factors.size() < q.factors.size();
  // Compare from the rightmost differing position.
  for (std::size_t k = p.factors.size(); k-- > 0;) {
    if (p.factors[k] != q.factors[k]) return p.factors[k] < q.factors[k];
  }
  return false;
}

}  // namespace cgt
