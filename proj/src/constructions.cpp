#include "cgt/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace cgt {

namespace {

void check_cap(long long order, const BuildOptions& opts, const std::string& what) {
  if (order > opts.max_order)
    throw OrderCapError(what + " has order " + std::to_string(order) + ", above the cap " +
                        std::to_string(opts.max_order));
}

std::string power_label(const std::string& gen, int k) {
  if (k == 0) return "1";
  if (k == 1) return gen;
  return gen + "^" + std::to_string(k);
}

}  // namespace

GroupPtr cyclic_group(int n, const BuildOptions& opts) {
  if (n < 1) throw InvalidArgumentError("cyclic group order must be positive");
  check_cap(n, opts, "C" + std::to_string(n));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = power_label("r", i);
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup::from_cayley_table("C" + std::to_string(n), table, std::move(labels));
}

GroupPtr dihedral_group(int order, const BuildOptions& opts) {
  if (order < 2 || order % 2 != 0)
    throw InvalidArgumentError("dihedral group order must be even and at least 2");
  check_cap(order, opts, "D" + std::to_string(order));
  const int n = order / 2;
  const std::string name = "D" + std::to_string(order);
  if (n == 1) {
    return FiniteGroup::from_cayley_table(name, {{0, 1}, {1, 0}}, {"1", "s"});
  }
  if (n == 2) {
    // Klein four-group: xor table.
    std::vector<std::vector<int>> table(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) table[i][j] = i ^ j;
    return FiniteGroup::from_cayley_table(name, table, {"1", "r", "s", "rs"});
  }
  std::vector<int> rotation(n), reflection(n);
  for (int i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  return FiniteGroup::from_permutations(name, n, {rotation, reflection}, opts.max_order);
}

GroupPtr symmetric_group(int n, const BuildOptions& opts) {
  if (n < 1) throw InvalidArgumentError("symmetric group degree must be positive");
  long long order = 1;
  for (int i = 2; i <= n; ++i) {
    order *= i;
    if (order > opts.max_order) break;
  }
  check_cap(order, opts, "S" + std::to_string(n));
  const std::string name = "S" + std::to_string(n);
  if (n == 1) return FiniteGroup::from_cayley_table(name, {{0}}, {"1"});
  std::vector<int> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  std::vector<std::vector<int>> gens = {transposition};
  if (n > 2) gens.push_back(cycle);
  return FiniteGroup::from_permutations(name, n, gens, opts.max_order);
}

GroupPtr alternating_group(int n, const BuildOptions& opts) {
  if (n < 1) throw InvalidArgumentError("alternating group degree must be positive");
  const std::string name = "A" + std::to_string(n);
  if (n <= 2) return FiniteGroup::from_cayley_table(name, {{0}}, {"1"});
  long long order = 1;
  for (int i = 3; i <= n; ++i) {
    order *= i;
    if (order > opts.max_order) break;
  }
  check_cap(order, opts, name);
  std::vector<int> three_cycle(n);
  std::iota(three_cycle.begin(), three_cycle.end(), 0);
  three_cycle[0] = 1;
  three_cycle[1] = 2;
  three_cycle[2] = 0;
  std::vector<std::vector<int>> gens = {three_cycle};
  if (n > 3) {
    std::vector<int> cycle(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    } else {
      cycle[0] = 0;
      for (int i = 1; i < n; ++i) cycle[i] = i % (n - 1) + 1;
    }
    gens.push_back(cycle);
  }
  return FiniteGroup::from_permutations(name, n, gens, opts.max_order);
}

GroupPtr quaternion_group() {
  // Ids encode (unit, sign): id = 2*unit + sign with units 1,i,j,k.
  auto unit_mul = [](int a, int b, int& sign) {
    // returns unit index of unit_a * unit_b, accumulating the sign
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{+1, +1, +1, +1},
                                  {+1, -1, +1, -1},
                                  {+1, -1, -1, +1},
                                  {+1, +1, -1, -1}};
    sign *= sgn[a][b];
    return unit[a][b];
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
      int u = unit_mul(a / 2, b / 2, sign);
      table[a][b] = 2 * u + (sign < 0 ? 1 : 0);
    }
  static const std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup::from_cayley_table("Q8", table, labels);
}

GroupPtr direct_product(const std::vector<GroupPtr>& factors, const BuildOptions& opts) {
  if (factors.empty()) throw InvalidArgumentError("direct product needs at least one factor");
  if (factors.size() == 1) return factors[0];
  long long order = 1;
  std::string name;
  for (const auto& f : factors) {
    order *= f->order();
    check_cap(order, opts, "direct product");
    if (!name.empty()) name += "x";
    name += f->name();
  }
  // Tuple ids in odometer order, last factor fastest.
  auto decode = [&](long long id, std::vector<int>& parts) {
    for (std::size_t k = factors.size(); k-- > 0;) {
      parts[k] = static_cast<int>(id % factors[k]->order());
      id /= factors[k]->order();
    }
  };
  auto label_of = [&](const std::vector<int>& parts) {
    std::string l = "(";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) l += ",";
      l += factors[k]->label(parts[k]);
    }
    return l + ")";
  };
  const int n = static_cast<int>(order);
  std::vector<int> pa(factors.size()), pb(factors.size());
  if (n <= 4096) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
      decode(a, pa);
      labels[a] = label_of(pa);
      for (int b = 0; b < n; ++b) {
        decode(b, pb);
        long long id = 0;
        for (std::size_t k = 0; k < factors.size(); ++k)
          id = id * factors[k]->order() + factors[k]->mul(pa[k], pb[k]);
        table[a][b] = static_cast<int>(id);
      }
    }
    return FiniteGroup::from_cayley_table(name, table, std::move(labels));
  }
  // Above the table limit: act on the disjoint union of the factors' points.
  for (const auto& f : factors)
    if (f->backend() != Backend::Permutation)
      throw OrderCapError("direct product of order " + std::to_string(order) +
                          " is above the table limit 4096 and has non-permutation factors");
  int degree = 0;
  for (const auto& f : factors) degree += f->degree();
  std::vector<std::vector<int>> elements(n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    decode(a, pa);
    labels[a] = label_of(pa);
    std::vector<int> img(degree);
    int off = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const auto& part = factors[k]->images(pa[k]);
      for (std::size_t p = 0; p < part.size(); ++p) img[off + p] = off + part[p];
      off += factors[k]->degree();
    }
    elements[a] = std::move(img);
  }
  return FiniteGroup::from_permutation_list(name, degree, std::move(elements), std::move(labels));
}

GroupPtr wreath_c2(const GroupPtr& base, const BuildOptions& opts) {
  const int q = base->order();
  const long long order = 2ll * q * q;
  check_cap(order, opts, "wr2(" + base->name() + ")");
  if (q > 128)
    throw OrderCapError("wreath base order " + std::to_string(q) + " above the supported 128");

  WreathInfo info;
  info.base_order = q;
  info.swap_id = info.encode(base->identity_id(), base->identity_id(), 1);
  const std::string name = "wr2(" + base->name() + ")";

  // ((a1,a2),e)((b1,b2),f) = ((a1,a2) . swap^e(b1,b2), e xor f)
  auto mul_ids = [&](int x, int y) {
    int a1, a2, e, b1, b2, f;
    info.decode(x, a1, a2, e);
    info.decode(y, b1, b2, f);
    if (e) std::swap(b1, b2);
    return info.encode(base->mul(a1, b1), base->mul(a2, b2), e ^ f);
  };
  auto label_of = [&](int x) {
    int a1, a2, e;
    info.decode(x, a1, a2, e);
    return "((" + base->label(a1) + "," + base->label(a2) + ")," + std::to_string(e) + ")";
  };

  std::shared_ptr<FiniteGroup> g;
  if (q <= 64) {
    const int n = static_cast<int>(order);
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
      labels[a] = label_of(a);
      for (int b = 0; b < n; ++b) table[a][b] = mul_ids(a, b);
    }
    g = FiniteGroup::from_cayley_table(name, table, std::move(labels));
  } else {
    // Faithful action on two copies of the base group by right translation;
    // the swap bit exchanges the copies. Elements are listed in encoding
    // order so ids follow the same formula as the table realization.
    const int n = static_cast<int>(order);
    std::vector<std::vector<int>> elements(n);
    std::vector<std::string> labels(n);
    for (int x = 0; x < n; ++x) {
      int a1, a2, e;
      info.decode(x, a1, a2, e);
      std::vector<int> img(2 * q);
      for (int c = 0; c < q; ++c) {
        img[c] = base->mul(c, a1) + (e ? q : 0);
        img[q + c] = base->mul(c, a2) + (e ? 0 : q);
      }
      elements[x] = std::move(img);
      labels[x] = label_of(x);
    }
    g = FiniteGroup::from_permutation_list(name, 2 * q, std::move(elements), std::move(labels));
  }
  g->set_wreath(info);
  return g;
}

GroupElement wreath_swap_element(const FiniteGroup& group) {
  const WreathInfo* info = group.wreath();
  if (!info)
    throw InvalidArgumentError("group " + group.name() + " was not built as a wreath product");
  return {&group, info->swap_id};
}

GroupElement wreath_element(const FiniteGroup& group, int a1, int a2, int eps) {
  const WreathInfo* info = group.wreath();
  if (!info)
    throw InvalidArgumentError("group " + group.name() + " was not built as a wreath product");
  if (a1 < 0 || a1 >= info->base_order || a2 < 0 || a2 >= info->base_order ||
      (eps != 0 && eps != 1))
    throw InvalidArgumentError("wreath coordinates out of range");
  return {&group, info->encode(a1, a2, eps)};
}

namespace {

GroupPtr build_atom(std::string_view spec, const BuildOptions& opts);

std::vector<std::string_view> split_product(std::string_view spec) {
  // Split on 'x' at depth 0, but not the 'x' inside "x1" style names; the
  // family letters are all upper case so a lower-case 'x' is a separator.
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    char c = spec[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0) {
      parts.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(spec.substr(start));
  return parts;
}

int parse_count(std::string_view digits, std::string_view spec) {
  if (digits.empty()) throw FileFormatError("missing order in group spec '" + std::string(spec) + "'");
  long long v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw FileFormatError("bad group spec '" + std::string(spec) + "'");
    v = v * 10 + (c - '0');
    if (v > 100'000'000) throw FileFormatError("order too large in '" + std::string(spec) + "'");
  }
  return static_cast<int>(v);
}

GroupPtr build_atom(std::string_view spec, const BuildOptions& opts) {
  if (spec.empty()) throw FileFormatError("empty group spec");
  if (spec[0] == '@') return load_group_file(std::string(spec.substr(1)), opts);
  if (spec.rfind("wr2(", 0) == 0) {
    if (spec.back() != ')') throw FileFormatError("unbalanced parentheses in '" + std::string(spec) + "'");
    auto inner = spec.substr(4, spec.size() - 5);
    return wreath_c2(build_group(inner, opts), opts);
  }
  if (spec == "Q8") return quaternion_group();
  char family = spec[0];
  auto digits = spec.substr(1);
  switch (family) {
    case 'C':
      return cyclic_group(parse_count(digits, spec), opts);
    case 'D':
      return dihedral_group(parse_count(digits, spec), opts);
    case 'S':
      return symmetric_group(parse_count(digits, spec), opts);
    case 'A':
      return alternating_group(parse_count(digits, spec), opts);
    default:
      throw FileFormatError("unknown group family in spec '" + std::string(spec) + "'");
  }
}

}  // namespace

GroupPtr build_group(std::string_view spec, const BuildOptions& opts) {
  // Trim whitespace.
  while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.front()))) spec.remove_prefix(1);
  while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.back()))) spec.remove_suffix(1);
  if (spec.empty()) throw FileFormatError("empty group spec");
  if (spec[0] == '@') return build_atom(spec, opts);  // file paths may contain 'x'
  auto parts = split_product(spec);
  if (parts.size() == 1) return build_atom(parts[0], opts);
  std::vector<GroupPtr> factors;
  factors.reserve(parts.size());
  for (auto p : parts) factors.push_back(build_atom(p, opts));
  return direct_product(factors, opts);
}

GroupPtr load_group_json(const std::string& json_text, const BuildOptions& opts) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FileFormatError(std::string("bad group file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw FileFormatError("group file needs a string 'type' field");
  const std::string type = j["type"].get<std::string>();
  std::string name = j.value("name", std::string());
  try {
    if (type == "cayley") {
      if (!j.contains("table")) throw FileFormatError("cayley group file needs 'table'");
      auto table = j["table"].get<std::vector<std::vector<int>>>();
      check_cap(static_cast<long long>(table.size()), opts, "cayley group");
      return FiniteGroup::from_cayley_table(name.empty() ? "cayley" : name, table);
    }
    if (type == "perm") {
      if (!j.contains("degree") || !j.contains("generators"))
        throw FileFormatError("perm group file needs 'degree' and 'generators'");
      int degree = j["degree"].get<int>();
      auto gens = j["generators"].get<std::vector<std::vector<int>>>();
      return FiniteGroup::from_permutations(name.empty() ? "perm" : name, degree, gens,
                                            opts.max_order);
    }
    if (type == "named") {
      if (!j.contains("name") || !j["name"].is_string())
        throw FileFormatError("named group file needs 'name'");
      return build_group(j["name"].get<std::string>(), opts);
    }
  } catch (const nlohmann::json::exception& e) {
    throw FileFormatError(std::string("bad group file: ") + e.what());
  }
  throw FileFormatError("unknown group file type '" + type + "'");
}

GroupPtr load_group_file(const std::string& path, const BuildOptions& opts) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open group file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_group_json(buf.str(), opts);
}

}  // namespace cgt
