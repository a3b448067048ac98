#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgt/group.hpp"

namespace cgt {

struct BuildOptions {
  long long max_order = FiniteGroup::kDefaultOrderCap;
};

// Named families. Dihedral and cyclic groups are named by order:
// dihedral(8) is the symmetry group of the square.
GroupPtr cyclic_group(int n, const BuildOptions& opts = {});
GroupPtr dihedral_group(int order, const BuildOptions& opts = {});  // order even, >= 2
GroupPtr symmetric_group(int n, const BuildOptions& opts = {});
GroupPtr alternating_group(int n, const BuildOptions& opts = {});
GroupPtr quaternion_group();  // Q8
GroupPtr direct_product(const std::vector<GroupPtr>& factors, const BuildOptions& opts = {});

// A wr C2 on base A: elements ((a1, a2), eps) with the swap action,
// realized as a Cayley table for |A| <= 64 and as permutations on 2|A|
// points above. The result carries WreathInfo.
GroupPtr wreath_c2(const GroupPtr& base, const BuildOptions& opts = {});

// The distinguished involution ((1,1),1) of a wreath_c2 group.
GroupElement wreath_swap_element(const FiniteGroup& group);
// ((a1, a2), eps) as an element of a wreath_c2 group.
GroupElement wreath_element(const FiniteGroup& group, int a1, int a2, int eps);

// Group spec mini-language:
//   C12, D8, S4, A5, Q8, C3xC3, wr2(C3), @file.json
// 'x' separates direct-product factors; '@' loads a JSON group file.
GroupPtr build_group(std::string_view spec, const BuildOptions& opts = {});

// JSON group definition:
//   {"type":"cayley","table":[[...]],"name":...}
//   {"type":"perm","degree":n,"generators":[[images]],"name":...}
//   {"type":"named","name":"S4"}
// Table entries and images are 0-based.
GroupPtr load_group_json(const std::string& json_text, const BuildOptions& opts = {});
GroupPtr load_group_file(const std::string& path, const BuildOptions& opts = {});

}  // namespace cgt
