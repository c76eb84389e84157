// Growth step of the symmetric maximal even-order layout: the pendant
// ("leaf") vertex of order n splits into two twin vertices, and a new leaf
// joined to both twins is appended on the opposite side.
#pragma once

#include <vector>

namespace orthopat::detail {

struct SharpStep {
  std::vector<int> remap;  // old vertex -> new index; -1 for the old leaf
  int old_leaf;
  int twin_a;
  int twin_b;
  int new_leaf;
};

/// Leaf position of the order-n layout (n even, n >= 4).
inline int sharp_leaf(int n) { return n % 4 == 0 ? n - 1 : 0; }

inline SharpStep sharp_step(int n) {
  SharpStep s;
  s.remap.assign(n, -1);
  s.old_leaf = sharp_leaf(n);
  if (n % 4 == 0) {
    for (int u = 0; u + 1 < n; ++u) s.remap[u] = u + 1;
    s.twin_a = n;
    s.twin_b = n + 1;
    s.new_leaf = 0;
  } else {
    for (int u = 1; u < n; ++u) s.remap[u] = u + 1;
    s.twin_a = 0;
    s.twin_b = 1;
    s.new_leaf = n + 1;
  }
  return s;
}

}  // namespace orthopat::detail
