// Index structure shared by the zigzag construction and the Lambda pattern
// family. Each nonzero cell of the order-n special zigzag matrix is a signed
// product of two circle-point coordinates.
#pragma once

#include <optional>

namespace orthopat::detail {

struct ZigzagFactor {
  bool is_y;  // false: x_index, true: y_index
  int index;
};

struct ZigzagTerm {
  int sign;
  ZigzagFactor first;
  ZigzagFactor second;
};

/// 0-based (row, col) of the order-n matrix; nullopt for structural zeros.
/// Uses x_0..x_n and y_1..y_{n-1}.
inline std::optional<ZigzagTerm> zigzag_term(int n, int row, int col) {
  const int r = row + 1;
  const int c = col + 1;
  if (c > n || r > n) return std::nullopt;
  auto x = [](int i) { return ZigzagFactor{false, i}; };
  auto y = [](int i) { return ZigzagFactor{true, i}; };
  if (r == 1) {
    if (c == 1) return ZigzagTerm{+1, x(0), x(1)};
    if (c == 2) return ZigzagTerm{+1, x(0), y(1)};
    return std::nullopt;
  }
  if (r % 2 == 0) {
    const int j = r / 2;
    if (c == 2 * j - 1) return ZigzagTerm{-1, y(2 * j - 1), x(2 * j)};
    if (c == 2 * j) return ZigzagTerm{+1, x(2 * j - 1), x(2 * j)};
    if (c == 2 * j + 1) return ZigzagTerm{+1, y(2 * j), x(2 * j + 1)};
    if (c == 2 * j + 2) return ZigzagTerm{+1, y(2 * j), y(2 * j + 1)};
    return std::nullopt;
  }
  const int j = (r - 1) / 2;
  if (c == 2 * j - 1) return ZigzagTerm{+1, y(2 * j - 1), y(2 * j)};
  if (c == 2 * j) return ZigzagTerm{-1, x(2 * j - 1), y(2 * j)};
  if (c == 2 * j + 1) return ZigzagTerm{+1, x(2 * j), x(2 * j + 1)};
  if (c == 2 * j + 2) return ZigzagTerm{+1, x(2 * j), y(2 * j + 1)};
  return std::nullopt;
}

}  // namespace orthopat::detail
