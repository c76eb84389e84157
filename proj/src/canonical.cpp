// Canonical forms under equivalence (independent row/column permutations)
// and congruence (one simultaneous permutation).
//
// Both searches build the result row by row. Positions not yet fixed are kept
// as an ordered partition into cells; inside a cell every fixed row agrees,
// so the best completion of the next row puts its ones first in each cell.
// Only rows attaining the best key can lead to the canonical form, and ties
// are explored exhaustively.

#include <algorithm>

#include "orthopat/pattern.hpp"

namespace orthopat {

namespace {

using Key = std::uint64_t;  // position 0 is the most significant bit

struct Cell {
  int begin;
  int end;
};

// Three-way comparison of lhs[0..depth] and rhs[0..depth].
int compare_prefix(const std::vector<Key>& lhs, const std::vector<Key>& rhs, int depth) {
  for (int i = 0; i <= depth; ++i) {
    if (lhs[i] != rhs[i]) return lhs[i] > rhs[i] ? 1 : -1;
  }
  return 0;
}

Key bits_at(int begin, int count) {
  if (count == 0) return 0;
  const Key run = count >= 64 ? ~Key{0} : ((Key{1} << count) - 1);
  return run << (64 - begin - count);
}

class EquivalenceSearch {
 public:
  explicit EquivalenceSearch(const ZeroPattern& p) : p_(p), n_(p.n()) {}

  EquivalenceForm run() {
    std::vector<int> cols(n_);
    for (int j = 0; j < n_; ++j) cols[j] = j;
    std::vector<Cell> cells{{0, n_}};
    std::vector<int> placed;
    std::vector<char> used(n_, 0);
    keys_.assign(n_, 0);
    dfs(0, cols, cells, placed, used);

    EquivalenceForm out{ZeroPattern(n_), PermPair::identity(n_)};
    for (int pos = 0; pos < n_; ++pos) {
      out.witness.row_perm[best_rows_[pos]] = pos;
      out.witness.col_perm[best_cols_[pos]] = pos;
    }
    out.pattern = apply_perms(p_, out.witness);
    return out;
  }

 private:
  Key key_for(RowMask row, const std::vector<int>& cols, const std::vector<Cell>& cells) const {
    Key key = 0;
    for (const Cell& c : cells) {
      int count = 0;
      for (int pos = c.begin; pos < c.end; ++pos) count += (row >> cols[pos]) & 1U;
      key |= bits_at(c.begin, count);
    }
    return key;
  }

  void dfs(int depth, const std::vector<int>& cols, const std::vector<Cell>& cells,
           std::vector<int>& placed, std::vector<char>& used) {
    if (depth == n_) {
      if (!have_best_ || compare_prefix(keys_, best_keys_, n_ - 1) > 0) {
        have_best_ = true;
        best_keys_ = keys_;
        best_rows_ = placed;
        best_cols_ = cols;
      }
      return;
    }
    Key top = 0;
    for (int r = 0; r < n_; ++r)
      if (!used[r]) top = std::max(top, key_for(p_.row(r), cols, cells));
    keys_[depth] = top;
    if (have_best_ && compare_prefix(keys_, best_keys_, depth) < 0) return;

    std::vector<RowMask> tried;
    for (int r = 0; r < n_; ++r) {
      if (used[r]) continue;
      const RowMask row = p_.row(r);
      if (key_for(row, cols, cells) != top) continue;
      if (std::find(tried.begin(), tried.end(), row) != tried.end()) continue;
      tried.push_back(row);

      std::vector<int> next_cols;
      std::vector<Cell> next_cells;
      next_cols.reserve(n_);
      for (const Cell& c : cells) {
        const int start = static_cast<int>(next_cols.size());
        for (int pos = c.begin; pos < c.end; ++pos)
          if ((row >> cols[pos]) & 1U) next_cols.push_back(cols[pos]);
        const int mid = static_cast<int>(next_cols.size());
        for (int pos = c.begin; pos < c.end; ++pos)
          if (!((row >> cols[pos]) & 1U)) next_cols.push_back(cols[pos]);
        const int stop = static_cast<int>(next_cols.size());
        if (mid > start) next_cells.push_back({start, mid});
        if (stop > mid) next_cells.push_back({mid, stop});
      }
      used[r] = 1;
      placed.push_back(r);
      dfs(depth + 1, next_cols, next_cells, placed, used);
      placed.pop_back();
      used[r] = 0;
    }
  }

  const ZeroPattern& p_;
  int n_;
  std::vector<Key> keys_;
  bool have_best_ = false;
  std::vector<Key> best_keys_;
  std::vector<int> best_rows_;
  std::vector<int> best_cols_;
};

class CongruenceSearch {
 public:
  explicit CongruenceSearch(const ZeroPattern& p) : p_(p), n_(p.n()) {}

  CongruenceForm run() {
    std::vector<int> order(n_);
    for (int j = 0; j < n_; ++j) order[j] = j;
    keys_.assign(n_, 0);
    dfs(0, order, {{0, n_}});
    CongruenceForm out{ZeroPattern(n_), std::vector<int>(n_)};
    for (int pos = 0; pos < n_; ++pos) out.witness[best_order_[pos]] = pos;
    out.pattern = apply_congruence(p_, out.witness);
    return out;
  }

 private:
  bool adj(int u, int v) const { return p_(u, v); }

  // order[0..depth) are placed; cells cover [depth, n). Row `depth` goes to u,
  // which must lie in the first cell.
  Key key_for(int u, int depth, const std::vector<int>& order, const std::vector<Cell>& cells) const {
    Key key = 0;
    for (int pos = 0; pos < depth; ++pos)
      if (adj(u, order[pos])) key |= bits_at(pos, 1);
    if (adj(u, u)) key |= bits_at(depth, 1);
    for (const Cell& c : cells) {
      int count = 0;
      for (int pos = c.begin; pos < c.end; ++pos)
        if (order[pos] != u && adj(u, order[pos])) ++count;
      const int begin = c.begin == depth ? depth + 1 : c.begin;
      key |= bits_at(begin, count);
    }
    return key;
  }

  bool twins(int u, int v) const {
    const RowMask mask = ~((RowMask{1} << u) | (RowMask{1} << v));
    return (p_.row(u) & mask) == (p_.row(v) & mask) && adj(u, u) == adj(v, v);
  }

  void dfs(int depth, const std::vector<int>& order, const std::vector<Cell>& cells) {
    if (depth == n_) {
      if (!have_best_ || compare_prefix(keys_, best_keys_, n_ - 1) > 0) {
        have_best_ = true;
        best_keys_ = keys_;
        best_order_ = order;
      }
      return;
    }
    const Cell first = cells.front();
    Key top = 0;
    for (int pos = first.begin; pos < first.end; ++pos)
      top = std::max(top, key_for(order[pos], depth, order, cells));
    keys_[depth] = top;
    if (have_best_ && compare_prefix(keys_, best_keys_, depth) < 0) return;

    std::vector<int> tried;
    for (int pos = first.begin; pos < first.end; ++pos) {
      const int u = order[pos];
      if (key_for(u, depth, order, cells) != top) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int v) { return twins(u, v); })) continue;
      tried.push_back(u);

      std::vector<int> next(order.begin(), order.begin() + depth);
      next.push_back(u);
      std::vector<Cell> next_cells;
      for (const Cell& c : cells) {
        const int start = static_cast<int>(next.size());
        for (int q = c.begin; q < c.end; ++q)
          if (order[q] != u && adj(u, order[q])) next.push_back(order[q]);
        const int mid = static_cast<int>(next.size());
        for (int q = c.begin; q < c.end; ++q)
          if (order[q] != u && !adj(u, order[q])) next.push_back(order[q]);
        const int stop = static_cast<int>(next.size());
        if (mid > start) next_cells.push_back({start, mid});
        if (stop > mid) next_cells.push_back({mid, stop});
      }
      dfs(depth + 1, next, next_cells);
    }
  }

  const ZeroPattern& p_;
  int n_;
  std::vector<Key> keys_;
  bool have_best_ = false;
  std::vector<Key> best_keys_;
  std::vector<int> best_order_;
};

}  // namespace

EquivalenceForm canonical_equivalence(const ZeroPattern& p) {
  EquivalenceForm form = EquivalenceSearch(p).run();
  if (form.pattern == p) form.witness = PermPair::identity(p.n());
  return form;
}

ZeroPattern canonical_class(const ZeroPattern& p) {
  ZeroPattern a = canonical_equivalence(p).pattern;
  ZeroPattern b = canonical_equivalence(p.transpose()).pattern;
  return pattern_precedes(b, a) ? b : a;
}

CongruenceForm canonical_congruence(const ZeroPattern& p) {
  if (!p.is_symmetric()) throw InvalidArgument("canonical_congruence needs a symmetric pattern");
  CongruenceForm form = CongruenceSearch(p).run();
  if (form.pattern == p) {
    form.witness.resize(p.n());
    for (int i = 0; i < p.n(); ++i) form.witness[i] = i;
  }
  return form;
}

namespace {

bool place_rows(const ZeroPattern& p, std::vector<int>& order, std::vector<bool>& used) {
  const int i = static_cast<int>(order.size());
  if (i == p.n()) return true;
  for (int r = 0; r < p.n(); ++r) {
    if (used[r]) continue;
    bool repeat = false;
    for (int q = 0; q < r && !repeat; ++q) repeat = !used[q] && p.row(q) == p.row(r);
    if (repeat) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) ok = p(r, j) == p(order[j], i);
    if (!ok) continue;
    used[r] = true;
    order.push_back(r);
    if (place_rows(p, order, used)) return true;
    order.pop_back();
    used[r] = false;
  }
  return false;
}

}  // namespace

std::optional<ZeroPattern> symmetric_representative(const ZeroPattern& p) {
  std::vector<int> order;
  std::vector<bool> used(p.n(), false);
  if (!place_rows(p, order, used)) return std::nullopt;
  ZeroPattern out(p.n());
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j) out.set(i, j, p(order[i], j));
  return out;
}

}  // namespace orthopat
