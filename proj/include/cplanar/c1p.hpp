#pragma once

#include <cplanar/graph.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace cplanar {

/// Dense 0/1 matrix with optional provenance labels for rows and columns.
struct BinaryMatrix {
  int cols = 0;
  std::vector<std::vector<char>> rows;
  std::vector<std::string> column_labels;
  std::vector<std::string> row_labels;

  BinaryMatrix() = default;
  explicit BinaryMatrix(int num_cols) : cols(num_cols), column_labels(static_cast<std::size_t>(num_cols)) {}

  int num_rows() const { return static_cast<int>(rows.size()); }

  int add_column(std::string label = {}) {
    for (auto& r : rows) r.push_back(0);
    column_labels.push_back(std::move(label));
    return cols++;
  }

  int add_row(std::string label = {}) {
    rows.emplace_back(static_cast<std::size_t>(cols), 0);
    row_labels.push_back(std::move(label));
    return num_rows() - 1;
  }

  /// Parses lines of '0'/'1' characters; blank lines are skipped.
  static BinaryMatrix parse(const std::string& text) {
    BinaryMatrix m;
    std::size_t start = 0;
    bool first = true;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      std::string line = text.substr(start, end - start);
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
      start = end + 1;
      if (line.empty()) {
        if (end == text.size()) break;
        continue;
      }
      if (first) {
        m = BinaryMatrix(static_cast<int>(line.size()));
        first = false;
      }
      if (static_cast<int>(line.size()) != m.cols) throw PreconditionError("matrix rows have different lengths");
      std::vector<char> row;
      for (char ch : line) {
        if (ch != '0' && ch != '1') throw PreconditionError("matrix entries must be 0 or 1");
        row.push_back(ch == '1' ? 1 : 0);
      }
      m.rows.push_back(std::move(row));
      m.row_labels.emplace_back();
      if (end == text.size()) break;
    }
    return m;
  }
};

enum class TieBreak { least, greatest };

/// Whether every row is of the form 0*1*0* after permuting columns by
/// `order` (order[i] = original column shown at position i).
inline bool is_consecutive_ones_order(const BinaryMatrix& m, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != m.cols) return false;
  std::vector<char> seen(static_cast<std::size_t>(m.cols), 0);
  for (int c : order) {
    if (c < 0 || c >= m.cols || seen[c]) return false;
    seen[c] = 1;
  }
  for (const auto& row : m.rows) {
    int state = 0;  // 0: before run, 1: in run, 2: after run
    for (int c : order) {
      if (row[c]) {
        if (state == 2) return false;
        state = 1;
      } else if (state == 1) {
        state = 2;
      }
    }
  }
  return true;
}

/// PQ-tree over leaves 0..n-1 supporting reduction by a leaf subset.
class PqTree {
 public:
  enum class Kind { leaf, p, q };

  explicit PqTree(int num_leaves) : num_leaves_(num_leaves) {
    for (int i = 0; i < num_leaves; ++i) nodes_.push_back({Kind::leaf, i, {}});
    if (num_leaves == 1) {
      root_ = 0;
    } else if (num_leaves > 1) {
      std::vector<int> children(static_cast<std::size_t>(num_leaves));
      for (int i = 0; i < num_leaves; ++i) children[i] = i;
      root_ = new_node(Kind::p, std::move(children));
    }
  }

  /// Restricts the represented orders to those where `leaves` are consecutive.
  /// Returns false if no order survives (the tree is then unusable).
  bool reduce(const std::vector<int>& leaves) {
    if (leaves.size() <= 1 || static_cast<int>(leaves.size()) >= num_leaves_) return true;
    in_set_.assign(static_cast<std::size_t>(num_leaves_), 0);
    for (int l : leaves) in_set_[l] = 1;
    target_ = static_cast<int>(leaves.size());
    count_.assign(nodes_.size(), 0);
    size_.assign(nodes_.size(), 0);
    tally(root_);
    int r = root_;
    while (true) {
      int next = -1;
      for (int c : nodes_[r].children) {
        if (count_[c] == target_) next = c;
      }
      if (next < 0) break;
      r = next;
    }
    if (count_[r] == size_[r]) return true;
    return reduce_root(r);
  }

  /// A frontier of the tree; `least` gives the lexicographically least order
  /// among all represented orders, `greatest` the lexicographically greatest.
  std::vector<int> frontier(TieBreak tie = TieBreak::least) const {
    if (root_ < 0) return {};
    return extreme_frontier(root_, tie);
  }

 private:
  enum class Status { empty, partial, full };

  struct Node {
    Kind kind;
    int leaf;
    std::vector<int> children;
  };

  int new_node(Kind k, std::vector<int> children) {
    nodes_.push_back({k, -1, std::move(children)});
    count_.push_back(0);
    size_.push_back(0);
    return static_cast<int>(nodes_.size()) - 1;
  }

  void tally(int x) {
    if (nodes_[x].kind == Kind::leaf) {
      size_[x] = 1;
      count_[x] = in_set_[nodes_[x].leaf];
      return;
    }
    int s = 0, c = 0;
    for (int ch : nodes_[x].children) {
      tally(ch);
      s += size_[ch];
      c += count_[ch];
    }
    size_[x] = s;
    count_[x] = c;
  }

  Status status(int x) const {
    if (count_[x] == 0) return Status::empty;
    if (count_[x] == size_[x]) return Status::full;
    return Status::partial;
  }

  int group(const std::vector<int>& members) {
    if (members.size() == 1) return members.front();
    int id = new_node(Kind::p, members);
    int s = 0, c = 0;
    for (int m : members) {
      s += size_[m];
      c += count_[m];
    }
    size_[id] = s;
    count_[id] = c;
    return id;
  }

  /// Rearranges a partial non-root node into a sequence of subtrees whose
  /// full leaves form a suffix.
  bool chain(int x, std::vector<int>& out) {
    const Node node = nodes_[x];
    if (node.kind == Kind::p) {
      std::vector<int> empty, full, partial;
      for (int c : node.children) {
        switch (status(c)) {
          case Status::empty: empty.push_back(c); break;
          case Status::full: full.push_back(c); break;
          case Status::partial: partial.push_back(c); break;
        }
      }
      if (partial.size() > 1) return false;
      if (!empty.empty()) out.push_back(group(empty));
      if (!partial.empty() && !chain(partial.front(), out)) return false;
      if (!full.empty()) out.push_back(group(full));
      return true;
    }
    // Q-node: children must read empty* partial? full*, possibly reversed.
    std::vector<int> seq = node.children;
    if (!matches_single(seq)) {
      std::reverse(seq.begin(), seq.end());
      if (!matches_single(seq)) return false;
    }
    for (int c : seq) {
      if (status(c) == Status::partial) {
        if (!chain(c, out)) return false;
      } else {
        out.push_back(c);
      }
    }
    return true;
  }

  bool matches_single(const std::vector<int>& seq) const {
    std::size_t i = 0;
    while (i < seq.size() && status(seq[i]) == Status::empty) ++i;
    if (i < seq.size() && status(seq[i]) == Status::partial) ++i;
    while (i < seq.size() && status(seq[i]) == Status::full) ++i;
    return i == seq.size();
  }

  bool reduce_root(int r) {
    const Node node = nodes_[r];
    if (node.kind == Kind::p) {
      std::vector<int> empty, full, partial;
      for (int c : node.children) {
        switch (status(c)) {
          case Status::empty: empty.push_back(c); break;
          case Status::full: full.push_back(c); break;
          case Status::partial: partial.push_back(c); break;
        }
      }
      if (partial.size() > 2) return false;
      if (partial.empty()) {
        empty.push_back(group(full));
        nodes_[r].children = std::move(empty);
        return true;
      }
      std::vector<int> seq;
      if (!chain(partial[0], seq)) return false;
      if (!full.empty()) seq.push_back(group(full));
      if (partial.size() == 2) {
        std::vector<int> right;
        if (!chain(partial[1], right)) return false;
        seq.insert(seq.end(), right.rbegin(), right.rend());
      }
      if (empty.empty()) {
        nodes_[r].kind = Kind::q;
        nodes_[r].children = std::move(seq);
      } else {
        empty.push_back(new_node(Kind::q, std::move(seq)));
        nodes_[r].children = std::move(empty);
      }
      return true;
    }
    // Q-node root: empty* partial? full* partial? empty*.
    const auto& seq = node.children;
    std::size_t i = 0;
    while (i < seq.size() && status(seq[i]) == Status::empty) ++i;
    std::size_t left = seq.size(), right = seq.size();
    if (i < seq.size() && status(seq[i]) == Status::partial) left = i++;
    while (i < seq.size() && status(seq[i]) == Status::full) ++i;
    if (i < seq.size() && status(seq[i]) == Status::partial) right = i++;
    while (i < seq.size() && status(seq[i]) == Status::empty) ++i;
    if (i != seq.size()) return false;
    std::vector<int> out;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (k == left) {
        if (!chain(seq[k], out)) return false;
      } else if (k == right) {
        std::vector<int> part;
        if (!chain(seq[k], part)) return false;
        out.insert(out.end(), part.rbegin(), part.rend());
      } else {
        out.push_back(seq[k]);
      }
    }
    nodes_[r].children = std::move(out);
    return true;
  }

  std::vector<int> extreme_frontier(int x, TieBreak tie) const {
    const Node& node = nodes_[x];
    if (node.kind == Kind::leaf) return {node.leaf};
    std::vector<std::vector<int>> parts;
    for (int c : node.children) parts.push_back(extreme_frontier(c, tie));
    const bool least = tie == TieBreak::least;
    if (node.kind == Kind::p) {
      std::sort(parts.begin(), parts.end(), [&](const auto& a, const auto& b) {
        return least ? a.front() < b.front() : a.front() > b.front();
      });
    } else {
      const int first = parts.front().front();
      const int last = parts.back().front();
      if (least ? last < first : last > first) std::reverse(parts.begin(), parts.end());
    }
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  }

  int num_leaves_;
  int root_ = -1;
  std::vector<Node> nodes_;
  std::vector<char> in_set_;
  std::vector<int> count_;
  std::vector<int> size_;
  int target_ = 0;
};

/// Consecutive-ones ordering via PQ-tree reduction, or nullopt if the matrix
/// lacks the consecutive-ones property.
inline std::optional<std::vector<int>> c1p_order(const BinaryMatrix& m, TieBreak tie = TieBreak::least) {
  PqTree tree(m.cols);
  std::vector<int> leaves;
  for (const auto& row : m.rows) {
    leaves.clear();
    for (int c = 0; c < m.cols; ++c) {
      if (row[c]) leaves.push_back(c);
    }
    if (!tree.reduce(leaves)) return std::nullopt;
  }
  return tree.frontier(tie);
}

/// Default column limit of the exhaustive search.
inline constexpr int kNaiveMaxColumns = 10;

/// Backtracking search over column permutations in lexicographic order (with
/// prefix pruning). Returns the lexicographically least ordering.
inline std::optional<std::vector<int>> c1p_naive(const BinaryMatrix& m, int max_cols = kNaiveMaxColumns) {
  if (m.cols > max_cols) throw PreconditionError("c1p_naive: too many columns");
  const int nr = m.num_rows();
  std::vector<int> remaining(static_cast<std::size_t>(nr), 0);
  for (int r = 0; r < nr; ++r) {
    for (char x : m.rows[r]) remaining[r] += x;
  }
  std::vector<int> state(static_cast<std::size_t>(nr), 0);
  std::vector<int> order;
  std::vector<char> used(static_cast<std::size_t>(m.cols), 0);

  auto search = [&](auto&& self) -> bool {
    if (static_cast<int>(order.size()) == m.cols) return true;
    for (int c = 0; c < m.cols; ++c) {
      if (used[c]) continue;
      auto saved_state = state;
      auto saved_remaining = remaining;
      bool ok = true;
      for (int r = 0; r < nr && ok; ++r) {
        if (m.rows[r][c]) {
          if (state[r] == 2) ok = false;
          state[r] = 1;
          --remaining[r];
        } else if (state[r] == 1) {
          if (remaining[r] > 0) ok = false;
          state[r] = 2;
        }
      }
      if (ok) {
        used[c] = 1;
        order.push_back(c);
        if (self(self)) return true;
        order.pop_back();
        used[c] = 0;
      }
      state = std::move(saved_state);
      remaining = std::move(saved_remaining);
    }
    return false;
  };
  if (search(search)) return order;
  return std::nullopt;
}

}  // namespace cplanar
