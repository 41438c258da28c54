#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "dyck/path.hpp"

namespace dyck {

/// Sons of `w` under theta, firstborn (longest last descent) first.
///
/// The boundary steps are stripped and a peak is inserted at each point of
/// the remaining trailing descent. At the root the topmost point is skipped,
/// since inserting there rebuilds the root itself. Paths that are not active
/// have no sons.
///
/// Throws std::invalid_argument if `is_root` is set but `w` is not p_n.
std::vector<DyckWord> theta_children(const DyckWord& w, bool is_root);

/// Parent of `w`: drop the rightmost peak, then wrap the result in one up and
/// one down step. Throws std::invalid_argument when `w` is the root.
DyckWord theta_inverse(const DyckWord& w);

inline constexpr int kDefaultTreeCap = 18;

/// Rooted generating tree over all Dyck words of one semilength. Nodes are
/// stored breadth-first; sons of a node are contiguous and firstborn first.
class DnTree {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Node {
    DyckWord word;
    int level = 0;
    std::size_t parent = npos;
    std::size_t first_child = npos;
    std::size_t child_count = 0;
  };

  DnTree() = default;
  DnTree(int n, std::vector<Node> nodes);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const Node& root() const { return nodes_.front(); }
  const Node& node(std::size_t id) const { return nodes_.at(id); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<std::size_t>& level_counts() const noexcept { return level_counts_; }
  std::vector<std::size_t> preorder_ids() const;

 private:
  int n_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::size_t> level_counts_;
};

/// Throws CapExceeded for n > cap, std::invalid_argument for n < 1.
DnTree build_tree(int n, int cap = kDefaultTreeCap);

/// Depth-first preorder, sons firstborn first.
std::vector<DyckWord> preorder(const DnTree& t);

/// Streams the tree in preorder without materializing it. The visitor is
/// called as visit(word, level).
template <class Visitor>
void walk_preorder(int n, Visitor&& visit) {
  struct Walker {
    Visitor& visit;
    void operator()(const DyckWord& w, int level, bool root) {
      visit(w, level);
      for (const auto& child : theta_children(w, root)) (*this)(child, level + 1, false);
    }
  };
  Walker{visit}(max_path(n), 0, true);
}

/// Per-level node counts via walk_preorder; usable beyond the build_tree cap.
std::vector<std::size_t> level_counts(int n);

/// One digraph; nodes labelled "<word> (k,i)", ids n<preorder index>, edges in
/// sibling order, per-level counts as trailing comments.
void write_dot(std::ostream& os, const DnTree& t);

/// Indented text dump of words and labels.
void write_indented(std::ostream& os, const DnTree& t);

}  // namespace dyck
