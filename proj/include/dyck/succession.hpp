#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include "dyck/path.hpp"

namespace dyck {

/// Succession-rule label (k, i): k sons (the last-descent length for
/// non-root nodes) and i the height of the lowest valley. The root of the
/// size-n tree carries (n-1, n-1) by convention.
struct Label {
  int k = 0;
  int i = 0;

  bool is_leaf() const noexcept { return i == 0; }

  friend bool operator==(const Label&, const Label&) = default;
};

std::ostream& operator<<(std::ostream& os, const Label& l);
/// "(k,i)"
std::string to_string(const Label& l);
Label parse_label(std::string_view text);

/// Label of `w` inside the size-n tree. The n = 1 root gets (0, 0).
Label label_of(const DyckWord& w);

/// Son s (1-based, equal to the son's last-descent length) of a node labelled
/// `parent`.
constexpr Label son_label(Label parent, int s) noexcept {
  return s <= parent.i ? Label{s, s - 1} : Label{s, parent.i - 1};
}

/// Production in increasing last-descent order:
/// (k,i) -> (1,0)(2,1)...(i,i-1)(i+1,i-1)...(k,i-1). Leaves produce nothing.
std::vector<Label> produce(Label l);

/// The same production in the generator's visiting order (firstborn first).
inline auto produce_firstborn_first(const std::vector<Label>& production) {
  return production | std::views::reverse;
}

/// Abstract generating tree of labels, stored breadth-first so that the sons
/// of a node are contiguous.
class LabelTree {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Node {
    Label label;
    int level = 0;
    std::size_t parent = npos;
    std::size_t first_child = npos;
    std::size_t child_count = 0;
  };

  LabelTree() = default;
  LabelTree(int n, std::vector<Node> nodes);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const Node& node(std::size_t id) const { return nodes_.at(id); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  /// Node count on each level, root level first.
  const std::vector<std::size_t>& level_counts() const noexcept { return level_counts_; }
  /// Node ids in depth-first preorder, sons firstborn (largest k) first.
  std::vector<std::size_t> preorder_ids() const;

 private:
  int n_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::size_t> level_counts_;
};

inline constexpr int kDefaultLabelTreeCap = 18;

/// Expands the rule from the axis (n-1, n-1). Sons are stored firstborn first.
LabelTree build_label_tree(int n, int cap = kDefaultLabelTreeCap);

/// Indented text dump (two spaces per level) followed by per-level counts.
void write_indented(std::ostream& os, const LabelTree& tree);
/// DOT dump; node ids are preorder indices, matching the Dn-tree DOT output.
void write_dot(std::ostream& os, const LabelTree& tree);

struct LabelMismatch {
  DyckWord word;
  Label expected;
  Label actual;
};

struct CorrespondenceReport {
  bool ok = true;
  std::size_t nodes_checked = 0;
  std::optional<LabelMismatch> mismatch;
  std::string detail;  // human-readable description of the first failure
};

/// Walks the theta tree and the label tree together, firstborn first, and
/// checks that every path's own label equals the label the production
/// predicts for its position and that child counts agree.
CorrespondenceReport verify_correspondence(int n);

}  // namespace dyck
