#include "dyck/theta_tree.hpp"

#include <ostream>
#include <stdexcept>

#include "dyck/errors.hpp"
#include "dyck/succession.hpp"

namespace dyck {

std::vector<DyckWord> theta_children(const DyckWord& w, bool is_root) {
  if (is_root && !is_max_path(w)) {
    throw std::invalid_argument("theta_children: root flag set on " + w.to_string());
  }
  if (w.empty() || (!is_root && !is_active(w))) return {};

  // Inner word without the boundary steps; its trailing descent has k-1 steps
  // and therefore k points, numbered t = 0 (top) .. k-1 (axis).
  const auto bits = w.bits();
  const auto inner = bits.subspan(1, bits.size() - 2);
  const int inner_descent = last_descent_length(w) - 1;
  const std::size_t prefix_len = inner.size() - static_cast<std::size_t>(inner_descent);

  std::vector<DyckWord> sons;
  sons.reserve(static_cast<std::size_t>(inner_descent) + 1);
  for (int t = is_root ? 1 : 0; t <= inner_descent; ++t) {
    std::vector<std::uint8_t> son(inner.begin(), inner.begin() + static_cast<std::ptrdiff_t>(prefix_len));
    son.insert(son.end(), static_cast<std::size_t>(t), kDown);
    son.push_back(kUp);
    son.push_back(kDown);
    son.insert(son.end(), static_cast<std::size_t>(inner_descent - t), kDown);
    sons.push_back(DyckWord::from_bits_unchecked(std::move(son)));
  }
  return sons;
}

DyckWord theta_inverse(const DyckWord& w) {
  if (w.empty() || is_max_path(w)) {
    throw std::invalid_argument("theta_inverse: the root has no parent");
  }
  const std::size_t peak = w.size() - static_cast<std::size_t>(last_descent_length(w)) - 1;
  std::vector<std::uint8_t> parent;
  parent.reserve(w.size());
  parent.push_back(kUp);
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j != peak && j != peak + 1) parent.push_back(w[j]);
  }
  parent.push_back(kDown);
  return DyckWord::from_bits_unchecked(std::move(parent));
}

DnTree::DnTree(int n, std::vector<Node> nodes) : n_(n), nodes_(std::move(nodes)) {
  for (const auto& node : nodes_) {
    const auto level = static_cast<std::size_t>(node.level);
    if (level_counts_.size() <= level) level_counts_.resize(level + 1, 0);
    ++level_counts_[level];
  }
}

std::vector<std::size_t> DnTree::preorder_ids() const {
  std::vector<std::size_t> order;
  if (nodes_.empty()) return order;
  order.reserve(nodes_.size());
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    order.push_back(id);
    const Node& node = nodes_[id];
    for (std::size_t c = node.child_count; c > 0; --c) stack.push_back(node.first_child + c - 1);
  }
  return order;
}

DnTree build_tree(int n, int cap) {
  if (n < 1) throw std::invalid_argument("build_tree: semilength must be >= 1");
  if (n > cap) throw CapExceeded("build_tree", n, cap);

  std::vector<DnTree::Node> nodes;
  nodes.push_back({max_path(n), 0, DnTree::npos, DnTree::npos, 0});
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    auto sons = theta_children(nodes[id].word, id == 0);
    if (sons.empty()) continue;
    const int level = nodes[id].level + 1;
    nodes[id].first_child = nodes.size();
    nodes[id].child_count = sons.size();
    for (auto& son : sons) nodes.push_back({std::move(son), level, id, DnTree::npos, 0});
  }
  return DnTree(n, std::move(nodes));
}

std::vector<DyckWord> preorder(const DnTree& t) {
  std::vector<DyckWord> words;
  words.reserve(t.size());
  for (std::size_t id : t.preorder_ids()) words.push_back(t.node(id).word);
  return words;
}

std::vector<std::size_t> level_counts(int n) {
  std::vector<std::size_t> counts;
  walk_preorder(n, [&](const DyckWord&, int level) {
    const auto l = static_cast<std::size_t>(level);
    if (counts.size() <= l) counts.resize(l + 1, 0);
    ++counts[l];
  });
  return counts;
}

void write_dot(std::ostream& os, const DnTree& t) {
  const auto order = t.preorder_ids();
  std::vector<std::size_t> rank(t.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  os << "digraph D" << t.n() << " {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto& node = t.node(order[r]);
    os << "  n" << r << " [label=\"" << node.word.to_string() << ' ' << label_of(node.word)
       << "\"];\n";
  }
  for (std::size_t id : order) {
    const auto& node = t.node(id);
    for (std::size_t c = 0; c < node.child_count; ++c) {
      os << "  n" << rank[id] << " -> n" << rank[node.first_child + c] << ";\n";
    }
  }
  for (std::size_t level = 0; level < t.level_counts().size(); ++level) {
    os << "  // level " << level << ": " << t.level_counts()[level] << '\n';
  }
  os << "}\n";
}

void write_indented(std::ostream& os, const DnTree& t) {
  for (std::size_t id : t.preorder_ids()) {
    const auto& node = t.node(id);
    os << std::string(2 * static_cast<std::size_t>(node.level), ' ') << node.word.to_string()
       << ' ' << label_of(node.word) << '\n';
  }
  os << "# levels:";
  for (auto c : t.level_counts()) os << ' ' << c;
  os << "\n# nodes: " << t.size() << '\n';
}

}  // namespace dyck
