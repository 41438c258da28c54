#include "dyck/succession.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dyck/errors.hpp"
#include "dyck/theta_tree.hpp"

namespace dyck {

std::ostream& operator<<(std::ostream& os, const Label& l) {
  return os << '(' << l.k << ',' << l.i << ')';
}

std::string to_string(const Label& l) {
  return '(' + std::to_string(l.k) + ',' + std::to_string(l.i) + ')';
}

Label parse_label(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("malformed label: " + std::string(text)); };
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') throw fail();
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw fail();
  Label l;
  const char* end_k = text.data() + comma;
  const char* end_i = text.data() + text.size() - 1;
  auto rk = std::from_chars(text.data() + 1, end_k, l.k);
  auto ri = std::from_chars(end_k + 1, end_i, l.i);
  if (rk.ec != std::errc{} || rk.ptr != end_k || ri.ec != std::errc{} || ri.ptr != end_i) {
    throw fail();
  }
  return l;
}

Label label_of(const DyckWord& w) {
  if (w.empty()) throw std::invalid_argument("label_of: empty word");
  if (is_max_path(w)) {
    const int n = w.semilength();
    return {n - 1, n - 1};
  }
  // Only p_n lacks valleys, so the lowest valley exists here.
  return {last_descent_length(w), lowest_valley(w).value()};
}

std::vector<Label> produce(Label l) {
  std::vector<Label> sons;
  if (l.i == 0) return sons;
  sons.reserve(static_cast<std::size_t>(l.k));
  for (int s = 1; s <= l.k; ++s) sons.push_back(son_label(l, s));
  return sons;
}

LabelTree::LabelTree(int n, std::vector<Node> nodes) : n_(n), nodes_(std::move(nodes)) {
  for (const auto& node : nodes_) {
    const auto level = static_cast<std::size_t>(node.level);
    if (level_counts_.size() <= level) level_counts_.resize(level + 1, 0);
    ++level_counts_[level];
  }
}

std::vector<std::size_t> LabelTree::preorder_ids() const {
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

LabelTree build_label_tree(int n, int cap) {
  if (n < 1) throw std::invalid_argument("build_label_tree: semilength must be >= 1");
  if (n > cap) throw CapExceeded("build_label_tree", n, cap);

  std::vector<LabelTree::Node> nodes;
  nodes.push_back({Label{n - 1, n - 1}, 0, LabelTree::npos, LabelTree::npos, 0});
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const Label parent = nodes[id].label;
    const int level = nodes[id].level + 1;
    // The n = 1 root (0,0) is a leaf; every other root has n-1 >= 1 sons.
    const auto production = produce(parent);
    if (production.empty()) continue;
    nodes[id].first_child = nodes.size();
    nodes[id].child_count = production.size();
    for (const Label& son : produce_firstborn_first(production)) {
      nodes.push_back({son, level, id, LabelTree::npos, 0});
    }
  }
  return LabelTree(n, std::move(nodes));
}

void write_indented(std::ostream& os, const LabelTree& tree) {
  for (std::size_t id : tree.preorder_ids()) {
    const auto& node = tree.node(id);
    os << std::string(2 * static_cast<std::size_t>(node.level), ' ') << node.label << '\n';
  }
  os << "# levels:";
  for (auto c : tree.level_counts()) os << ' ' << c;
  os << "\n# nodes: " << tree.size() << '\n';
}

void write_dot(std::ostream& os, const LabelTree& tree) {
  const auto order = tree.preorder_ids();
  std::vector<std::size_t> rank(tree.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  os << "digraph L" << tree.n() << " {\n";
  os << "  node [shape=ellipse];\n";
  for (std::size_t r = 0; r < order.size(); ++r) {
    os << "  n" << r << " [label=\"" << tree.node(order[r]).label << "\"];\n";
  }
  for (std::size_t id : order) {
    const auto& node = tree.node(id);
    for (std::size_t c = 0; c < node.child_count; ++c) {
      os << "  n" << rank[id] << " -> n" << rank[node.first_child + c] << ";\n";
    }
  }
  for (std::size_t level = 0; level < tree.level_counts().size(); ++level) {
    os << "  // level " << level << ": " << tree.level_counts()[level] << '\n';
  }
  os << "}\n";
}

namespace {

struct LockstepWalk {
  CorrespondenceReport& report;

  bool operator()(const DyckWord& w, bool root, Label predicted) {
    ++report.nodes_checked;
    const Label actual = label_of(w);
    if (actual != predicted) {
      report.ok = false;
      report.mismatch = LabelMismatch{w, predicted, actual};
      std::ostringstream os;
      os << "label mismatch at " << w.to_string() << ": expected " << predicted << ", got "
         << actual;
      report.detail = os.str();
      return false;
    }
    const auto sons = theta_children(w, root);
    const auto production = produce(predicted);
    if (sons.size() != production.size()) {
      report.ok = false;
      std::ostringstream os;
      os << "child count mismatch at " << w.to_string() << ": theta gives " << sons.size()
         << ", production " << predicted << " gives " << production.size();
      report.detail = os.str();
      return false;
    }
    auto label_it = produce_firstborn_first(production).begin();
    for (const auto& son : sons) {
      if (!(*this)(son, false, *label_it++)) return false;
    }
    return true;
  }
};

}  // namespace

CorrespondenceReport verify_correspondence(int n) {
  if (n < 1) throw std::invalid_argument("verify_correspondence: semilength must be >= 1");
  CorrespondenceReport report;
  LockstepWalk{report}(max_path(n), true, Label{n - 1, n - 1});
  return report;
}

}  // namespace dyck
