#include "prelie/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace prelie {

namespace {

Tree build_from_children(int vertex, const std::vector<int>& labels,
                         const std::vector<std::vector<int>>& child_lists) {
  std::vector<Tree> children;
  children.reserve(child_lists[vertex].size());
  for (int c : child_lists[vertex]) children.push_back(build_from_children(c, labels, child_lists));
  return Tree(labels[vertex], std::move(children));
}

// All rooted labeled trees on the given vertex labels, via parent functions:
// each non-root vertex chooses a parent, candidates failing to reach the root
// are discarded. Count is k^(k-1) for k vertices.
std::vector<Tree> labeled_rooted_trees(const std::vector<int>& labels) {
  const int k = static_cast<int>(labels.size());
  std::vector<Tree> out;
  std::vector<int> parent(k);
  std::vector<int> non_root;
  std::vector<std::vector<int>> child_lists(k);
  for (int root = 0; root < k; ++root) {
    non_root.clear();
    for (int v = 0; v < k; ++v)
      if (v != root) non_root.push_back(v);
    std::vector<int> digits(non_root.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < non_root.size(); ++i) parent[non_root[i]] = digits[i];
      parent[root] = root;
      bool valid = true;
      for (int v = 0; v < k && valid; ++v) {
        int cur = v;
        for (int steps = 0; cur != root; ++steps) {
          if (steps >= k) {
            valid = false;
            break;
          }
          cur = parent[cur];
        }
      }
      if (valid) {
        for (auto& list : child_lists) list.clear();
        for (int v : non_root) child_lists[parent[v]].push_back(v);
        out.push_back(build_from_children(root, labels, child_lists));
      }
      // odometer over parent choices
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == k) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
    if (non_root.empty()) break;  // k == 1: single candidate handled above
  }
  std::sort(out.begin(), out.end());
  return out;
}

Tree substitute(const Tree& t, const std::vector<int>& image) {
  std::vector<Tree> children;
  children.reserve(t.children().size());
  for (const Tree& child : t.children()) children.push_back(substitute(child, image));
  if (t.is_special()) return Tree::special(std::move(children));
  return Tree(image[t.label() - 1], std::move(children));
}

// Multilinear trees composed with every label assignment {1..n} -> {1..m},
// deduped by canonical form.
std::vector<Tree> alphabet_classes(const std::vector<Tree>& multilinear, int n, int m) {
  std::set<Tree> classes;
  std::vector<int> image(n, 1);
  while (true) {
    for (const Tree& t : multilinear) classes.insert(substitute(t, image));
    int pos = 0;
    while (pos < n && ++image[pos] > m) image[pos++] = 1;
    if (pos == n) break;
  }
  return std::vector<Tree>(classes.begin(), classes.end());
}

}  // namespace

std::vector<Tree> enumerate_trees(int n, const LabelMode& mode) {
  if (n < 1) throw std::invalid_argument("enumerate_trees requires n >= 1");
  if (!mode.is_multilinear() && mode.alphabet_size < 1)
    throw std::invalid_argument("alphabet size must be >= 1");
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  std::vector<Tree> multilinear = labeled_rooted_trees(labels);
  if (mode.is_multilinear()) return multilinear;
  return alphabet_classes(multilinear, n, mode.alphabet_size);
}

std::vector<Tree> enumerate_special_trees(int n, const LabelMode& mode) {
  if (n < 0) throw std::invalid_argument("enumerate_special_trees requires n >= 0");
  if (!mode.is_multilinear() && mode.alphabet_size < 1)
    throw std::invalid_argument("alphabet size must be >= 1");
  std::vector<int> labels(n + 1);
  labels[0] = Tree::special_label;
  for (int i = 1; i <= n; ++i) labels[i] = i;
  std::vector<Tree> multilinear = labeled_rooted_trees(labels);
  if (mode.is_multilinear() || n == 0) return multilinear;
  return alphabet_classes(multilinear, n, mode.alphabet_size);
}

}  // namespace prelie
