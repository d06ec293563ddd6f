#include "prelie/grafting.hpp"

#include <stdexcept>

namespace prelie {

namespace {

void check_total_degree(std::optional<int> a, std::optional<int> b) {
  if (a && b && *a + *b > 1)
    throw std::invalid_argument("total degree >= 2: the quotient by (o*o) is out of scope");
}

// All |vertices(host)| trees obtained by attaching guest as a new child of
// one vertex of host.
void graft_everywhere(const Tree& host, const Tree& guest, std::vector<Tree>& out) {
  std::vector<Tree> at_root = host.children();
  at_root.push_back(guest);
  out.push_back(Tree(host.label(), std::move(at_root)));
  for (std::size_t i = 0; i < host.children().size(); ++i) {
    std::vector<Tree> inner;
    graft_everywhere(host.children()[i], guest, inner);
    for (Tree& sub : inner) {
      std::vector<Tree> rebuilt = host.children();
      rebuilt[i] = std::move(sub);
      out.push_back(Tree(host.label(), std::move(rebuilt)));
    }
  }
}

// Mutable working copy used for simultaneous multi-grafting.
struct Node {
  int label;
  std::vector<Node> children;
};

Node to_node(const Tree& t) {
  Node n{t.label(), {}};
  n.children.reserve(t.children().size());
  for (const Tree& child : t.children()) n.children.push_back(to_node(child));
  return n;
}

Tree to_tree(const Node& n) {
  std::vector<Tree> children;
  children.reserve(n.children.size());
  for (const Node& child : n.children) children.push_back(to_tree(child));
  return Tree(n.label, std::move(children));
}

// Guests are appended through the collected pointers, so every children
// vector must have capacity for them up front: a push_back that reallocates
// would dangle the pointers into that vector.
void reserve_slack(Node& n, std::size_t extra) {
  n.children.reserve(n.children.size() + extra);
  for (Node& child : n.children) reserve_slack(child, extra);
}

void collect(Node& n, std::vector<Node*>& out) {
  out.push_back(&n);
  for (Node& child : n.children) collect(child, out);
}

// Sum over all functions f : args -> vertices(x) of grafting each argument
// at its assigned vertex.
TreeVector brace_trees(const Tree& x, const std::vector<Tree>& args) {
  TreeVector result;
  const int vertex_count = x.vertex_count();
  std::vector<int> assignment(args.size(), 0);
  while (true) {
    Node work = to_node(x);
    reserve_slack(work, args.size());
    std::vector<Node*> vertices;
    collect(work, vertices);
    for (std::size_t i = 0; i < args.size(); ++i)
      vertices[assignment[i]]->children.push_back(to_node(args[i]));
    result.add(to_tree(work), 1);
    std::size_t pos = 0;
    while (pos < assignment.size() && ++assignment[pos] == vertex_count) assignment[pos++] = 0;
    if (pos == assignment.size()) break;
  }
  return result;
}

}  // namespace

std::optional<int> homogeneous_degree(const TreeVector& x) {
  std::optional<int> degree;
  for (const auto& [tree, coeff] : x) {
    if (!degree) {
      degree = tree.degree();
    } else if (*degree != tree.degree()) {
      throw std::invalid_argument("tree vector is not homogeneous in degree");
    }
  }
  return degree;
}

TreeVector star(const TreeVector& x, const TreeVector& y) {
  check_total_degree(homogeneous_degree(x), homogeneous_degree(y));
  TreeVector result;
  std::vector<Tree> grafted;
  for (const auto& [tx, cx] : x) {
    for (const auto& [ty, cy] : y) {
      grafted.clear();
      graft_everywhere(tx, ty, grafted);
      const Rational coeff = cx * cy;
      for (Tree& t : grafted) result.add(std::move(t), coeff);
    }
  }
  return result;
}

TreeVector brace(const TreeVector& x, const std::vector<TreeVector>& args) {
  if (args.empty()) return x;
  std::optional<int> total = homogeneous_degree(x);
  for (const TreeVector& arg : args) {
    auto d = homogeneous_degree(arg);
    if (d && total) {
      if (*total + *d > 1)
        throw std::invalid_argument("total degree >= 2: the quotient by (o*o) is out of scope");
      *total += *d;
    }
  }
  TreeVector result;
  // multilinear expansion over the basis terms of x and every argument
  std::vector<std::vector<std::pair<Tree, Rational>>> term_lists;
  term_lists.reserve(args.size());
  for (const TreeVector& arg : args)
    term_lists.emplace_back(arg.begin(), arg.end());
  for (const auto& list : term_lists)
    if (list.empty()) return TreeVector{};
  for (const auto& [tx, cx] : x) {
    std::vector<std::size_t> pick(args.size(), 0);
    while (true) {
      Rational coeff = cx;
      std::vector<Tree> chosen;
      chosen.reserve(args.size());
      for (std::size_t i = 0; i < args.size(); ++i) {
        chosen.push_back(term_lists[i][pick[i]].first);
        coeff *= term_lists[i][pick[i]].second;
      }
      result += coeff * brace_trees(tx, chosen);
      std::size_t pos = 0;
      while (pos < pick.size() && ++pick[pos] == term_lists[pos].size()) pick[pos++] = 0;
      if (pos == pick.size()) break;
    }
  }
  return result;
}

TreeVector bracket(const TreeVector& x, const TreeVector& y) {
  auto dx = homogeneous_degree(x);
  auto dy = homogeneous_degree(y);
  if ((dx && *dx != 0) || (dy && *dy != 0))
    throw std::invalid_argument("bracket expects degree-0 operands");
  return star(x, y) - star(y, x);
}

TreeVector associator(const TreeVector& x, const TreeVector& y, const TreeVector& z) {
  return star(star(x, y), z) - star(x, star(y, z));
}

}  // namespace prelie
