#include "prelie/blowup.hpp"

#include <bit>
#include <stdexcept>

namespace prelie {

namespace {

struct LocalBlowUp {
  Tree subtree;
  BlowUp::Role role;
  Tree edge_subtree;
  int site;
};

// Blow-ups of the subtree rooted here; the caller grafts them back into the
// surrounding tree. preorder_base is the index of this vertex in the whole
// source tree.
void collect_blow_ups(const Tree& node, int preorder_base, std::vector<LocalBlowUp>& out) {
  const auto& children = node.children();
  const int child_count = static_cast<int>(children.size());

  // choices at this vertex: move the child slots selected by mask under the
  // special vertex
  for (unsigned mask = 1; mask < (1u << child_count); ++mask) {
    std::vector<Tree> moved, kept;
    for (int i = 0; i < child_count; ++i) {
      if (mask & (1u << i))
        moved.push_back(children[i]);
      else
        kept.push_back(children[i]);
    }
    // incoming: the special vertex takes this vertex's position, the vertex
    // drops below it with the kept children
    {
      Tree blown(node.label(), kept);
      std::vector<Tree> special_children = moved;
      special_children.push_back(blown);
      out.push_back({Tree::special(std::move(special_children)), BlowUp::Role::incoming,
                     std::move(blown), preorder_base});
    }
    // outgoing: the special vertex hangs below this vertex and receives the
    // moved children; needs arity >= 2
    if (std::popcount(mask) >= 2) {
      Tree special_part = Tree::special(std::move(moved));
      std::vector<Tree> new_children = kept;
      new_children.push_back(special_part);
      out.push_back({Tree(node.label(), std::move(new_children)), BlowUp::Role::outgoing,
                     std::move(special_part), preorder_base});
    }
  }

  // recurse into children, rebuilding this vertex around each result
  int offset = preorder_base + 1;
  for (int i = 0; i < child_count; ++i) {
    std::vector<LocalBlowUp> inner;
    collect_blow_ups(children[i], offset, inner);
    offset += children[i].vertex_count();
    for (LocalBlowUp& lb : inner) {
      std::vector<Tree> rebuilt = children;
      rebuilt[i] = std::move(lb.subtree);
      out.push_back({Tree(node.label(), std::move(rebuilt)), lb.role, std::move(lb.edge_subtree),
                     lb.site});
    }
  }
}

// Merge the unique special vertex into its parent.
Tree contract_outgoing(const Tree& node) {
  for (std::size_t i = 0; i < node.children().size(); ++i) {
    const Tree& child = node.children()[i];
    if (child.is_special()) {
      std::vector<Tree> merged;
      for (std::size_t j = 0; j < node.children().size(); ++j)
        if (j != i) merged.push_back(node.children()[j]);
      for (const Tree& grand : child.children()) merged.push_back(grand);
      return Tree(node.label(), std::move(merged));
    }
  }
  std::vector<Tree> rebuilt = node.children();
  for (Tree& child : rebuilt) {
    if (child.degree() == 1) {
      child = contract_outgoing(child);
      return Tree(node.label(), std::move(rebuilt));
    }
  }
  throw std::invalid_argument("no special vertex to contract");
}

// Merge the far endpoint of the incoming edge into the special vertex.
Tree contract_incoming(const Tree& node, const Tree& far_endpoint) {
  if (node.is_special()) {
    std::vector<Tree> merged;
    bool removed = false;
    for (const Tree& child : node.children()) {
      if (!removed && child == far_endpoint) {
        removed = true;
        continue;
      }
      merged.push_back(child);
    }
    if (!removed) throw std::invalid_argument("incoming edge endpoint not found");
    for (const Tree& kept : far_endpoint.children()) merged.push_back(kept);
    return Tree(far_endpoint.label(), std::move(merged));
  }
  std::vector<Tree> rebuilt = node.children();
  for (Tree& child : rebuilt) {
    if (child.degree() == 1) {
      child = contract_incoming(child, far_endpoint);
      return Tree(node.label(), std::move(rebuilt));
    }
  }
  throw std::invalid_argument("no special vertex to contract");
}

}  // namespace

std::vector<BlowUp> blow_ups(const Tree& t) {
  if (t.degree() != 0) throw std::invalid_argument("blow_ups expects a degree-0 tree");
  std::vector<LocalBlowUp> local;
  collect_blow_ups(t, 0, local);
  std::vector<BlowUp> out;
  out.reserve(local.size());
  for (LocalBlowUp& lb : local)
    out.push_back({std::move(lb.subtree), lb.role, std::move(lb.edge_subtree), lb.site});
  return out;
}

Tree contract(const BlowUp& b) {
  if (b.tree.degree() != 1) throw std::invalid_argument("blow-up tree must have degree 1");
  return b.role == BlowUp::Role::outgoing ? contract_outgoing(b.tree)
                                          : contract_incoming(b.tree, b.edge_subtree);
}

TreeVector delta(const Tree& t) {
  TreeVector result;
  for (BlowUp& b : blow_ups(t)) result.add(std::move(b.tree), b.sign());
  return result;
}

TreeVector delta(const TreeVector& x) {
  auto degree = homogeneous_degree(x);
  if (degree && *degree != 0) throw std::invalid_argument("delta expects degree-0 input");
  TreeVector result;
  for (const auto& [tree, coeff] : x) result += coeff * delta(tree);
  return result;
}

TreeVector leibniz_defect(const TreeVector& a, const TreeVector& b) {
  auto da = homogeneous_degree(a);
  auto db = homogeneous_degree(b);
  if ((da && *da != 0) || (db && *db != 0))
    throw std::invalid_argument("leibniz_defect expects degree-0 operands");
  TreeVector lhs = delta(star(a, b));
  TreeVector rhs = star(delta(a), b) + star(a, delta(b)) +
                   brace(tree_vector(Tree::special()), {a, b});
  return lhs - rhs;
}

}  // namespace prelie
