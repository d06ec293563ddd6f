#pragma once

#include <optional>
#include <vector>

#include "prelie/basis_vector.hpp"
#include "prelie/tree.hpp"

namespace prelie {

// Element of the free (graded) pre-Lie algebra: a rational combination of
// canonical decorated trees, homogeneous in the special degree.
using TreeVector = BasisVector<Tree>;

inline TreeVector tree_vector(const Tree& t) { return TreeVector::single(t); }

// Common special-vertex degree of all terms; nullopt for the zero vector.
// Mixed-degree vectors are an error.
std::optional<int> homogeneous_degree(const TreeVector& x);

// Grafting product: T1 * T2 sums, over the vertices v of T1, the tree with
// T2's root attached as a new child of v. Extended bilinearly. Total degree
// of the operands must stay <= 1, so no sign factors ever arise.
TreeVector star(const TreeVector& x, const TreeVector& y);

// Symmetric brace x<y1,...,yk>: the sum over all functions from arguments to
// vertices of x, grafting each argument at its assigned vertex.
TreeVector brace(const TreeVector& x, const std::vector<TreeVector>& args);

// Commutator x*y - y*x (degree 0 only).
TreeVector bracket(const TreeVector& x, const TreeVector& y);

// (x*y)*z - x*(y*z); symmetric in the last two arguments.
TreeVector associator(const TreeVector& x, const TreeVector& y, const TreeVector& z);

}  // namespace prelie
