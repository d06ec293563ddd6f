#pragma once

#include <vector>

#include "prelie/grafting.hpp"
#include "prelie/tree.hpp"

namespace prelie {

// A couple (S, e): a degree-1 tree S together with the special edge e such
// that contracting e recovers the original degree-0 tree. The special vertex
// of S always has at least two children.
struct BlowUp {
  enum class Role { incoming, outgoing };

  Tree tree;           // S
  Role role;           // position of e relative to the special vertex
  // incoming: the child of the special vertex holding the blown-up vertex
  // together with its kept children (the far endpoint of e).
  // outgoing: the subtree rooted at the special vertex itself.
  Tree edge_subtree;
  int site;            // preorder index in the source tree of the blown-up vertex

  int sign() const { return role == Role::incoming ? +1 : -1; }
};

// Every couple of bl(T), one entry per vertex and child-slot choice, so a
// couple appearing several times (equal child subtrees) keeps its
// multiplicity. Per vertex with c children this yields 2^c - 1 incoming
// couples and 2^c - 1 - c outgoing ones. Degree-0 input only.
std::vector<BlowUp> blow_ups(const Tree& t);

// S/e: contract the special edge and label the merged vertex by the far
// endpoint. Inverse of the blow-up construction.
Tree contract(const BlowUp& b);

// delta(T) = sum over bl(T) of sign * S, merged over equal canonical trees;
// extended linearly. Maps degree 0 to degree 1.
TreeVector delta(const Tree& t);
TreeVector delta(const TreeVector& x);

// delta(a*b) - delta(a)*b - a*delta(b) - o<a,b>; identically zero.
TreeVector leibniz_defect(const TreeVector& a, const TreeVector& b);

}  // namespace prelie
