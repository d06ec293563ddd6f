#pragma once

#include <string>

#include "prelie/blowup.hpp"
#include "prelie/enumerate.hpp"
#include "prelie/linalg.hpp"
#include "prelie/shuffle.hpp"

namespace prelie {

// One graded slice: the span of degree-0 (or degree-1) trees on n vertices
// in the chosen labeling mode.
struct ComponentSpec {
  LabelMode mode;
  int n = 1;
};

// Canonical pre-Lie map into the tensor algebra: a linear tree (chain, root
// first) maps to the word of its labels, any non-linear tree to zero.
TensorVector p_map(const TreeVector& x);

// Which argument the structural recursion for p1 peels first; the result is
// independent of the choice (the degree-1 part is a free bimodule), which the
// tests exercise.
enum class P1Order { forward, reverse };

// Bimodule companion of p: the unique bimodule homomorphism into
// T(V) (x) T(V) sending the bare special vertex to 1 (x) 1, computed by
// structural recursion through the star actions. Degree-1 input only.
PairVector p1_map(const TreeVector& x, P1Order order = P1Order::forward);

// Same map with a memo shared across calls; the recursion revisits the same
// corrected trees constantly, so batch evaluations should reuse one of these.
class P1Evaluator {
 public:
  explicit P1Evaluator(P1Order order = P1Order::forward) : order_(order) {}

  const PairVector& tree(const Tree& t);
  PairVector operator()(const TreeVector& x);

 private:
  P1Order order_;
  std::map<Tree, PairVector> cache_;
};

// Matrix of delta on the component: columns indexed by the degree-0 trees,
// rows by the degree-1 trees of the same mode, deterministic order.
SparseMatrix<Tree, Tree> delta_matrix(const ComponentSpec& spec, int threads = 1);

// Reduced basis of ker(delta) on the component: exactly the Lie elements.
SubspaceBasis<Tree> lie_kernel_basis(const ComponentSpec& spec, int threads = 1);

// reduced_coproduct(p(x)) - p1(delta(x)); identically zero (the commuting
// square).
PairVector square_defect(const TreeVector& x);

// Machine verdicts for the kernel characterization on one component:
// (i) delta kills every Lyndon bracketing, (ii) p is injective on ker(delta),
// (iii) p(ker delta) equals the shuffle primitives.
struct KernelVerdicts {
  bool delta_kills_lie = false;
  bool p_injective_on_kernel = false;
  bool image_matches_primitives = false;
  int bracketing_count = 0;
  int kernel_dim = 0;
  int image_dim = 0;
  int primitive_dim = 0;

  bool all() const {
    return delta_kills_lie && p_injective_on_kernel && image_matches_primitives;
  }
};

KernelVerdicts verify_kernel(const ComponentSpec& spec, int threads = 1);

}  // namespace prelie
