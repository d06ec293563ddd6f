#include "prelie/bridge.hpp"

#include <atomic>
#include <stdexcept>

#include "prelie/freelie.hpp"
#include "prelie/parallel.hpp"

namespace prelie {

namespace {

// Word of a linear tree, root first; empty optional for non-linear trees.
std::optional<Word> chain_word(const Tree& t) {
  Word w;
  const Tree* node = &t;
  while (true) {
    w.letters.push_back(node->label());
    if (node->children().empty()) return w;
    if (node->children().size() > 1) return std::nullopt;
    node = &node->children().front();
  }
}

// p1 of a single degree-1 tree via the bimodule recursion:
//   p1(o)        = 1 (x) 1
//   p1(X * a)    = p1(X) * p(a)          (right action)
//   p1(a * X)    = p(a) * p1(X)          (left action)
// with the brace-to-star corrections peeling one argument at a time.
PairVector p1_compute(const Tree& t, P1Order order, P1Evaluator& memo) {
  if (t.is_special()) {
    const auto& args = t.children();
    if (args.empty()) return PairVector::single(WordPair{Word::unit(), Word::unit()});
    // o<A1,...,Ak> = o<A2,...,Ak> * A1 - sum_i o<A2,..,Ai*A1,..,Ak>
    const std::size_t peel = order == P1Order::forward ? 0 : args.size() - 1;
    const Tree& first = args[peel];
    std::vector<Tree> rest;
    rest.reserve(args.size() - 1);
    for (std::size_t i = 0; i < args.size(); ++i)
      if (i != peel) rest.push_back(args[i]);

    PairVector result = act_right(memo.tree(Tree::special(rest)), p_map(tree_vector(first)));
    for (std::size_t i = 0; i < rest.size(); ++i) {
      for (const auto& [grafted, coeff] : star(tree_vector(rest[i]), tree_vector(first))) {
        std::vector<Tree> corrected = rest;
        corrected[i] = grafted;
        result -= coeff * memo.tree(Tree::special(std::move(corrected)));
      }
    }
    return result;
  }

  // ordinary root: exactly one child subtree holds the special vertex
  std::size_t special_at = t.children().size();
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (t.children()[i].degree() == 1) {
      special_at = i;
      break;
    }
  }
  if (special_at == t.children().size())
    throw std::invalid_argument("p1_map expects a degree-1 tree");

  const Tree& special_child = t.children()[special_at];
  std::vector<Tree> ordinary;
  ordinary.reserve(t.children().size() - 1);
  for (std::size_t i = 0; i < t.children().size(); ++i)
    if (i != special_at) ordinary.push_back(t.children()[i]);

  // t = X * S' - sum_i (X with T_i replaced by T_i * S'), X the degree-0 part
  Tree base(t.label(), ordinary);
  PairVector result = act_left(p_map(tree_vector(base)), memo.tree(special_child));
  for (std::size_t i = 0; i < ordinary.size(); ++i) {
    for (const auto& [grafted, coeff] : star(tree_vector(ordinary[i]), tree_vector(special_child))) {
      std::vector<Tree> corrected = ordinary;
      corrected[i] = grafted;
      result -= coeff * memo.tree(Tree(t.label(), std::move(corrected)));
    }
  }
  return result;
}

}  // namespace

const PairVector& P1Evaluator::tree(const Tree& t) {
  auto it = cache_.find(t);
  if (it != cache_.end()) return it->second;
  PairVector value = p1_compute(t, order_, *this);
  return cache_.emplace(t, std::move(value)).first->second;
}

PairVector P1Evaluator::operator()(const TreeVector& x) {
  auto degree = homogeneous_degree(x);
  if (degree && *degree != 1) throw std::invalid_argument("p1_map expects degree-1 input");
  PairVector result;
  for (const auto& [t, coeff] : x) result += coeff * tree(t);
  return result;
}

TensorVector p_map(const TreeVector& x) {
  auto degree = homogeneous_degree(x);
  if (degree && *degree != 0) throw std::invalid_argument("p_map expects degree-0 input");
  TensorVector result;
  for (const auto& [tree, coeff] : x) {
    if (auto w = chain_word(tree)) result.add(std::move(*w), coeff);
  }
  return result;
}

PairVector p1_map(const TreeVector& x, P1Order order) {
  P1Evaluator evaluator(order);
  return evaluator(x);
}

SparseMatrix<Tree, Tree> delta_matrix(const ComponentSpec& spec, int threads) {
  SparseMatrix<Tree, Tree> m;
  m.col_keys = enumerate_trees(spec.n, spec.mode);
  m.row_keys = enumerate_special_trees(spec.n, spec.mode);
  std::map<Tree, int> row_index;
  for (std::size_t i = 0; i < m.row_keys.size(); ++i)
    row_index.emplace(m.row_keys[i], static_cast<int>(i));
  m.columns.resize(m.col_keys.size());
  std::atomic<bool> missing_row{false};
  parallel_for(m.col_keys.size(), threads, [&](std::size_t j) {
    for (const auto& [image, coeff] : delta(m.col_keys[j])) {
      auto it = row_index.find(image);
      if (it == row_index.end()) {
        missing_row.store(true, std::memory_order_relaxed);
        return;
      }
      m.columns[j].emplace_back(it->second, coeff);
    }
  });
  if (missing_row.load()) throw std::logic_error("delta image outside the component");
  return m;
}

SubspaceBasis<Tree> lie_kernel_basis(const ComponentSpec& spec, int threads) {
  return kernel_basis(delta_matrix(spec, threads), threads);
}

PairVector square_defect(const TreeVector& x) {
  auto degree = homogeneous_degree(x);
  if (degree && *degree != 0) throw std::invalid_argument("square_defect expects degree-0 input");
  return reduced_coproduct(p_map(x)) - p1_map(delta(x));
}

KernelVerdicts verify_kernel(const ComponentSpec& spec, int threads) {
  KernelVerdicts verdicts;

  std::vector<Word> lyndon = spec.mode.is_multilinear()
                                 ? multilinear_lyndon_words(spec.n)
                                 : lyndon_words(spec.mode.alphabet_size, spec.n);
  verdicts.bracketing_count = static_cast<int>(lyndon.size());
  std::vector<char> killed(lyndon.size(), 0);
  parallel_for(lyndon.size(), threads, [&](std::size_t i) {
    killed[i] = delta(eval_in_prelie(standard_bracketing(lyndon[i]))).is_zero() ? 1 : 0;
  });
  verdicts.delta_kills_lie = true;
  for (char ok : killed) verdicts.delta_kills_lie = verdicts.delta_kills_lie && ok;

  SubspaceBasis<Tree> kernel = lie_kernel_basis(spec, threads);
  verdicts.kernel_dim = kernel.dimension();

  std::vector<BasisVector<Word>> images(kernel.dimension());
  parallel_for(images.size(), threads, [&](std::size_t i) {
    images[i] = p_map(kernel.vector_at(static_cast<int>(i)));
  });
  SubspaceBasis<Word> image_basis = make_subspace(word_component(spec.n, spec.mode), images);
  verdicts.image_dim = image_basis.dimension();
  verdicts.p_injective_on_kernel = verdicts.image_dim == verdicts.kernel_dim;

  SubspaceBasis<Word> primitives = primitive_basis(spec.n, spec.mode);
  verdicts.primitive_dim = primitives.dimension();
  verdicts.image_matches_primitives = subspaces_equal(image_basis, primitives);

  return verdicts;
}

}  // namespace prelie
