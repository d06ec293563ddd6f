#include "prelie/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "prelie/bridge.hpp"
#include "prelie/freelie.hpp"
#include "prelie/parallel.hpp"

namespace prelie {

namespace {

constexpr unsigned kSeed = 0x5eed;

struct Checker {
  SuiteResult result;

  void check(bool ok, const std::string& what) {
    ++result.checks;
    if (!ok) result.failures.push_back(what);
  }
};

TreeVector random_vector(std::mt19937& rng, const std::vector<Tree>& basis, int terms) {
  std::uniform_int_distribution<std::size_t> pick_tree(0, basis.size() - 1);
  std::uniform_int_distribution<int> pick_coeff(-3, 3);
  TreeVector v;
  for (int i = 0; i < terms; ++i) {
    int c = pick_coeff(rng);
    if (c == 0) c = 1;
    v.add(basis[pick_tree(rng)], c);
  }
  return v;
}

Word random_word(std::mt19937& rng, int max_letter, int length) {
  std::uniform_int_distribution<int> pick(1, max_letter);
  Word w;
  for (int i = 0; i < length; ++i) w.letters.push_back(pick(rng));
  return w;
}

Rational coefficient_sum(const TreeVector& v) {
  Rational sum = 0;
  for (const auto& [t, c] : v) sum += c;
  return sum;
}

// formula per vertex: (2^c - 1) incoming + (2^c - 1 - c) outgoing couples
long expected_blow_up_count(const Tree& t) {
  const long c = static_cast<long>(t.children().size());
  long count = (1L << c) - 1 + (1L << c) - 1 - c;
  for (const Tree& child : t.children()) count += expected_blow_up_count(child);
  return count;
}

const Tree* find_special(const Tree& t) {
  if (t.is_special()) return &t;
  for (const Tree& child : t.children())
    if (child.degree() >= 1) return find_special(child);
  return nullptr;
}

// Guin-Oudom expansion kept as an independent route to the brace:
// x<y1..yk> = (x<y1..y_{k-1}>)*yk - sum_i x<y1,..,yi*yk,..,y_{k-1}>
TreeVector brace_by_recursion(const TreeVector& x, std::vector<TreeVector> args) {
  if (args.empty()) return x;
  TreeVector last = std::move(args.back());
  args.pop_back();
  TreeVector result = star(brace_by_recursion(x, args), last);
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::vector<TreeVector> corrected = args;
    corrected[i] = star(args[i], last);
    result -= brace_by_recursion(x, corrected);
  }
  return result;
}

TreeVector relabel_vector(const TreeVector& v, const Permutation& sigma) {
  TreeVector out;
  for (const auto& [t, c] : v) out.add(relabel(t, sigma), c);
  return out;
}

using Triple = std::array<Word, 3>;

std::map<Triple, Rational> coassoc_side(const Word& w, bool left_first) {
  std::map<Triple, Rational> out;
  for (const auto& [pair, c1] : coproduct(w)) {
    const Word& splitting = left_first ? pair.left : pair.right;
    for (const auto& [inner, c2] : coproduct(splitting)) {
      Triple key = left_first ? Triple{inner.left, inner.right, pair.right}
                              : Triple{pair.left, inner.left, inner.right};
      auto [it, inserted] = out.emplace(std::move(key), 0);
      it->second += c1 * c2;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

}  // namespace

SuiteResult run_prelie_suite(int max_n, int threads) {
  (void)threads;
  Checker ck;
  ck.result.name = "prelie";

  // associator symmetry, exhaustive over basis-tree triples
  std::vector<std::vector<Tree>> trees_by_size(max_n + 1);
  for (int n = 1; n <= max_n; ++n) trees_by_size[n] = enumerate_trees(n, LabelMode::multilinear());
  for (int i = 1; i <= max_n; ++i)
    for (int j = 1; i + j < max_n; ++j)
      for (int k = 1; i + j + k <= max_n; ++k)
        for (const Tree& x : trees_by_size[i])
          for (const Tree& y : trees_by_size[j])
            for (const Tree& z : trees_by_size[k]) {
              const TreeVector vx = tree_vector(x), vy = tree_vector(y), vz = tree_vector(z);
              ck.check(associator(vx, vy, vz) == associator(vx, vz, vy),
                       "associator not symmetric on " + render_tree(x) + ", " + render_tree(y) +
                           ", " + render_tree(z));
            }

  // star expands into exactly |vertices(T1)| terms (all coefficients +1)
  for (int n = 1; n < std::max(2, max_n); ++n)
    for (const Tree& t : trees_by_size[n]) {
      TreeVector product = star(tree_vector(t), tree_vector(Tree::leaf(n + 1)));
      ck.check(coefficient_sum(product) == t.vertex_count(),
               "star term count off for " + render_tree(t));
    }

  // brace symmetry and agreement with the star recursion
  std::vector<TreeVector> pool = {
      tree_vector(Tree::leaf(3)), tree_vector(Tree::leaf(4)),
      tree_vector(parse_tree("3(4)")), tree_vector(parse_tree("4(5)")),
  };
  std::vector<TreeVector> hosts = {tree_vector(Tree::leaf(1)), tree_vector(parse_tree("1(2)")),
                                   tree_vector(parse_tree("1(2,6)"))};
  for (const TreeVector& x : hosts) {
    for (std::size_t a = 0; a < pool.size(); ++a)
      for (std::size_t b = 0; b < pool.size(); ++b) {
        std::vector<TreeVector> args = {pool[a], pool[b]};
        ck.check(brace(x, args) == brace(x, {pool[b], pool[a]}), "brace not symmetric (k=2)");
        ck.check(brace(x, args) == brace_by_recursion(x, args),
                 "brace disagrees with the star recursion (k=2)");
      }
    std::vector<TreeVector> triple = {pool[0], pool[1], pool[2]};
    std::vector<std::size_t> perm = {0, 1, 2};
    TreeVector reference = brace(x, triple);
    do {
      std::vector<TreeVector> permuted = {triple[perm[0]], triple[perm[1]], triple[perm[2]]};
      ck.check(brace(x, permuted) == reference, "brace not symmetric (k=3)");
    } while (std::next_permutation(perm.begin(), perm.end()));
    ck.check(brace(x, triple) == brace_by_recursion(x, triple),
             "brace disagrees with the star recursion (k=3)");
    ck.check(brace(x, {}) == x, "empty brace is not the identity");
  }

  // Jacobi identity on random degree-0 vectors
  std::mt19937 rng(kSeed);
  const auto& small = trees_by_size[std::min(3, max_n)];
  for (int trial = 0; trial < 20; ++trial) {
    TreeVector x = random_vector(rng, trees_by_size[1], 1);
    TreeVector y = random_vector(rng, trees_by_size[std::min(2, max_n)], 2);
    TreeVector z = random_vector(rng, small, 2);
    TreeVector jacobi = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) +
                        bracket(bracket(z, x), y);
    ck.check(jacobi.is_zero(), "Jacobi identity failed on random input");
  }

  return ck.result;
}

SuiteResult run_leibniz_suite(int max_n, int threads) {
  Checker ck;
  ck.result.name = "leibniz";

  std::vector<std::vector<Tree>> trees_by_size(max_n + 1);
  for (int n = 1; n <= max_n; ++n) trees_by_size[n] = enumerate_trees(n, LabelMode::multilinear());

  // blow-up structure: count formula, arity bound, contraction inverse
  auto structure_checks = [&](const Tree& t) {
    std::vector<BlowUp> couples = blow_ups(t);
    ck.check(static_cast<long>(couples.size()) == expected_blow_up_count(t),
             "blow-up count off for " + render_tree(t));
    for (const BlowUp& b : couples) {
      const Tree* special = find_special(b.tree);
      ck.check(special != nullptr && special->children().size() >= 2,
               "special vertex arity < 2 for a blow-up of " + render_tree(t));
      ck.check(contract(b) == t, "contraction does not recover " + render_tree(t));
    }
  };
  for (int n = 1; n <= max_n; ++n)
    for (const Tree& t : trees_by_size[n]) structure_checks(t);
  for (int n = 1; n <= std::min(max_n, 4); ++n)
    for (const Tree& t : enumerate_trees(n, LabelMode::alphabet(2))) structure_checks(t);

  // the rule itself, over all pairs of basis trees with |a|+|b| <= max_n
  struct Pair {
    const Tree* a;
    const Tree* b;
  };
  std::vector<Pair> pairs;
  for (int i = 1; i < max_n; ++i)
    for (int j = 1; i + j <= max_n; ++j)
      for (const Tree& a : trees_by_size[i])
        for (const Tree& b : trees_by_size[j]) pairs.push_back({&a, &b});
  std::vector<char> ok(pairs.size(), 0);
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    ok[i] = leibniz_defect(tree_vector(*pairs[i].a), tree_vector(*pairs[i].b)).is_zero() ? 1 : 0;
  });
  for (std::size_t i = 0; i < pairs.size(); ++i)
    ck.check(ok[i], "Leibniz defect nonzero for " + render_tree(*pairs[i].a) + ", " +
                        render_tree(*pairs[i].b));

  // repeated-label pairs hit the couple-multiplicity handling
  for (int i = 1; i + 1 <= std::min(max_n, 4); ++i)
    for (int j = 1; i + j <= std::min(max_n, 4); ++j)
      for (const Tree& a : enumerate_trees(i, LabelMode::alphabet(1)))
        for (const Tree& b : enumerate_trees(j, LabelMode::alphabet(1)))
          ck.check(leibniz_defect(tree_vector(a), tree_vector(b)).is_zero(),
                   "Leibniz defect nonzero for repeated labels " + render_tree(a) + ", " +
                       render_tree(b));

  return ck.result;
}

SuiteResult run_square_suite(int max_n, int threads) {
  Checker ck;
  ck.result.name = "square";

  // exhaustive on basis trees
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    std::vector<Tree> trees = enumerate_trees(n, LabelMode::multilinear());
    std::vector<char> ok(trees.size(), 0);
    parallel_for(trees.size(), threads, [&](std::size_t i) {
      ok[i] = square_defect(tree_vector(trees[i])).is_zero() ? 1 : 0;
    });
    for (std::size_t i = 0; i < trees.size(); ++i)
      ck.check(ok[i], "square defect nonzero on " + render_tree(trees[i]));
  }

  // random vectors on each larger component
  std::mt19937 rng(kSeed);
  for (int n = 5; n <= max_n; ++n) {
    std::vector<Tree> trees = enumerate_trees(n, LabelMode::multilinear());
    P1Evaluator p1;
    for (int trial = 0; trial < 100; ++trial) {
      TreeVector x = random_vector(rng, trees, 5);
      PairVector defect = reduced_coproduct(p_map(x)) - p1(delta(x));
      ck.check(defect.is_zero(), "square defect nonzero on a random vector, n=" +
                                     std::to_string(n));
    }
  }

  // recursion-order independence of p1
  for (int n = 0; n <= std::min(max_n, 3); ++n)
    for (const Tree& s : enumerate_special_trees(n)) {
      TreeVector v = tree_vector(s);
      ck.check(p1_map(v, P1Order::forward) == p1_map(v, P1Order::reverse),
               "p1 depends on the recursion order for " + render_tree(s));
    }

  return ck.result;
}

SuiteResult run_oracle_suite(int max_n, int threads) {
  Checker ck;
  ck.result.name = "oracle";

  // coalgebra laws on multilinear words
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    for (const Word& w : word_component(n, LabelMode::multilinear())) {
      ck.check(coassoc_side(w, true) == coassoc_side(w, false),
               "coassociativity failed on " + render_word(w));
      PairVector image = coproduct(w);
      PairVector swapped;
      for (const auto& [pair, c] : image) swapped.add(WordPair{pair.right, pair.left}, c);
      ck.check(swapped == image, "cocommutativity failed on " + render_word(w));
    }
  }

  // algebra map, exhaustive over multilinear factor pairs
  for (int i = 1; i < std::min(max_n, 5); ++i)
    for (int j = 1; i + j <= std::min(max_n, 5); ++j)
      for (const Word& wx : word_component(i, LabelMode::multilinear()))
        for (const Word& wy : word_component(j, LabelMode::multilinear())) {
          TensorVector x = TensorVector::single(wx);
          TensorVector y = TensorVector::single(wy);
          ck.check(coproduct(concat(x, y)) == pair_concat(coproduct(x), coproduct(y)),
                   "coproduct is not an algebra map on " + render_word(wx) + ", " +
                       render_word(wy));
        }

  // bimodule identities and the derivation rule on random input
  std::mt19937 rng(kSeed);
  for (int trial = 0; trial < 25; ++trial) {
    Word wx = random_word(rng, 3, 1 + trial % 3);
    Word wy = random_word(rng, 3, 1 + (trial / 3) % 3);
    TensorVector x = TensorVector::single(wx);
    TensorVector y = TensorVector::single(wy);

    PairVector xi = r_form(TensorVector::single(random_word(rng, 3, 1)),
                           TensorVector::single(random_word(rng, 3, 2)));
    ck.check(act_right(act_right(xi, x), y) - act_right(xi, concat(x, y)) ==
                 act_right(act_right(xi, y), x) - act_right(xi, concat(y, x)),
             "right bimodule identity failed");
    ck.check(act_left(concat(x, y), xi) == act_left(x, act_left(y, xi)),
             "(x.y)*xi != x*(y*xi)");
    ck.check(act_right(act_left(x, xi), y) == act_left(x, act_right(xi, y)),
             "(x*xi)*y != x*(xi*y)");
    ck.check(reduced_coproduct(concat(x, y)) ==
                 act_right(reduced_coproduct(x), y) + act_left(x, reduced_coproduct(y)) +
                     r_form(x, y),
             "derivation rule for the reduced diagonal failed");
  }

  // primitive dimensions
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    long factorial = 1;
    for (int i = 2; i < n; ++i) factorial *= i;
    ck.check(primitive_basis(n).dimension() == factorial,
             "primitive dimension != (n-1)! at n=" + std::to_string(n));
  }

  // Lyndon versus Witt
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= std::min(max_n, 6); ++n)
      ck.check(static_cast<std::int64_t>(lyndon_words(m, n).size()) == witt_dimension(m, n),
               "Lyndon count != Witt dimension");

  // the xi certificate
  {
    TreeVector xi = xi_element(1, 2, 3);
    ck.check(delta(xi).is_zero(), "delta(xi) != 0");
    BracketExpr expr = BracketExpr::pair(
        BracketExpr::leaf(1), BracketExpr::pair(BracketExpr::leaf(2), BracketExpr::leaf(3)));
    ck.check(xi == eval_in_prelie(expr), "xi != [1,[2,3]] in the pre-Lie algebra");
    ck.check(p_map(xi) == eval_in_tensor(expr), "p(xi) != [1,[2,3]] in the tensor algebra");
  }

  // kernel characterization verdicts per component
  for (int n = 2; n <= max_n; ++n) {
    ComponentSpec spec{LabelMode::multilinear(), n};
    KernelVerdicts verdicts = verify_kernel(spec, threads);
    long factorial = 1;
    for (int i = 2; i < n; ++i) factorial *= i;
    ck.check(verdicts.delta_kills_lie, "delta does not kill Lie elements, n=" + std::to_string(n));
    ck.check(verdicts.p_injective_on_kernel, "p not injective on the kernel, n=" + std::to_string(n));
    ck.check(verdicts.image_matches_primitives,
             "p(kernel) != primitives, n=" + std::to_string(n));
    ck.check(verdicts.kernel_dim == factorial,
             "kernel dimension != (n-1)! at n=" + std::to_string(n));

    // the Lyndon route spans the kernel
    SubspaceBasis<Tree> kernel = lie_kernel_basis(spec, threads);
    std::vector<TreeVector> bracketings;
    for (const Word& w : multilinear_lyndon_words(n))
      bracketings.push_back(eval_in_prelie(standard_bracketing(w)));
    SubspaceBasis<Tree> lyndon_span =
        make_subspace(enumerate_trees(n, spec.mode), bracketings);
    ck.check(subspaces_equal(lyndon_span, kernel),
             "Lyndon bracketings do not span the kernel, n=" + std::to_string(n));
  }

  // graded components over small alphabets
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    ComponentSpec rank1{LabelMode::alphabet(1), n};
    ck.check(lie_kernel_basis(rank1, threads).dimension() == (n == 1 ? 1 : 0),
             "rank-1 kernel dimension wrong at n=" + std::to_string(n));

    ComponentSpec rank2{LabelMode::alphabet(2), n};
    SubspaceBasis<Tree> kernel = lie_kernel_basis(rank2, threads);
    ck.check(kernel.dimension() == witt_dimension(2, n),
             "rank-2 kernel dimension != Witt number at n=" + std::to_string(n));
    KernelVerdicts verdicts = verify_kernel(rank2, threads);
    ck.check(verdicts.delta_kills_lie && verdicts.p_injective_on_kernel &&
                 verdicts.image_matches_primitives,
             "rank-2 verdicts failed at n=" + std::to_string(n));
    std::vector<TreeVector> bracketings;
    for (const Word& w : lyndon_words(2, n))
      bracketings.push_back(eval_in_prelie(standard_bracketing(w)));
    SubspaceBasis<Tree> lyndon_span =
        make_subspace(enumerate_trees(n, rank2.mode), bracketings);
    ck.check(subspaces_equal(lyndon_span, kernel),
             "rank-2 Lyndon bracketings do not span the kernel, n=" + std::to_string(n));

    // tensor-algebra rank of the bracketings matches Witt as well
    std::vector<TensorVector> tensor_images;
    for (const Word& w : lyndon_words(2, n))
      tensor_images.push_back(eval_in_tensor(standard_bracketing(w)));
    ck.check(make_subspace(word_component(n, rank2.mode), tensor_images).dimension() ==
                 witt_dimension(2, n),
             "tensor bracketings rank != Witt at n=" + std::to_string(n));
  }

  // symmetric-group equivariance of delta
  for (int n = 2; n <= max_n; ++n) {
    std::vector<Tree> trees = enumerate_trees(n, LabelMode::multilinear());
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i + 1;
    std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(images.begin(), images.end(), rng);
      Permutation sigma(images);
      const Tree& t = trees[pick(rng)];
      ck.check(delta(relabel(t, sigma)) == relabel_vector(delta(t), sigma),
               "delta not equivariant on " + render_tree(t));
    }
  }

  return ck.result;
}

std::vector<SuiteResult> run_verification(const std::string& which, int max_n, int threads) {
  if (max_n < 1) throw std::invalid_argument("max-n must be >= 1");
  std::vector<SuiteResult> out;
  if (which == "prelie" || which == "all") out.push_back(run_prelie_suite(max_n, threads));
  if (which == "leibniz" || which == "all") out.push_back(run_leibniz_suite(max_n, threads));
  if (which == "square" || which == "all") out.push_back(run_square_suite(max_n, threads));
  if (which == "oracle" || which == "all") out.push_back(run_oracle_suite(max_n, threads));
  if (out.empty()) throw std::invalid_argument("unknown suite: " + which);
  return out;
}

std::string format_report(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  bool all_passed = true;
  for (const SuiteResult& suite : results) {
    out << "suite " << suite.name << ": " << (suite.passed() ? "PASS" : "FAIL") << " ("
        << suite.checks << " checks)\n";
    for (const std::string& failure : suite.failures) out << "  FAIL " << failure << "\n";
    all_passed = all_passed && suite.passed();
  }
  out << "overall: " << (all_passed ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace prelie
