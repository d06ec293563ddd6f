#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prelie {

// Canonical decorated rooted tree. Every vertex carries either a generator
// label (1, 2, ...) or the special degree-one mark, written `@`. Edges point
// to the root. Children are kept sorted under the canonical order, so two
// trees are isomorphic exactly when they compare equal.
class Tree {
 public:
  static constexpr int special_label = 0;

  explicit Tree(int label, std::vector<Tree> children = {});

  static Tree leaf(int generator) { return Tree(generator); }
  static Tree special(std::vector<Tree> children = {}) {
    return Tree(special_label, std::move(children));
  }

  int label() const { return label_; }
  bool is_special() const { return label_ == special_label; }
  const std::vector<Tree>& children() const { return children_; }

  int vertex_count() const { return vertex_count_; }
  int ordinary_count() const { return vertex_count_ - special_count_; }
  // Number of special vertices: the degree of the tree in the graded algebra.
  int degree() const { return special_count_; }

  // Total order: (label kind with ordinary before special, label id,
  // child count, lexicographic on the sorted children), recursively.
  std::strong_ordering operator<=>(const Tree& other) const;
  bool operator==(const Tree& other) const { return (*this <=> other) == std::strong_ordering::equal; }

 private:
  int label_;
  int vertex_count_;
  int special_count_;
  std::vector<Tree> children_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset;
};

// Grammar (bit-exact, no whitespace):
//   tree  := label ['(' tree (',' tree)* ')']
//   label := [1-9][0-9]* | '@'
// Rejects label 0 and more than one `@`; reports the byte offset on error.
Tree parse_tree(std::string_view text);

// Canonical text; parse_tree(render_tree(t)) == t.
std::string render_tree(const Tree& t);

// True iff every vertex has at most one child. Degree-0 trees only.
bool is_linear(const Tree& t);

// Bijection of {1..n}, 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const;

  // (a.compose(b))(i) = a(b(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Ordinary label i becomes sigma(i); the special vertex is fixed. The result
// is canonical. Labels outside sigma's domain are an error.
Tree relabel(const Tree& t, const Permutation& sigma);

}  // namespace prelie
