#include "prelie/tree.hpp"

#include <algorithm>

namespace prelie {

Tree::Tree(int label, std::vector<Tree> children)
    : label_(label), vertex_count_(1), special_count_(label == special_label ? 1 : 0),
      children_(std::move(children)) {
  if (label_ < 0) throw std::invalid_argument("tree label must be >= 1 or the special mark");
  std::sort(children_.begin(), children_.end());
  for (const Tree& child : children_) {
    vertex_count_ += child.vertex_count_;
    special_count_ += child.special_count_;
  }
}

std::strong_ordering Tree::operator<=>(const Tree& other) const {
  const int kind = is_special() ? 1 : 0;
  const int other_kind = other.is_special() ? 1 : 0;
  if (kind != other_kind) return kind <=> other_kind;
  if (label_ != other.label_) return label_ <=> other.label_;
  if (children_.size() != other.children_.size()) return children_.size() <=> other.children_.size();
  for (std::size_t i = 0; i < children_.size(); ++i) {
    auto cmp = children_[i] <=> other.children_[i];
    if (cmp != std::strong_ordering::equal) return cmp;
  }
  return std::strong_ordering::equal;
}

ParseError::ParseError(const std::string& message, std::size_t at)
    : std::runtime_error(message + " at byte " + std::to_string(at)), offset(at) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Tree run() {
    Tree t = tree();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return t;
  }

 private:
  Tree tree() {
    int label = this->label();
    std::vector<Tree> children;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      children.push_back(tree());
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        children.push_back(tree());
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ',' or ')'", pos_);
      ++pos_;
    }
    return Tree(label, std::move(children));
  }

  int label() {
    if (pos_ >= text_.size()) throw ParseError("expected label", pos_);
    const char c = text_[pos_];
    if (c == '@') {
      if (seen_special_) throw ParseError("more than one '@'", pos_);
      seen_special_ = true;
      ++pos_;
      return Tree::special_label;
    }
    if (c == '0') throw ParseError("label 0 is not allowed", pos_);
    if (c < '1' || c > '9') throw ParseError("expected label", pos_);
    long value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) throw ParseError("label too large", pos_);
      ++pos_;
    }
    return static_cast<int>(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool seen_special_ = false;
};

void render_to(const Tree& t, std::string& out) {
  if (t.is_special()) {
    out += '@';
  } else {
    out += std::to_string(t.label());
  }
  if (!t.children().empty()) {
    out += '(';
    bool first = true;
    for (const Tree& child : t.children()) {
      if (!first) out += ',';
      first = false;
      render_to(child, out);
    }
    out += ')';
  }
}

}  // namespace

Tree parse_tree(std::string_view text) { return Parser(text).run(); }

std::string render_tree(const Tree& t) {
  std::string out;
  render_to(t, out);
  return out;
}

bool is_linear(const Tree& t) {
  if (t.degree() != 0) throw std::invalid_argument("is_linear expects a degree-0 tree");
  const Tree* node = &t;
  while (true) {
    if (node->children().size() > 1) return false;
    if (node->children().empty()) return true;
    node = &node->children().front();
  }
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
      throw std::invalid_argument("not a bijection of {1..n}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  return Permutation(std::move(images));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("label outside permutation domain");
  return images_[i - 1];
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> images(images_.size());
  for (int i = 1; i <= size(); ++i) images[i - 1] = (*this)(other(i));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int i = 1; i <= size(); ++i) images[images_[i - 1] - 1] = i;
  return Permutation(std::move(images));
}

Tree relabel(const Tree& t, const Permutation& sigma) {
  std::vector<Tree> children;
  children.reserve(t.children().size());
  for (const Tree& child : t.children()) children.push_back(relabel(child, sigma));
  if (t.is_special()) return Tree::special(std::move(children));
  return Tree(sigma(t.label()), std::move(children));
}

}  // namespace prelie
