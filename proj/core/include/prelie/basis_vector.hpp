#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "prelie/rational.hpp"

namespace prelie {

// Finite rational linear combination of basis keys. Zero coefficients are
// never stored, so equality of values is equality of elements. Iteration is
// in key order, which makes every downstream computation deterministic.
template <typename Key>
class BasisVector {
 public:
  BasisVector() = default;

  static BasisVector single(Key key, Rational coeff = 1) {
    BasisVector v;
    v.add(std::move(key), coeff);
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(Key&& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasisVector& operator+=(const BasisVector& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, coeff);
    return *this;
  }

  BasisVector& operator-=(const BasisVector& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, -coeff);
    return *this;
  }

  BasisVector& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [key, coeff] : terms_) coeff *= scalar;
    }
    return *this;
  }

  friend BasisVector operator+(BasisVector lhs, const BasisVector& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BasisVector operator-(BasisVector lhs, const BasisVector& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend BasisVector operator*(const Rational& scalar, BasisVector v) {
    v *= scalar;
    return v;
  }
  BasisVector operator-() const {
    BasisVector v(*this);
    for (auto& [key, coeff] : v.terms_) coeff = -coeff;
    return v;
  }

  bool operator==(const BasisVector&) const = default;

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  // Smallest key with nonzero coefficient; vector must be nonzero.
  const std::pair<const Key, Rational>& leading_term() const { return *terms_.begin(); }

 private:
  std::map<Key, Rational> terms_;
};

}  // namespace prelie
