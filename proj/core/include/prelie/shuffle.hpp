#pragma once

#include "prelie/enumerate.hpp"
#include "prelie/linalg.hpp"
#include "prelie/word.hpp"

namespace prelie {

// Bilinear concatenation product; the unit word is a two-sided identity.
TensorVector concat(const TensorVector& a, const TensorVector& b);

// Shuffle diagonal: sum over all (i, n-i)-unshuffle splittings of the word,
// including the two unit terms.
PairVector coproduct(const Word& w);
PairVector coproduct(const TensorVector& x);

// Reduced diagonal: the coproduct minus 1(x)x and x(x)1. Input may not have
// a unit component; every output pair has both components nonempty.
PairVector reduced_coproduct(const TensorVector& x);

// Componentwise product (a,b).(c,d) = (a.c, b.d), bilinear.
PairVector pair_concat(const PairVector& a, const PairVector& b);

// x * xi := coproduct(x) . xi
PairVector act_left(const TensorVector& x, const PairVector& xi);

// xi * x := xi . (1(x)x + x(x)1)
PairVector act_right(const PairVector& xi, const TensorVector& x);

// R(x, y) := x(x)y + y(x)x.
PairVector r_form(const TensorVector& x, const TensorVector& y);

// Sorted basis of the degree-n word component in the given mode:
// permutations of {1..n} (multilinear) or all m^n words (alphabet).
std::vector<Word> word_component(int n, const LabelMode& mode = LabelMode::multilinear());

// Reduced basis of the primitives, ker(reduced diagonal), on the degree-n
// word component. Multilinear dimension is (n-1)!.
SubspaceBasis<Word> primitive_basis(int n, const LabelMode& mode = LabelMode::multilinear());

}  // namespace prelie
