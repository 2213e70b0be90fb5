#pragma once

#include <functional>
#include <vector>

#include "rookalg/monomial.hpp"

namespace rookalg {

/// A factor of a parabolic subgroup G(n_1) x ... x G(n_r) occupying
/// consecutive slots, carrying the character of the representation put there.
struct ParabolicBlock {
  int size;
  std::function<Rat(const MonomialMatrix&)> chi;  // on G(size) elements
};

/// Value at x of the character induced from the parabolic subgroup: the
/// coset sum of the zero-extended product character.
Rat inducedCharValue(const std::vector<ParabolicBlock>& blocks, const MonomialMatrix& x);

/// The sub-monomial of x on the sorted index set s (positions relabelled).
/// Requires x to map s into itself.
MonomialMatrix subMonomial(const MonomialMatrix& x, const std::vector<int>& s);

}  // namespace rookalg
