#pragma once

#include "rookalg/partitions.hpp"

namespace rookalg::testing {

/// Character of the permutation module on tabloids of row shape mu, at the
/// class of cycle type rho: the number of fixed tabloids of a representative.
Int permutationModuleCharacter(const Partition& mu, const Partition& rho);

/// Irreducible character chi^lambda_rho derived from the permutation-module
/// characters by orthogonalization (no border-strip combinatorics involved).
Rat characterFromPermutationModules(const Partition& la, const Partition& rho);

}  // namespace rookalg::testing
