#pragma once

#include "rookalg/algebra.hpp"
#include "rookalg/shifted.hpp"

namespace rookalg {

/// Sum over ordered k-tuples of distinct indices of the cycle (i_1,...,i_k)
/// in C[S(n)]; n*1 for k = 1; zero for n < k.
AlgebraElement cycleSum(long k, int n, const FiniteGroupTable* group);

/// The character-weighted wreath version in C[G(n)]:
/// (dim psi/|G|)^k sum bar(psi)(g_k...g_1) g_1^(i_1)...g_k^(i_k) (i_1,...,i_k).
AlgebraElement cycleSumWreath(long k, int psi, int n, const FiniteGroupTable* group);

/// The class function that is 1 on the identity and 0 elsewhere.
std::vector<Rat> identityIndicator(const FiniteGroupTable* group);

/// (dim psi / |G|)^k bar(psi), as a class-function vector.
std::vector<Rat> classFunctionForPsi(long k, int psi, const FiniteGroupTable* group);

/// Semigroup-algebra cycle sum damped by presence idempotents:
/// sum phi(g_k...g_1) g_1^(i_1)...g_k^(i_k) (i_1,...,i_k) epsbar_{i_1}...epsbar_{i_k},
/// expanded into the monomial basis; zero for n < k.
AlgebraElement rookCycleSumPhi(long k, int n, const FiniteGroupTable* group,
                               const std::vector<Rat>& phiByClass);

/// Trivial-group / identity-indicator special case.
AlgebraElement rookCycleSum(long k, int n, const FiniteGroupTable* group);

/// Jucys-Murphy-type element: sum_{j>i} sum_g g^(i)(g^-1)^(j)(i,j) epsbar_i epsbar_j;
/// zero when n <= i.
AlgebraElement jucysMurphy(int i, int n, const FiniteGroupTable* group);

/// Substitutes cycle sums for the p# generators of a polynomial.
AlgebraElement liftPsharp(const PsharpPolynomial& poly, int n, const FiniteGroupTable* group);

/// The central lift c_n(f): p#-expansion followed by cycle-sum substitution.
AlgebraElement liftToCenter(const ShiftedFunction& f, int n, const FiniteGroupTable* group);

/// The central approximation of hstar_k:
/// sum_i (-1)^i C(k,i) n^{-i} c_n(frakp_{k+i}).
AlgebraElement hstarCentralApprox(long k, int n);

/// Wreath version along the trivial-character slot.
AlgebraElement hstarCentralApproxWreath(long k, int n, const FiniteGroupTable* group);

/// Memoized p#-expansion of frakp_j (plain generators).
const PsharpPolynomial& frakpExpansion(long j);

}  // namespace rookalg
