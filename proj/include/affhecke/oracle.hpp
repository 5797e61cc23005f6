#pragma once

// Slow reference computations kept independent of the fast kernels: word
// length by breadth-first search, Bruhat order by subwords of one reduced
// word, Kazhdan-Lusztig polynomials by solving the bar-invariance conditions
// as a linear system over Q, RSK shapes by Greene's theorem and orbit
// dimensions from commutator nullity. None of them touches KLTable or the
// C'-basis code.

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "affhecke/affine_weyl.hpp"
#include "affhecke/laurent.hpp"
#include "affhecke/orbits.hpp"

namespace affhecke::oracle {

/// Word lengths of all elements of W_a within `radius` generator steps of e.
std::unordered_map<AffPerm, int, AffPermHash> bfs_lengths(int n, int radius, GenMask gens);

/// y <= w iff y is a subword product of the canonical reduced word of w.
bool subword_leq(const AffPerm& y, const AffPerm& w);

/// The lower interval [e, w] of an element of W_a, from subword products.
std::vector<AffPerm> lower_interval(const AffPerm& w);

/// P_{y,w} for all y <= w: the unique solution of bar(C'_w) = C'_w with
/// P_{w,w} = 1 and the degree bound. Empty when the system is not uniquely
/// and integrally solvable.
std::optional<std::map<AffPerm, LaurentInt>> kl_by_bar_invariance(const AffPerm& w);

/// Shape from Greene's theorem: the sum of the first k rows is the largest
/// union of k increasing subsequences.
Partition greene_shape(const std::vector<int>& perm);

/// dim of the centralizer of a nilpotent matrix with the given Jordan block
/// sizes: nullity of X -> Xe - eX.
int commutator_nullity(const Partition& jordan_type);

}  // namespace affhecke::oracle
