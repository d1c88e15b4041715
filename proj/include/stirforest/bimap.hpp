#pragma once

// Bijections between k-Stirling permutations and forests/trees:
//   xi   words on M        -> forests on M    (lap -> lleaf)
//   chi  words starting min -> trees on M      (ap  -> lleaf)
//   zeta words on M        -> forests on M    (ap  -> lleaf - si)

#include "stirforest/forest.hpp"
#include "stirforest/stirling.hpp"

namespace sf {

/// Splits at right-to-left minima; each block b-separated into k parts.
Forest xi(const KStirlingWord& w);
KStirlingWord xi_inv(const Forest& f);

/// Root is the first (minimal) letter; the k parts between and after its
/// copies become the slots. Throws DomainError when the word does not start
/// with its minimum or is empty.
LabeledTree chi(const KStirlingWord& w);
KStirlingWord chi_inv(const LabeledTree& t, unsigned k);

/// Splits at left-to-right minima; the blocks, read right to left, become
/// the trees.
Forest zeta(const KStirlingWord& w);
KStirlingWord zeta_inv(const Forest& f);

}  // namespace sf
