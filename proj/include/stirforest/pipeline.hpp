#pragma once

// The transformation Psi_x on forests and the maps built from it:
// alpha/beta steps, Gamma (marked forest -> forest), Gamma' (its inverse)
// and the end-to-end bijection Gamma o Theta.

#include "stirforest/gfs.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sf {

enum class PsiCase {
  AttachToSingleton,  // x heads a run of trees that ends in a singleton
  MergeIntoLast,      // the run ends in a non-singleton last tree
  RemoveOldLeaf,
  RemoveYoungLeaf,
  Identity,
};
const char* to_string(PsiCase c);

/// Which of the four behaviours Psi_x has on f. Throws DomainError when x is
/// not a label of f.
PsiCase psi_case(const Forest& f, Label x);
Forest psi(const Forest& f, Label x);

/// (Psi_x(F), S - {x}) with x = max S. Every mark must be a singleton.
MarkedForest alpha_step(const MarkedForest& mf);
/// (Psi_x(F), S + {y}) with x the least removable label and y the root of
/// its tree. Throws DomainError when rleaf = 0.
MarkedForest beta_step(const MarkedForest& mf);

/// alpha applied |S| times. Requires S within Si*.
Forest gamma_map(const MarkedForest& mf);

struct BetaMove {
  Label x = 0;  // removed leaf
  Label y = 0;  // root that became a singleton
  friend bool operator==(const BetaMove&, const BetaMove&) = default;
};

/// beta applied until no removable leaf is left. When trajectory is given,
/// each step's (x, y) is appended to it.
MarkedForest gamma_prime_map(const Forest& f, std::vector<BetaMove>* trajectory = nullptr);

/// gamma_map(theta(mf)).
Forest main_bijection(const MarkedForest& mf);

}  // namespace sf
