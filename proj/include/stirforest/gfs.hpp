#pragma once

// The involutions Phi_x on trees, their componentwise extension to forests,
// orbits of the generated Z_2 action, and the marked-forest maps Theta and
// Theta'.

#include "stirforest/forest.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sf {

enum class PhiKind { OldInternal, YoungLeaf, Fixed };

/// How Phi_x acts on t. Throws DomainError when x is not in t.
PhiKind phi_kind(const LabeledTree& t, Label x);

/// Old internal x: its slots are appended to its grandparent's slots and x
/// becomes a leaf. Young leaf x: x gains k slots and takes every grandparent
/// slot-j subtree whose root exceeds x. Anything else is returned unchanged.
LabeledTree phi(const LabeledTree& t, Label x, unsigned k);

/// Phi applied at every label of S in the tree that holds it.
Forest phi_set(const Forest& f, const LabelSet& s);

/// Closure under all Phi_x, sorted by canonical text.
std::vector<LabeledTree> orbit(const LabeledTree& t, unsigned k);
/// The orbit member without young leaves.
LabeledTree orbit_representative(const LabeledTree& t, unsigned k);

struct MarkedForest {
  Forest forest;
  LabelSet marks;
  friend bool operator==(const MarkedForest&, const MarkedForest&) = default;
  friend bool operator<(const MarkedForest& a, const MarkedForest& b) {
    if (a.forest == b.forest) return a.marks < b.marks;
    return a.forest < b.forest;
  }
};

/// "1,3" style, sorted.
std::string format_label_set(const LabelSet& s);
/// Accepts "1,3", "{1,3}" and the empty string.
LabelSet parse_label_set(std::string_view text);

/// "<forest> | {1,3}"
std::string serialize_marked(const MarkedForest& mf);
/// A bare forest parses with an empty mark set.
MarkedForest parse_marked(std::string_view text, unsigned k);

/// yleaf = 0 and S within Oint u Si*.
bool in_x(const MarkedForest& mf);
/// Forest in the starred bar class and S within Oint* u Si*.
bool in_x_bar(const MarkedForest& mf);
/// Forest in the starred hat class and S within Oint u Si*.
bool in_x_hat(const MarkedForest& mf);
/// S within Si*.
bool in_y(const MarkedForest& mf);
/// Bar forest with rleaf = 0 and S within Si*.
bool in_y_bar(const MarkedForest& mf);
/// Hat forest with rleaf = 0 and S within Si*.
bool in_y_hat(const MarkedForest& mf);

/// (Phi_{S & Oint}(F), S & Si*). Throws DomainError outside the X family.
MarkedForest theta(const MarkedForest& mf);
/// (Phi_{Yleaf}(F), S u Yleaf). Throws DomainError outside the Y family.
MarkedForest theta_prime(const MarkedForest& mf);

}  // namespace sf
