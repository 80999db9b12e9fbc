#pragma once

#include <string>

#include "ztwo/indexthy.hpp"
#include "ztwo/lattice.hpp"
#include "ztwo/realization.hpp"

namespace ztwo::presets {

struct LatticePreset {
  lattice::BilinearLattice form;
  lattice::LatticeInvolution involution;
};

/// Gram of the negative definite even unimodular rank-8 lattice. The sign
/// convention is fixed so that the rank-22 form below has signature -16.
IntMatrix e8_gram();

/// Gram of the rank-2 hyperbolic plane.
IntMatrix hyperbolic_gram();

/// Named forms: "E8", "H", "K3" (2 E8 + 3 H), "K3K3" (4 E8 + 6 H), and the
/// two realization matrices "A" and "B". K3 carries the involution swapping
/// the two E8 blocks; K3K3 swaps the two double-E8 blocks and one hyperbolic
/// pair; the others carry the identity.
LatticePreset lattice_preset(const std::string& name);

/// Profiles "k3" and "k3k3".
indexthy::ManifoldProfile profile_preset(const std::string& name);

/// Link matrices "A" (framings 0,0,0,0,2,2,2,2) and "B" (framings 0,0,0,2,2,2)
/// on Hopf fibers.
realization::FramedLinkMatrix link_preset(const std::string& name);

}  // namespace ztwo::presets
