#pragma once

#include "kvertex/character.hpp"
#include "kvertex/partition.hpp"

namespace kvertex {

// Tangent/obstruction data of a torus fixed point: full and virtual
// tangent characters, their half (polarization) characters, and the
// structure-sheaf stalk twist.  Brackets of ratios are expanded eagerly,
// so every field is an honest integer-multiplicity Character (rank and
// dualization are only defined on those); the stalk is a single monomial.
struct FixedPointData {
  std::string label;
  Character t_hilb;
  Character t_vir;
  Character t_half_hilb;
  Character t_half_vir;
  LaurentPoly ohat_stalk;
};

// the d-fold thickened divisor family: fixed curve with multiplicity d
FixedPointData fixed_point_Ed(int d);
// the leg family indexed by a partition cross-section
FixedPointData fixed_point_Elambda(const Partition& la);

// t_hilb == t_half_hilb + xyz t_half_hilb^dual  and
// t_vir == t_half_vir - xyz t_half_vir^dual + t_half_hilb
bool check_polarization(const FixedPointData& fp);

}  // namespace kvertex
