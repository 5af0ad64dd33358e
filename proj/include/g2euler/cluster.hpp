#pragma once

// p-normalisation of a sextic model and classification of its cluster picture.

#include <string_view>

#include "g2euler/poly.hpp"

namespace g2euler {

enum class ClusterType { T1, T2a, T2b, T4 };

std::string_view type_name(ClusterType t) noexcept;

struct PNormalized {
  IntPoly f;       // degree 6, v_p(f6) = min v_p(f_i) <= 1, outer depth zero
  u64 p = 0;
  int v = 0;       // v_p(f6)
  int outer_steps = 0;  // recentering iterations used to reach outer depth zero
};

/// Q-isomorphic model of y^2 = f with the properties above (deg f in {5, 6}).
PNormalized p_normalize(const IntPoly& f, u64 p);

/// p^-v f for a normalised model.
IntPoly unit_part(const PNormalized& nf);

ClusterType which_type(const PNormalized& nf);

}  // namespace g2euler
