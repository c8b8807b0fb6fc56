#pragma once

#include "degenkit/snc_model.hpp"

namespace degenkit {

/// Blow-up of the total space along the closed stratum D_J (|J| >= 2).
struct BlowupMove {
  Face center;
  ComponentId new_id;
};

/// Throws Error(InvalidCenter) or Error(IdCollision) when `move` does not
/// apply to `model`.
void check_move(const SncModel& model, const BlowupMove& move);

/// Stellar subdivision of the dual complex at J with class bookkeeping:
///  - strict transforms: [D~_S] = [D_S] + (L + ... + L^{c-1}) [D_{S∪J}],  c = |J \ S|;
///  - new strata: [D_ε ∩ D~_S] = (1 + ... + L^{c-1}) [D_{S∪J}];
///  - every S ⊇ J becomes empty.
/// The exceptional component ε gets multiplicity sum_{j∈J} m_j.
SncModel blow_up_stratum(const SncModel& model, const BlowupMove& move);

/// All faces that are admissible centers (nonempty, at least two components).
std::vector<Face> admissible_centers(const SncModel& model);

}  // namespace degenkit
