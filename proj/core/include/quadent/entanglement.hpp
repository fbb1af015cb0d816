#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadent/catalog.hpp"

namespace quadent {

// max(0, λ1-λ2-λ3-λ4) over the spin-flipped product ρ(σ2⊗σ2)ρ*(σ2⊗σ2).
double wootters_concurrence(const DensityMatrix& rho);

// C²_{A(BC)} - C²_{AB} - C²_{AC}, clamped at 0.
double three_tangle_pure(const PureState& state);

// Upper bound on the convex-roof 3-tangle of a 3-qubit mixed state from its
// spectral decomposition: Σ λ_i τ(ψ_i).
double three_tangle_spectral_bound(const DensityMatrix& rho);

struct EntanglementProfile {
  std::string state;
  // keys are 1-based qubit lists, e.g. "1,3"
  std::map<std::string, double> purity;
  std::map<std::string, double> concurrence;
  // 3-qubit reductions keyed by the traced-out qubit, e.g. "1"
  std::map<std::string, double> mixed_tangle_bound;
  double max_purity = 0;
  bool genuine = false;

  bool operator==(const EntanglementProfile&) const = default;
};

EntanglementProfile profile(const NamedState& state);

}  // namespace quadent
