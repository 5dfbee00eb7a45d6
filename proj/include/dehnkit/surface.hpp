#pragma once

// Combinatorial surfaces with punctures: Euler characteristic, Thurston norm,
// the beta-norm, and the exceptional-class test on wrapping/winding numbers.
//
// Punctures are counted data, not embedded data; callers are responsible for
// geometric minimality of the counts. Only orientable surfaces are modelled.

#include <optional>
#include <vector>

#include "dehnkit/error.hpp"

namespace dehnkit {

struct SurfaceComponent {
    int genus = 0;
    int boundary_count = 0;
    int puncture_count = 0;
    // Per-puncture intersection signs, when known. Length == puncture_count.
    std::optional<std::vector<int>> puncture_signs;

    bool operator==(const SurfaceComponent&) const = default;
};

// A (possibly disconnected) surface is the multiset of its components.
using SurfaceSpec = std::vector<SurfaceComponent>;

// Throws StructureError on negative counts, bad sign values or a signs list
// whose length disagrees with puncture_count.
void validate(const SurfaceComponent& c);
void validate(const SurfaceSpec& s);

int euler(const SurfaceComponent& c); // 2 - 2g - b, punctures ignored
int euler(const SurfaceSpec& s);

// max(0, -chi + punctures) per component, summed.
long long beta_norm(const SurfaceComponent& c);
long long beta_norm(const SurfaceSpec& s);

// beta_norm with punctures treated as zero.
long long thurston_norm(const SurfaceComponent& c);
long long thurston_norm(const SurfaceSpec& s);

// True when every recorded puncture sign is equal ("the 1-complex always
// meets the component with the same sign"); nullopt when no signs recorded.
std::optional<bool> coherent_puncture_signs(const SurfaceComponent& c);

// True iff wrapping != winding. Requires winding <= wrapping and equal
// parity; anything else is inconsistent intersection data. The arc case has
// no such numeric test (the algebraic count is not isotopy invariant for
// arcs) and is deliberately not modelled here.
bool is_exceptional_class(long long wrapping, long long winding);

} // namespace dehnkit
