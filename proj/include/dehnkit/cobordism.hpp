#pragma once

// Homology and classification of the region W between a surface and its
// tube-compression, and the construction turning a Scharlemann cycle into
// such a region.
//
// The compression data presents H_1(W) as the rank 2g+1 free abelian group
// on the surface basis x_1..x_{2g} and the tube longitude l, divided by the
// single relation a_1 x_1 + ... + a_{2g} x_{2g} + q l coming from the
// compressing disc boundary. The meridian coefficient of that boundary drops
// out of the presentation (the meridian bounds in the compression body) and
// is kept only as an ignored optional field.

#include <optional>
#include <string>
#include <vector>

#include "dehnkit/error.hpp"
#include "dehnkit/fatgraph.hpp"
#include "dehnkit/surface.hpp"

namespace dehnkit {

enum class CompressedSurfaceKind { Sphere, Disc, ClosedGenus, Bounded };

struct TubeCompressionData {
    int genus = 0;                          // genus of the compressed-side surface
    CompressedSurfaceKind kind = CompressedSurfaceKind::ClosedGenus;
    std::optional<int> boundary_count;      // required for Bounded, derived otherwise
    int q = 1;                              // disc boundary crossings of the tube, all coherent
    std::vector<long long> coefficients;    // a_1..a_{2g}
    int alpha_intersections = 2;            // |Qbar ^ alpha|, at least 2
    std::optional<long long> meridian_coefficient; // ignored; see note above
};

struct AbelianGroup {
    int free_rank = 0;
    std::vector<long long> torsion; // cyclic orders, each >= 2

    bool operator==(const AbelianGroup&) const = default;
    std::string to_text() const; // "Z^r + Z/t1 + ...", "0" when trivial
};

struct CobordismReport {
    AbelianGroup h1_integral;
    int h1_rational_rank = 0;
    bool is_product = false;
    bool is_rational_cobordism = true;
    std::optional<long long> lens_summand;
    SurfaceComponent r_surface;     // same genus, two fewer alpha intersections
    bool tube_ends_coherent = true; // the tube attaches to one side of the surface
    std::vector<std::string> notes; // classification facts not computable from this data
};

// Throws PreconditionError on q = 0 (degenerate crossing), wrong coefficient
// length, kind/genus mismatches, or fewer than two alpha intersections.
CobordismReport cobordism_homology(const TubeCompressionData& d);

// Builds TubeCompressionData with q = cycle length and zero coefficients and
// delegates. Requires is_scharlemann(g, c) and alpha_intersections >= 2.
CobordismReport scharlemann_cycle_to_cobordism(const FatGraph& g, const Cycle& c,
                                               const SurfaceComponent& qbar,
                                               int alpha_intersections);

} // namespace dehnkit
