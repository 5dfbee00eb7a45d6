#include "dehnkit/cobordism.hpp"

#include <cstdlib>
#include <numeric>

namespace dehnkit {

std::string AbelianGroup::to_text() const {
    std::string out;
    if (free_rank > 0) out = "Z^" + std::to_string(free_rank);
    for (long long t : torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + std::to_string(t);
    return out.empty() ? "0" : out;
}

namespace {

void validate(const TubeCompressionData& d) {
    if (d.q == 0)
        throw PreconditionError("degenerate crossing: the compressing disc must cross the tube "
                                "at least once");
    if (d.q < 0) throw PreconditionError("crossing count q must be positive");
    if (d.genus < 0) throw PreconditionError("genus must be nonnegative");
    if (static_cast<int>(d.coefficients.size()) != 2 * d.genus)
        throw PreconditionError("expected " + std::to_string(2 * d.genus) +
                                " surface-basis coefficients, got " +
                                std::to_string(d.coefficients.size()));
    if (d.alpha_intersections < 2)
        throw PreconditionError("the tube accounts for two alpha intersections; fewer than two "
                                "cannot be reduced");
    switch (d.kind) {
        case CompressedSurfaceKind::Sphere:
        case CompressedSurfaceKind::Disc:
            if (d.genus != 0) throw PreconditionError("sphere/disc data must have genus 0");
            break;
        case CompressedSurfaceKind::ClosedGenus:
            break;
        case CompressedSurfaceKind::Bounded:
            if (!d.boundary_count || *d.boundary_count < 1)
                throw PreconditionError("bounded data needs a positive boundary_count");
            break;
    }
}

int boundary_count_of(const TubeCompressionData& d) {
    switch (d.kind) {
        case CompressedSurfaceKind::Sphere: return 0;
        case CompressedSurfaceKind::Disc: return 1;
        case CompressedSurfaceKind::ClosedGenus: return 0;
        case CompressedSurfaceKind::Bounded: return *d.boundary_count;
    }
    return 0;
}

} // namespace

CobordismReport cobordism_homology(const TubeCompressionData& d) {
    validate(d);

    // One relation on 2g+1 generators: free rank 2g and a single cyclic
    // factor of order gcd(a_1, ..., a_{2g}, q).
    long long g = d.q;
    for (long long a : d.coefficients) g = std::gcd(g, std::llabs(a));

    CobordismReport rep;
    rep.h1_integral.free_rank = 2 * d.genus;
    if (g >= 2) rep.h1_integral.torsion.push_back(g);
    rep.h1_rational_rank = 2 * d.genus;
    rep.is_product = d.q == 1;
    rep.is_rational_cobordism = true;
    if ((d.kind == CompressedSurfaceKind::Sphere || d.kind == CompressedSurfaceKind::Disc) &&
        d.q >= 2)
        rep.lens_summand = d.q;

    rep.r_surface.genus = d.genus;
    rep.r_surface.boundary_count = boundary_count_of(d);
    rep.r_surface.puncture_count = d.alpha_intersections - 2;

    if (d.kind != CompressedSurfaceKind::Sphere)
        rep.notes.push_back("W is reducible exactly when it has a lens space summand "
                            "(not decidable from this data)");
    rep.notes.push_back("both surfaces are incompressible in W (not decidable from this data)");
    return rep;
}

CobordismReport scharlemann_cycle_to_cobordism(const FatGraph& g, const Cycle& c,
                                               const SurfaceComponent& qbar,
                                               int alpha_intersections) {
    if (!is_scharlemann(g, c))
        throw PreconditionError("the cycle is not a Scharlemann cycle of the graph");
    if (alpha_intersections < 2)
        throw PreconditionError("a Scharlemann cycle reduces the alpha intersections by two; "
                                "fewer than two cannot be reduced");
    validate(qbar);

    TubeCompressionData d;
    d.genus = qbar.genus;
    if (qbar.boundary_count == 0)
        d.kind = qbar.genus == 0 ? CompressedSurfaceKind::Sphere : CompressedSurfaceKind::ClosedGenus;
    else if (qbar.genus == 0 && qbar.boundary_count == 1)
        d.kind = CompressedSurfaceKind::Disc;
    else {
        d.kind = CompressedSurfaceKind::Bounded;
        d.boundary_count = qbar.boundary_count;
    }
    // The disc of the cycle crosses the tube once per cycle edge, always in
    // the same direction; its class on the surface basis is not pinned down
    // by the cycle, so the coefficients default to zero.
    d.q = static_cast<int>(c.steps.size());
    d.coefficients.assign(2 * d.genus, 0);
    d.alpha_intersections = alpha_intersections;

    CobordismReport rep = cobordism_homology(d);
    // The two tube ends run through the filling annulus in opposite
    // directions, so they attach on one side of the surface and the tubed
    // surface stays orientable.
    rep.tube_ends_coherent = true;
    return rep;
}

} // namespace dehnkit
