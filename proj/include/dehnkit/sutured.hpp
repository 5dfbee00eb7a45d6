#pragma once

// Sutured manifold boundary data, axiom and tautness checkers, and the index
// calculus for parameterizing surfaces.
//
// The model is strictly boundary-combinatorial: regions, sutures and the
// endpoints of the 1-complex are ids; annular suture neighborhoods are
// implicit. Facts about the interior 3-manifold (irreducibility, tautness of
// the boundary surfaces) are declared input flags, echoed in reports and
// never computed.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dehnkit/error.hpp"
#include "dehnkit/surface.hpp"

namespace dehnkit {

enum class RegionSign { Minus, Plus, Torus };

struct BoundaryRegion {
    int id = 0;
    RegionSign sign = RegionSign::Plus;
    int genus = 0;
    std::vector<int> boundary_circle_ids; // suture ids this region is glued along
};

struct SutureCurve {
    int id = 0;
    int minus_region = 0; // region of sign '-' on one side
    int plus_region = 0;  // region of sign '+' on the other
};

struct BoundaryPattern {
    std::vector<BoundaryRegion> regions;
    std::vector<SutureCurve> sutures;
};

struct BetaArc {
    int id = 0;
    int endpoint_minus_region = 0;
    int endpoint_plus_region = 0;
};

struct SuturedData {
    std::vector<BoundaryPattern> boundary_components;
    std::vector<BetaArc> beta_arcs;
    int beta_loops = 0;
    bool declared_irreducible = true; // "M - beta is irreducible", declared
    bool declared_r_taut = true;      // R_-, R_+, T(gamma) taut, declared
};

struct Violation {
    std::string axiom;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> notes;

    bool ok() const { return violations.empty(); }
    std::string to_text() const; // line-oriented "axiom-id: message"
};

// Checks the bullet axioms decidable from the boundary data: suture
// adjacency signs, T-regions being closed tori, and the bijection between
// region boundary circles and suture ids within each boundary component.
// Dangling ids and duplicate ids are structure errors, not violations.
ValidationReport check_sutured_axioms(const SuturedData& data);

// Decidable tautness bullets: no arc with both endpoints on the same sign,
// no arc endpoint on a torus region. The irreducibility and R-tautness
// bullets are echoed from the declared flags.
ValidationReport check_beta_taut_conditions(const SuturedData& data);

// ---- parameterizing surfaces -------------------------------------------

enum class TokenKind { Suture, Arc, SpanCircle };

struct WordToken {
    TokenKind kind;
    int id; // suture id / beta-arc id

    bool operator==(const WordToken&) const = default;
};

// One boundary circle's itinerary: the cyclic sequence of suture crossings
// and meridional-annulus traversals it makes. A circle component of the
// boundary lying inside one annulus A(e) is a singleton SpanCircle word.
using BoundaryWord = std::vector<WordToken>;

struct ParamPiece {
    SurfaceComponent surface;
    std::vector<BoundaryWord> words; // one word per boundary circle
};

struct ParamSurface {
    std::vector<ParamPiece> pieces;
    // Optional redundant spanning-arc counts per beta-arc id; must match the
    // words when present.
    std::map<int, int> mu_per_edge;
};

// (P1) words are well-formed and all ids resolve in `data`;
// (P2) SpanCircle tokens only occur as entire singleton words;
// (P3) no closed sphere piece, and every disc piece must meet gamma or the
//      spanning structure of the beta-annuli at least twice. (A disc whose
//      boundary carries fewer than two Suture/Arc tokens is disjoint from
//      gamma and the arc annuli up to isotopy, or witnesses a boundary
//      compression of the 1-complex; neither is a parameterizing surface.)
// Dangling ids throw StructureError.
ValidationReport check_param_conditions(const ParamSurface& q, const SuturedData& data);

// I(Q) = -2 chi(Q) + |dQ ^ gamma| + mu(Q), evaluated piecewise and summed.
// Precondition: q passes check_param_conditions (pass the same data).
// Nonnegative for every surface the checks accept.
long long index(const ParamSurface& q, const SuturedData& data);

// Per-piece contribution, same formula.
long long piece_index(const ParamPiece& piece);

// The Dehn-surgery specialization: a closed surface of Euler characteristic
// qbar_chi meeting the surgery core alpha_intersections times gives a
// parameterizing surface of this index.
long long dehn_surgery_index(int qbar_chi, int alpha_intersections);

// The 2-handle specialization: all boundary components parallel to a curve
// meeting the handle attaching circle delta times.
long long two_handle_index(int qbar_chi, int boundary_components, int handle_delta);

enum class ZeroIndexDiscType {
    Cancelling,          // one arc traversal, one suture crossing
    NonSelfAmalgamating, // two traversals of distinct arcs, no sutures
    Product,             // two suture crossings, no arcs
    SelfAmalgamating,    // one arc traversed twice, no sutures
    None
};

std::string to_string(ZeroIndexDiscType t);

// Classifies the boundary word of a disc piece. Words are cyclic; length-2
// words cover exactly the four index-zero types. Throws PreconditionError
// when the piece is not a disc.
ZeroIndexDiscType classify_zero_index_disc(const ParamPiece& disc);
ZeroIndexDiscType classify_zero_index_word(const BoundaryWord& word);

} // namespace dehnkit
