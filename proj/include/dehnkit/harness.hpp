#pragma once

// Exhaustive enumeration of admissible Gabai-disc graphs, brute-force
// verification of the combinatorial lemmas at desk scale, and decision
// tables for the surgery theorems.
//
// Enumeration identifies graphs up to rotation-system isomorphism: vertex
// relabeling, cyclic rotation of the disc boundary sequence, and the global
// reflection (which relabels slot s to mu+1-s and reverses the boundary).
// The canonical form is the lexicographically least breadth-first rotation
// code over all start vertices and both reflections; reflected graphs are
// identified because nothing in the theory distinguishes the chirality.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dehnkit/fatgraph.hpp"
#include "dehnkit/sutured.hpp"

namespace dehnkit {

struct EnumerationBounds {
    int max_vertices = 4;
    int mu = 2;
    int max_boundary_edges = 0; // must stay < mu
};

// Streams every admissible gabai-flagged disc graph within the bounds,
// exactly once up to isomorphism, in deterministic order (vertex count,
// then boundary edge count, then canonical code). Throws PreconditionError
// when max_boundary_edges >= mu.
void enumerate_gabai_graphs(const EnumerationBounds& bounds,
                            const std::function<void(const FatGraph&)>& sink);
std::vector<FatGraph> enumerate_gabai_graphs(const EnumerationBounds& bounds);

// Canonical code of a graph under the isomorphisms above; equal codes mean
// isomorphic graphs (all vertices must share one sign).
std::string canonical_code(const FatGraph& g);

struct VerificationReport {
    std::string family;
    std::string params;
    long long instances = 0;
    long long rejected = 0; // inadmissible inputs skipped by the gate
    std::vector<std::string> failures;
    double wall_seconds = 0.0;

    bool ok() const { return failures.empty(); }
    std::string to_text() const;
};

// Runs find_scharlemann_cycle over every enumerated graph with
// max_boundary_edges = mu - 1; a failure is a graph where the search throws
// or its output fails is_scharlemann. Inadmissible instances (possible when
// a caller supplies its own family) are gated out and counted as rejected,
// never as failures.
VerificationReport verify_scharlemann_existence(int max_vertices, int mu);
VerificationReport verify_scharlemann_over(const std::vector<FatGraph>& family);

// For every enumerated graph and every label carried by no boundary edge's
// interior endpoint, find_lambda_cycles must be nonempty.
VerificationReport verify_lambda_cycle_existence(int max_vertices, int mu);
VerificationReport verify_lambda_over(const std::vector<FatGraph>& family);

struct ConnectivityFamilyConfig {
    int max_arcs = 2;              // beta arcs; the graph has two vertices per arc
    int mu = 3;                    // strands per arc
    int max_extra_crossings = 1;   // suture crossings beyond parity, in steps of 2
    unsigned seed = 1;             // recorded in the report; the family is exhaustive
};

// One instance of the terminal-sphere family: a one-suture sphere graph
// whose boundary words are derived by strand tracing, with each boundary
// circle assigned the largest Euler characteristic its word type allows.
struct ConnectivityInstance {
    FatGraph graph;
    SuturedData sutured;
    ParamSurface surface;
    // graph edges each piece's boundary circle runs along, parallel to
    // surface.pieces
    std::vector<std::vector<int>> piece_edges;
    long long index_value = 0;
};

// Enumerates the family and checks: whenever two full vertices on one side
// of the suture have no suture-free edge joining them, the index of the
// derived surface is at least 2 mu.
VerificationReport verify_connectivity_dichotomy(const ConnectivityFamilyConfig& cfg);

// Streams the instances, for tests that recheck the per-component
// accounting directly.
void enumerate_connectivity_family(const ConnectivityFamilyConfig& cfg,
                                   const std::function<void(const ConnectivityInstance&)>& sink);

// ---- surgery theorem scenarios -------------------------------------------

enum class ScenarioSurface { Sphere, Disc, Annulus, Torus, GenusG };

struct ScenarioFlags {
    bool n_irreducible = false;
    bool n_boundary_irreducible = false;
    bool m_irreducible = false;
    bool h2_nonzero = false;
    bool exceptional_class = false;
    bool m_prime_irreducible = false;
    bool m_prime_atoroidal = false;
    bool boundary_component_bound_ok = false;
    bool assumptions_a_to_d = false;

    bool operator==(const ScenarioFlags&) const = default;
};

struct Scenario {
    int delta = 1;
    ScenarioSurface kind = ScenarioSurface::Sphere;
    int chi = 2;
    int alpha_intersections = 0;
    ScenarioFlags flags;

    bool operator==(const Scenario&) const = default;
};

// Throws PreconditionError when chi disagrees with a specific surface kind.
void validate(const Scenario& s);

enum class InequalityStatus { Holds, Violated };

// Literal evaluation of (delta - 1) * |Qbar ^ alpha| <= -chi(Qbar).
InequalityStatus check_surgery_inequality(const Scenario& s);

enum class ConclusionBranch {
    NotApplicable,
    BoundaryIrreducible,    // essential disc: contradiction branch
    LensSummand,            // essential sphere
    DeltaOne,               // torus or annulus with delta = 1
    ToroidalGenusTwo,       // essential torus, delta >= 2
    AnnularSingleTorusGenusTwo // essential annulus, delta >= 2
};

struct ScenarioConclusion {
    ConclusionBranch branch = ConclusionBranch::NotApplicable;
    std::string text;
    std::optional<std::string> missing_flag;
};

std::string to_string(ConclusionBranch b);

// Deterministic decision table for the exceptional surgery theorem. The
// hypotheses are user-asserted flags; a missing one yields NotApplicable
// naming the first failed flag. GenusG scenarios are outside the theorem's
// four conclusions and are rejected.
ScenarioConclusion scenario_report(const Scenario& s);

} // namespace dehnkit
