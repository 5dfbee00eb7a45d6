#pragma once

// Labeled fat-vertex graphs embedded in a disc or sphere via rotation
// systems: admissibility, lambda-cycles, Scharlemann cycles, fullness and
// loop classification.
//
// Embedding conventions.
//   * Every vertex has exactly mu slots, indexed 1..mu, each holding one
//     edge end. The counterclockwise rotation at a vertex of sign '+' is
//     slot order 1,2,...,mu; at a vertex of sign '-' it is mu,...,2,1.
//   * A disc graph closes to a sphere map by collapsing the disc boundary
//     to a single closure vertex whose rotation is the boundary cyclic
//     sequence in decreasing position order (the boundary is viewed from
//     outside the disc). With no boundary edges the closure vertex is
//     omitted and the closed map is the graph itself.
//   * Faces are derived from the rotation system by orbit tracing, never
//     stored; a map is accepted only when it is connected and the traced
//     Euler characteristic is 2.
//   * Slot labels double as the lambda labels read along the filling
//     annulus. The global chirality (+ reads counterclockwise) is a free
//     convention; parallel vertices agreeing is the real constraint.
//
// A single suture circle may be marked on a sphere graph: each vertex is
// assigned a side (R- or R+) and each edge a transverse crossing count of
// the right parity. Realizability of the marking beyond parity is the
// caller's responsibility, matching the counted-data convention of the
// surface module.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dehnkit/error.hpp"
#include "dehnkit/sutured.hpp"

namespace dehnkit {

enum class Ambient { Disc, Sphere };
enum class VertexSign { Plus, Minus };
enum class SutureSide { Minus, Plus };

struct FatVertex {
    int id;
    VertexSign sign;
};

struct EdgeEnd {
    int vertex; // vertex id
    int slot;   // 1..mu

    bool operator==(const EdgeEnd&) const = default;
};

struct InteriorEdge {
    EdgeEnd a, b;

    bool operator==(const InteriorEdge&) const = default;
};

struct BoundaryEdge {
    EdgeEnd end;
    int boundary_pos; // position in the cyclic order along the disc boundary

    bool operator==(const BoundaryEdge&) const = default;
};

struct SutureMarking {
    std::vector<SutureSide> vertex_side; // parallel to the vertex list
    std::vector<int> edge_crossings;     // parallel to the interior edge list
};

// One directed traversal of an interior edge.
struct CycleStep {
    int edge;    // index into interior_edges()
    bool from_a; // true: traversed a -> b

    bool operator==(const CycleStep&) const = default;
};

struct Cycle {
    std::vector<CycleStep> steps;
    int tail_label = 0;          // every traversal departs through this slot
    int interior_edge_count = 0; // edges strictly inside the disc bounded by the cycle

    bool operator==(const Cycle& o) const {
        return steps == o.steps && tail_label == o.tail_label;
    }
};

struct EdgeLabels {
    int first;
    std::optional<int> second; // nullopt marks the disc-boundary end
};

struct FullnessInfo {
    int rho = 0;
    bool full = false;
};

enum class LoopClass { Essential, Inessential };

struct CompleteGraphResult {
    bool complete = false;
    // First witness of failure, when not complete.
    std::optional<std::pair<int, int>> missing_pair; // vertex ids lacking a region edge
    std::optional<int> unjoined_vertex;              // vertex id with no edge to the suture
    // Complete structure claimed on more than 3 vertices in one region: the
    // planarity obstruction (the easy half of Kuratowski) is violated by the
    // marking data.
    bool kuratowski_violation = false;
};

struct GabaiWitness {
    enum class Kind {
        VertexNoEssentialLoop, // case (1)
        VertexLoopOneSided,    // case (2), pre-slide
        SutureSideCircle       // case (3), pre-slide
    };
    Kind kind;
    std::optional<int> vertex;          // for the vertex cases
    std::optional<SutureSide> side;     // for the boundary-circle case
    int rho = 0;
    int mu = 0;
    bool pre_slide = false; // the witness still needs the cancelling-disc slides
};

// What lies strictly on one side of a simple cycle.
struct SideContent {
    std::vector<int> vertices; // vertex indices strictly inside
    std::vector<int> edges;    // interior edge indices strictly inside
    bool has_closure = false;  // the disc-boundary closure vertex lies on this side

    bool empty() const { return vertices.empty() && edges.empty() && !has_closure; }
};

class FatGraph {
public:
    // Validates structure (unique ids, every slot filled exactly once,
    // boundary edges only on disc ambient, marking sizes and parity) and
    // precomputes the face structure. Throws StructureError.
    FatGraph(Ambient ambient, int mu, bool gabai, std::vector<FatVertex> vertices,
             std::vector<InteriorEdge> interior_edges, std::vector<BoundaryEdge> boundary_edges,
             std::optional<SutureMarking> suture = std::nullopt);

    Ambient ambient() const { return ambient_; }
    int mu() const { return mu_; }
    bool gabai_flag() const { return gabai_; }
    int vertex_count() const { return static_cast<int>(signs_.size()); }
    const std::vector<int>& vertex_ids() const { return ids_; }
    VertexSign sign_of(int vertex_id) const;
    const std::vector<InteriorEdge>& interior_edges() const { return interior_; }
    const std::vector<BoundaryEdge>& boundary_edges() const { return boundary_; }
    const std::optional<SutureMarking>& suture() const { return suture_; }

    bool connected() const { return connected_; }
    int face_count() const { return face_count_; }
    // V - E + F of the sphere closure.
    int euler_characteristic() const;

    int index_of_vertex(int vertex_id) const; // StructureError on unknown id
    bool is_loop(int edge_index) const;

    // Dart-level view of the combinatorial map. Darts are numbered
    // v*mu + (slot-1) for vertex index v, followed by one dart per boundary
    // edge in boundary-position order.
    int dart_count() const { return static_cast<int>(alpha_.size()); }
    int dart_of(int vindex, int slot) const { return vindex * mu_ + slot - 1; }
    int alpha(int dart) const { return alpha_[dart]; }
    // interior edge index, or -1-k for the k-th boundary edge
    int dart_edge(int dart) const { return dart_edge_[dart]; }
    int face_of(int dart) const { return face_of_[dart]; }
    int rotation_next(int dart) const;

    std::string dump() const; // compact single-line description, for reports

private:
    Ambient ambient_;
    int mu_;
    bool gabai_;
    std::vector<int> ids_;
    std::vector<VertexSign> signs_;
    std::vector<InteriorEdge> interior_;
    std::vector<BoundaryEdge> boundary_; // sorted by boundary_pos
    std::optional<SutureMarking> suture_;

    std::vector<int> alpha_;
    std::vector<int> dart_edge_;
    std::vector<int> face_of_;
    int face_count_ = 0;
    bool connected_ = false;

    int index_of_vertex_nothrow(int vertex_id) const;
    void trace_faces();
};

// Embedding invariants, the distinct-labels condition on every interior
// edge, and (when the gabai flag is set) the Gabai-disc conditions:
// boundary edges fewer than mu, at least one vertex, all vertices parallel.
ValidationReport admissible(const FatGraph& g);

// Slot labels at the two ends; boundary edges report one label plus the
// boundary marker.
EdgeLabels edge_labels(const FatGraph& g, int interior_edge_index);
EdgeLabels boundary_edge_labels(const FatGraph& g, int boundary_edge_index);

// All simple directed cycles in which every edge is traversed out of slot
// `label` of its tail vertex. Deterministic order: smallest vertex first,
// then length, then lexicographic steps.
std::vector<Cycle> find_lambda_cycles(const FatGraph& g, int label);

// The two sides obtained by cutting the sphere closure along a simple
// cycle. sides[0] and sides[1] partition everything not on the cycle.
std::array<SideContent, 2> cut_along_cycle(const FatGraph& g, const Cycle& c);

// True iff the cycle's vertices all share one sign and some permissible
// side of the cycle is empty of vertices and edges. Permissible means: not
// the side holding the disc closure vertex; when the closure is absent
// (sphere ambient, or a disc with no boundary edges) both sides qualify
// and either empty side is accepted.
bool is_scharlemann(const FatGraph& g, const Cycle& c);

// As is_scharlemann, but reports which side was empty (0 or 1).
std::optional<int> scharlemann_side(const FatGraph& g, const Cycle& c);

struct ScharlemannSearchTrace {
    Cycle first_found; // the cycle located by following one tail-label successor map
    Cycle chosen;      // the innermost / fewest-interior-edges refinement
    int side = 0;      // empty side of the chosen cycle
};

// Constructive search: pick a label carried by no boundary edge, follow its
// successor map to a lambda-cycle, then refine innermost-first with fewest
// interior edges (ties broken by canonical cycle order) until the interior
// test passes. Requires an admissible graph with the gabai flag; throws
// CounterexampleError if no cycle passes (not expected on any admissible
// Gabai graph).
Cycle find_scharlemann_cycle(const FatGraph& g);
ScharlemannSearchTrace find_scharlemann_cycle_traced(const FatGraph& g);

// rho(v): incident non-loop edges; full when rho >= mu.
FullnessInfo fullness(const FatGraph& g, int vertex_id);

// rho(delta) for the boundary circle of the R_side region determined by the
// marked suture: spanning arcs from vertices of that side to the suture.
FullnessInfo suture_fullness(const FatGraph& g, SutureSide side);

// A loop is inessential when one side of it contains no vertex (edges are
// permitted). Sphere ambient only.
LoopClass classify_loop(const FatGraph& g, int edge_index);

// With one marked suture: inside each side every vertex pair must be joined
// by an edge disjoint from the suture and every vertex must send an edge to
// the suture. Free circle components of the intersection graph are not
// modelled and so are trivially discarded.
CompleteGraphResult complete_graph_structure(const FatGraph& g);

// Contrapositive search over the fullness lemma: a non-full vertex with no
// essential loop (case 1), a non-full vertex whose loop bounds a disc with
// all interior vertices on one side of the suture (case 2), or a non-full
// suture side (case 3) packages a Gabai-disc witness. Cases 2 and 3 are
// flagged pre-slide: the cancelling-disc slides live outside this data
// model.
std::optional<GabaiWitness> gabai_witness_search(const FatGraph& g);

} // namespace dehnkit
