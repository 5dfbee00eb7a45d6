#include "dehnkit/fatgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dehnkit {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

FatGraph::FatGraph(Ambient ambient, int mu, bool gabai, std::vector<FatVertex> vertices,
                   std::vector<InteriorEdge> interior_edges,
                   std::vector<BoundaryEdge> boundary_edges, std::optional<SutureMarking> suture)
    : ambient_(ambient),
      mu_(mu),
      gabai_(gabai),
      interior_(std::move(interior_edges)),
      boundary_(std::move(boundary_edges)),
      suture_(std::move(suture)) {
    if (mu_ < 1) throw StructureError("mu must be positive");
    if (vertices.empty()) throw StructureError("a fat graph needs at least one vertex");

    for (const auto& v : vertices) {
        if (index_of_vertex_nothrow(v.id) != -1)
            throw StructureError("duplicate vertex id " + std::to_string(v.id));
        ids_.push_back(v.id);
        signs_.push_back(v.sign);
    }

    const int n = vertex_count();
    if (!boundary_.empty() && ambient_ != Ambient::Disc)
        throw StructureError("boundary edges require disc ambient");
    std::sort(boundary_.begin(), boundary_.end(),
              [](const BoundaryEdge& a, const BoundaryEdge& b) {
                  return a.boundary_pos < b.boundary_pos;
              });
    for (size_t i = 1; i < boundary_.size(); ++i)
        if (boundary_[i].boundary_pos == boundary_[i - 1].boundary_pos)
            throw StructureError("duplicate boundary position " +
                                 std::to_string(boundary_[i].boundary_pos));

    const int b = static_cast<int>(boundary_.size());
    alpha_.assign(n * mu_ + b, -1);
    dart_edge_.assign(n * mu_ + b, 0);

    auto resolve_end = [&](const EdgeEnd& e) {
        int vi = index_of_vertex_nothrow(e.vertex);
        if (vi == -1)
            throw StructureError("edge end references unknown vertex " + std::to_string(e.vertex));
        if (e.slot < 1 || e.slot > mu_)
            throw StructureError("slot " + std::to_string(e.slot) + " out of range 1.." +
                                 std::to_string(mu_));
        return dart_of(vi, e.slot);
    };

    for (size_t k = 0; k < interior_.size(); ++k) {
        int da = resolve_end(interior_[k].a);
        int db = resolve_end(interior_[k].b);
        if (da == db) throw StructureError("edge joins a slot to itself");
        for (int d : {da, db})
            if (alpha_[d] != -1)
                throw StructureError("slot occupied twice: vertex " +
                                     std::to_string(ids_[d / mu_]) + " slot " +
                                     std::to_string(d % mu_ + 1));
        alpha_[da] = db;
        alpha_[db] = da;
        dart_edge_[da] = dart_edge_[db] = static_cast<int>(k);
    }
    for (int k = 0; k < b; ++k) {
        int d = resolve_end(boundary_[k].end);
        if (alpha_[d] != -1)
            throw StructureError("slot occupied twice: vertex " + std::to_string(ids_[d / mu_]) +
                                 " slot " + std::to_string(d % mu_ + 1));
        int bd = n * mu_ + k;
        alpha_[d] = bd;
        alpha_[bd] = d;
        dart_edge_[d] = dart_edge_[bd] = -1 - k;
    }
    for (int d = 0; d < n * mu_; ++d)
        if (alpha_[d] == -1)
            throw StructureError("unoccupied slot: vertex " + std::to_string(ids_[d / mu_]) +
                                 " slot " + std::to_string(d % mu_ + 1));

    if (suture_) {
        if (ambient_ != Ambient::Sphere)
            throw StructureError("suture markings require sphere ambient");
        if (static_cast<int>(suture_->vertex_side.size()) != n)
            throw StructureError("suture marking must assign a side to every vertex");
        if (suture_->edge_crossings.size() != interior_.size())
            throw StructureError("suture marking must assign a crossing count to every edge");
        for (size_t k = 0; k < interior_.size(); ++k) {
            int c = suture_->edge_crossings[k];
            if (c < 0) throw StructureError("suture crossing counts must be nonnegative");
            int va = index_of_vertex_nothrow(interior_[k].a.vertex);
            int vb = index_of_vertex_nothrow(interior_[k].b.vertex);
            bool same = suture_->vertex_side[va] == suture_->vertex_side[vb];
            if (same != (c % 2 == 0))
                throw StructureError("edge " + std::to_string(k) +
                                     ": suture crossing parity disagrees with its endpoint sides");
        }
    }

    // connectivity, with the disc boundary collapsed to one closure vertex
    Dsu dsu(n + 1);
    for (const auto& e : interior_)
        dsu.unite(index_of_vertex_nothrow(e.a.vertex), index_of_vertex_nothrow(e.b.vertex));
    for (const auto& e : boundary_) dsu.unite(index_of_vertex_nothrow(e.end.vertex), n);
    std::set<int> roots;
    for (int v = 0; v < n; ++v) roots.insert(dsu.find(v));
    if (b > 0) roots.insert(dsu.find(n));
    connected_ = roots.size() == 1;

    trace_faces();
}

int FatGraph::index_of_vertex_nothrow(int vertex_id) const {
    for (size_t i = 0; i < ids_.size(); ++i)
        if (ids_[i] == vertex_id) return static_cast<int>(i);
    return -1;
}

int FatGraph::index_of_vertex(int vertex_id) const {
    int i = index_of_vertex_nothrow(vertex_id);
    if (i == -1) throw StructureError("unknown vertex id " + std::to_string(vertex_id));
    return i;
}

VertexSign FatGraph::sign_of(int vertex_id) const { return signs_[index_of_vertex(vertex_id)]; }

bool FatGraph::is_loop(int edge_index) const {
    if (edge_index < 0 || edge_index >= static_cast<int>(interior_.size()))
        throw PreconditionError("unknown edge index " + std::to_string(edge_index));
    return interior_[edge_index].a.vertex == interior_[edge_index].b.vertex;
}

int FatGraph::rotation_next(int dart) const {
    const int n = vertex_count();
    if (dart >= n * mu_) {
        // closure vertex: decreasing boundary position order
        int b = static_cast<int>(boundary_.size());
        int j = dart - n * mu_;
        return n * mu_ + (j - 1 + b) % b;
    }
    int v = dart / mu_, s = dart % mu_;
    int next = signs_[v] == VertexSign::Plus ? (s + 1) % mu_ : (s - 1 + mu_) % mu_;
    return v * mu_ + next;
}

void FatGraph::trace_faces() {
    face_of_.assign(dart_count(), -1);
    face_count_ = 0;
    for (int d = 0; d < dart_count(); ++d) {
        if (face_of_[d] != -1) continue;
        int cur = d;
        while (face_of_[cur] == -1) {
            face_of_[cur] = face_count_;
            cur = rotation_next(alpha_[cur]);
        }
        ++face_count_;
    }
}

int FatGraph::euler_characteristic() const {
    int v = vertex_count() + (boundary_.empty() ? 0 : 1);
    int e = static_cast<int>(interior_.size() + boundary_.size());
    return v - e + face_count_;
}

std::string FatGraph::dump() const {
    std::ostringstream os;
    os << (ambient_ == Ambient::Disc ? "disc" : "sphere") << " mu=" << mu_;
    if (gabai_) os << " gabai";
    os << " V=";
    for (int i = 0; i < vertex_count(); ++i)
        os << (i ? "," : "") << ids_[i] << (signs_[i] == VertexSign::Plus ? "+" : "-");
    os << " IE=";
    for (size_t k = 0; k < interior_.size(); ++k)
        os << (k ? "," : "") << "(" << interior_[k].a.vertex << "." << interior_[k].a.slot << "-"
           << interior_[k].b.vertex << "." << interior_[k].b.slot << ")";
    os << " BE=";
    for (size_t k = 0; k < boundary_.size(); ++k)
        os << (k ? "," : "") << "(" << boundary_[k].end.vertex << "." << boundary_[k].end.slot
           << "@" << boundary_[k].boundary_pos << ")";
    return os.str();
}

ValidationReport admissible(const FatGraph& g) {
    ValidationReport rep;
    if (!g.connected())
        rep.violations.push_back({"embedding", "graph is not connected (the disc boundary "
                                               "counts as one vertex of the closure)"});
    else if (g.euler_characteristic() != 2)
        rep.violations.push_back({"embedding",
                                  "rotation system is not planar: V - E + F = " +
                                      std::to_string(g.euler_characteristic())});

    for (size_t k = 0; k < g.interior_edges().size(); ++k) {
        const auto& e = g.interior_edges()[k];
        if (e.a.slot == e.b.slot)
            rep.violations.push_back({"Observation 1",
                                      "edge " + std::to_string(k) +
                                          " has the same label " + std::to_string(e.a.slot) +
                                          " at both endpoints"});
    }

    if (g.gabai_flag()) {
        if (g.ambient() != Ambient::Disc)
            rep.violations.push_back({"Gabai ambient", "Gabai graphs live in a disc"});
        if (static_cast<int>(g.boundary_edges().size()) >= g.mu())
            rep.violations.push_back(
                {"Gabai bound", std::to_string(g.boundary_edges().size()) +
                                    " boundary edges; a Gabai disc meets the surface fewer than mu = " +
                                    std::to_string(g.mu()) + " times"});
        for (int i = 1; i < g.vertex_count(); ++i)
            if (g.sign_of(g.vertex_ids()[i]) != g.sign_of(g.vertex_ids()[0])) {
                rep.violations.push_back(
                    {"Gabai signs", "all intersection points with a Gabai disc share one sign"});
                break;
            }
    }
    return rep;
}

EdgeLabels edge_labels(const FatGraph& g, int interior_edge_index) {
    if (interior_edge_index < 0 ||
        interior_edge_index >= static_cast<int>(g.interior_edges().size()))
        throw PreconditionError("unknown edge index " + std::to_string(interior_edge_index));
    const auto& e = g.interior_edges()[interior_edge_index];
    return {e.a.slot, e.b.slot};
}

EdgeLabels boundary_edge_labels(const FatGraph& g, int boundary_edge_index) {
    if (boundary_edge_index < 0 ||
        boundary_edge_index >= static_cast<int>(g.boundary_edges().size()))
        throw PreconditionError("unknown boundary edge index " +
                                std::to_string(boundary_edge_index));
    return {g.boundary_edges()[boundary_edge_index].end.slot, std::nullopt};
}

namespace {

struct ResolvedStep {
    int edge;
    int tail_vertex, tail_slot;
    int head_vertex, head_slot;
};

std::vector<ResolvedStep> resolve_cycle(const FatGraph& g, const Cycle& c) {
    if (c.steps.empty()) throw PreconditionError("empty cycle");
    std::vector<ResolvedStep> out;
    for (const auto& st : c.steps) {
        if (st.edge < 0 || st.edge >= static_cast<int>(g.interior_edges().size()))
            throw PreconditionError("cycle references unknown edge " + std::to_string(st.edge));
        const auto& e = g.interior_edges()[st.edge];
        EdgeEnd tail = st.from_a ? e.a : e.b;
        EdgeEnd head = st.from_a ? e.b : e.a;
        out.push_back({st.edge, g.index_of_vertex(tail.vertex), tail.slot,
                       g.index_of_vertex(head.vertex), head.slot});
    }
    for (size_t i = 0; i < out.size(); ++i) {
        const auto& cur = out[i];
        const auto& nxt = out[(i + 1) % out.size()];
        if (cur.head_vertex != nxt.tail_vertex)
            throw PreconditionError("cycle steps are not consecutive");
    }
    std::set<int> seen;
    for (const auto& st : out)
        if (!seen.insert(st.tail_vertex).second)
            throw PreconditionError("cycle is not simple: vertex visited twice");
    return out;
}

void require_lambda_cycle(const FatGraph& g, const Cycle& c,
                          const std::vector<ResolvedStep>& steps) {
    if (c.tail_label < 1 || c.tail_label > g.mu())
        throw PreconditionError("cycle tail label out of range");
    for (const auto& st : steps)
        if (st.tail_slot != c.tail_label)
            throw PreconditionError("not a lambda-cycle: a traversal departs through slot " +
                                    std::to_string(st.tail_slot) + ", expected " +
                                    std::to_string(c.tail_label));
}

void require_planar(const FatGraph& g, const char* op) {
    if (!g.connected() || g.euler_characteristic() != 2)
        throw PreconditionError(std::string(op) + " requires a connected planar rotation system");
}

} // namespace

std::array<SideContent, 2> cut_along_cycle(const FatGraph& g, const Cycle& c) {
    require_planar(g, "cut_along_cycle");
    auto steps = resolve_cycle(g, c);

    std::vector<char> edge_on_cycle(g.interior_edges().size(), 0);
    std::vector<char> vertex_on_cycle(g.vertex_count(), 0);
    for (const auto& st : steps) {
        edge_on_cycle[st.edge] = 1;
        vertex_on_cycle[st.tail_vertex] = 1;
    }

    const int n = g.vertex_count();
    const int b = static_cast<int>(g.boundary_edges().size());
    Dsu regions(g.face_count());
    for (int d = 0; d < g.dart_count(); ++d) {
        int e = g.dart_edge(d);
        if (e >= 0 && edge_on_cycle[e]) continue; // the curve is not crossed here
        regions.unite(g.face_of(d), g.face_of(g.alpha(d)));
    }

    std::set<int> roots;
    for (int f = 0; f < g.face_count(); ++f) roots.insert(regions.find(f));
    if (roots.size() != 2)
        throw PreconditionError("cutting along the cycle produced " +
                                std::to_string(roots.size()) +
                                " regions; a simple closed curve on the sphere gives 2");
    std::vector<int> root_list(roots.begin(), roots.end());
    auto side_of_face = [&](int f) { return regions.find(f) == root_list[0] ? 0 : 1; };

    std::array<SideContent, 2> sides;
    for (int v = 0; v < n; ++v) {
        if (vertex_on_cycle[v]) continue;
        sides[side_of_face(g.face_of(g.dart_of(v, 1)))].vertices.push_back(v);
    }
    for (size_t k = 0; k < g.interior_edges().size(); ++k) {
        if (edge_on_cycle[k]) continue;
        const auto& e = g.interior_edges()[k];
        int d = g.dart_of(g.index_of_vertex(e.a.vertex), e.a.slot);
        sides[side_of_face(g.face_of(d))].edges.push_back(static_cast<int>(k));
    }
    if (b > 0) {
        int closure_dart = n * g.mu() + 0;
        sides[side_of_face(g.face_of(closure_dart))].has_closure = true;
    }
    return sides;
}

namespace {

// Smallest interior-edge count over the sides a disc bounded by the cycle
// may occupy. The side holding the disc closure never qualifies.
int best_interior_count(const FatGraph& g, const Cycle& c) {
    auto sides = cut_along_cycle(g, c);
    int best = -1;
    for (const auto& s : sides) {
        if (s.has_closure) continue;
        int count = static_cast<int>(s.edges.size());
        if (best == -1 || count < best) best = count;
    }
    return best == -1 ? 0 : best;
}

Cycle build_cycle(const FatGraph& g, const std::vector<int>& vertex_loop, int label) {
    // rotate so the smallest vertex index leads
    auto it = std::min_element(vertex_loop.begin(), vertex_loop.end());
    std::vector<int> rot(it, vertex_loop.end());
    rot.insert(rot.end(), vertex_loop.begin(), it);

    Cycle c;
    c.tail_label = label;
    for (int v : rot) {
        int dart = v * g.mu() + label - 1;
        int e = g.dart_edge(dart);
        const auto& edge = g.interior_edges()[e];
        bool from_a = g.index_of_vertex(edge.a.vertex) == v && edge.a.slot == label;
        c.steps.push_back({e, from_a});
    }
    c.interior_edge_count = best_interior_count(g, c);
    return c;
}

} // namespace

std::vector<Cycle> find_lambda_cycles(const FatGraph& g, int label) {
    if (label < 1 || label > g.mu())
        throw PreconditionError("label out of range 1.." + std::to_string(g.mu()));
    require_planar(g, "find_lambda_cycles");

    const int n = g.vertex_count();
    auto successor = [&](int v) -> int {
        int dart = v * g.mu() + label - 1;
        int e = g.dart_edge(dart);
        if (e < 0) return -1; // departs into the disc boundary
        const auto& edge = g.interior_edges()[e];
        int va = g.index_of_vertex(edge.a.vertex);
        int da = va * g.mu() + edge.a.slot - 1;
        return da == dart ? g.index_of_vertex(edge.b.vertex) : va;
    };

    std::vector<int> state(n, 0);
    std::vector<Cycle> out;
    for (int s = 0; s < n; ++s) {
        if (state[s]) continue;
        std::vector<int> path;
        int cur = s;
        while (cur != -1 && state[cur] == 0) {
            state[cur] = 1;
            path.push_back(cur);
            cur = successor(cur);
        }
        if (cur != -1 && state[cur] == 1) {
            auto it = std::find(path.begin(), path.end(), cur);
            out.push_back(build_cycle(g, std::vector<int>(it, path.end()), label));
        }
        for (int v : path) state[v] = 2;
    }
    std::sort(out.begin(), out.end(), [&](const Cycle& a, const Cycle& b) {
        auto key = [&](const Cycle& c) {
            const auto& e = g.interior_edges()[c.steps[0].edge];
            int tail = g.index_of_vertex(c.steps[0].from_a ? e.a.vertex : e.b.vertex);
            return std::tuple(tail, c.steps.size());
        };
        if (key(a) != key(b)) return key(a) < key(b);
        return std::lexicographical_compare(
            a.steps.begin(), a.steps.end(), b.steps.begin(), b.steps.end(),
            [](const CycleStep& x, const CycleStep& y) {
                return std::tuple(x.edge, x.from_a) < std::tuple(y.edge, y.from_a);
            });
    });
    return out;
}

std::optional<int> scharlemann_side(const FatGraph& g, const Cycle& c) {
    require_planar(g, "is_scharlemann");
    auto steps = resolve_cycle(g, c);
    require_lambda_cycle(g, c, steps);

    VertexSign s0 = g.sign_of(g.vertex_ids()[steps[0].tail_vertex]);
    for (const auto& st : steps)
        if (g.sign_of(g.vertex_ids()[st.tail_vertex]) != s0) return std::nullopt; // not great

    auto sides = cut_along_cycle(g, c);
    for (int i = 0; i < 2; ++i)
        if (sides[i].empty()) return i;
    return std::nullopt;
}

bool is_scharlemann(const FatGraph& g, const Cycle& c) {
    return scharlemann_side(g, c).has_value();
}

ScharlemannSearchTrace find_scharlemann_cycle_traced(const FatGraph& g) {
    if (!g.gabai_flag())
        throw PreconditionError("not a Gabai graph: the gabai flag is not set");
    auto rep = admissible(g);
    if (!rep.ok())
        throw PreconditionError("not an admissible Gabai graph:\n" + rep.to_text());

    // (1) a label no boundary edge carries at its interior endpoint
    std::vector<char> used(g.mu() + 1, 0);
    for (const auto& be : g.boundary_edges()) used[be.end.slot] = 1;
    int label0 = 0;
    for (int i = 1; i <= g.mu(); ++i)
        if (!used[i]) {
            label0 = i;
            break;
        }
    // b < mu guarantees a free label
    auto first_cycles = find_lambda_cycles(g, label0);
    if (first_cycles.empty())
        throw CounterexampleError("no lambda-cycle found for an unused label; this contradicts "
                                  "the existence observation",
                                  g.dump());
    ScharlemannSearchTrace trace;
    trace.first_found = first_cycles.front();

    // (2)+(3) gather every lambda-cycle and refine: innermost first, then
    // fewest interior edges, then canonical discovery order.
    std::vector<Cycle> all;
    for (int i = 1; i <= g.mu(); ++i) {
        auto cs = find_lambda_cycles(g, i);
        all.insert(all.end(), cs.begin(), cs.end());
    }

    struct Ranked {
        int idx;
        bool innermost;
        int edges;
    };
    std::vector<Ranked> ranked;
    std::vector<std::array<SideContent, 2>> all_sides;
    all_sides.reserve(all.size());
    for (const auto& c : all) all_sides.push_back(cut_along_cycle(g, c));

    auto contains_cycle = [&](const SideContent& side, const Cycle& inner) {
        std::set<int> vs(side.vertices.begin(), side.vertices.end());
        std::set<int> es(side.edges.begin(), side.edges.end());
        for (const auto& st : inner.steps) {
            if (!es.count(st.edge)) return false;
            const auto& e = g.interior_edges()[st.edge];
            int tv = g.index_of_vertex(st.from_a ? e.a.vertex : e.b.vertex);
            if (!vs.count(tv)) return false;
        }
        return true;
    };

    for (size_t i = 0; i < all.size(); ++i) {
        bool innermost = false;
        for (const auto& side : all_sides[i]) {
            if (side.has_closure) continue;
            bool holds_cycle = false;
            for (size_t j = 0; j < all.size(); ++j)
                if (j != i && contains_cycle(side, all[j])) holds_cycle = true;
            if (!holds_cycle) innermost = true;
        }
        ranked.push_back({static_cast<int>(i), innermost, all[i].interior_edge_count});
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.innermost != b.innermost) return a.innermost;
        return a.edges < b.edges;
    });

    for (const auto& r : ranked) {
        if (auto side = scharlemann_side(g, all[r.idx])) {
            trace.chosen = all[r.idx];
            trace.side = *side;
            return trace;
        }
    }
    throw CounterexampleError(
        "no Scharlemann cycle in an admissible Gabai graph; this would falsify the "
        "existence lemma at this size",
        g.dump());
}

Cycle find_scharlemann_cycle(const FatGraph& g) { return find_scharlemann_cycle_traced(g).chosen; }

FullnessInfo fullness(const FatGraph& g, int vertex_id) {
    g.index_of_vertex(vertex_id); // validates
    int rho = 0;
    for (const auto& e : g.interior_edges()) {
        bool at_a = e.a.vertex == vertex_id;
        bool at_b = e.b.vertex == vertex_id;
        if (at_a != at_b) ++rho;
    }
    return {rho, rho >= g.mu()};
}

FullnessInfo suture_fullness(const FatGraph& g, SutureSide side) {
    if (!g.suture()) throw PreconditionError("no marked suture");
    const auto& m = *g.suture();
    int rho = 0;
    for (size_t k = 0; k < g.interior_edges().size(); ++k) {
        if (m.edge_crossings[k] < 1) continue;
        const auto& e = g.interior_edges()[k];
        // the first and last arcs of a cut edge run from its end vertices to
        // the suture, one on each end's side
        if (m.vertex_side[g.index_of_vertex(e.a.vertex)] == side) ++rho;
        if (m.vertex_side[g.index_of_vertex(e.b.vertex)] == side) ++rho;
    }
    return {rho, rho >= g.mu()};
}

LoopClass classify_loop(const FatGraph& g, int edge_index) {
    if (g.ambient() != Ambient::Sphere)
        throw PreconditionError("loop classification is defined on the sphere ambient");
    if (!g.is_loop(edge_index)) throw PreconditionError("edge is not a loop");

    Cycle c;
    c.steps.push_back({edge_index, true});
    c.tail_label = g.interior_edges()[edge_index].a.slot;
    auto sides = cut_along_cycle(g, c);
    for (const auto& s : sides)
        if (s.vertices.empty() && !s.has_closure) return LoopClass::Inessential;
    return LoopClass::Essential;
}

CompleteGraphResult complete_graph_structure(const FatGraph& g) {
    if (g.ambient() != Ambient::Sphere || !g.suture())
        throw PreconditionError("no marked suture");
    const auto& m = *g.suture();
    CompleteGraphResult res;
    res.complete = true;

    auto joined_in_region = [&](int va, int vb) {
        for (size_t k = 0; k < g.interior_edges().size(); ++k) {
            if (m.edge_crossings[k] != 0) continue;
            const auto& e = g.interior_edges()[k];
            int a = g.index_of_vertex(e.a.vertex), b = g.index_of_vertex(e.b.vertex);
            if ((a == va && b == vb) || (a == vb && b == va)) return true;
        }
        return false;
    };

    int side_count[2] = {0, 0};
    for (int v = 0; v < g.vertex_count(); ++v)
        side_count[m.vertex_side[v] == SutureSide::Plus ? 1 : 0]++;

    for (int va = 0; va < g.vertex_count() && res.complete; ++va) {
        for (int vb = va + 1; vb < g.vertex_count(); ++vb) {
            if (m.vertex_side[va] != m.vertex_side[vb]) continue;
            if (!joined_in_region(va, vb)) {
                res.complete = false;
                res.missing_pair = {g.vertex_ids()[va], g.vertex_ids()[vb]};
                break;
            }
        }
    }
    for (int v = 0; v < g.vertex_count() && res.complete; ++v) {
        bool to_boundary = false;
        for (size_t k = 0; k < g.interior_edges().size(); ++k) {
            if (m.edge_crossings[k] < 1) continue;
            const auto& e = g.interior_edges()[k];
            if (e.a.vertex == g.vertex_ids()[v] || e.b.vertex == g.vertex_ids()[v])
                to_boundary = true;
        }
        if (!to_boundary) {
            res.complete = false;
            res.unjoined_vertex = g.vertex_ids()[v];
        }
    }
    res.kuratowski_violation = res.complete && (side_count[0] > 3 || side_count[1] > 3);
    return res;
}

std::optional<GabaiWitness> gabai_witness_search(const FatGraph& g) {
    if (g.ambient() != Ambient::Sphere || !g.suture())
        throw PreconditionError("the witness search needs a sphere graph with a marked suture");
    const auto& m = *g.suture();

    for (int v = 0; v < g.vertex_count(); ++v) {
        int vid = g.vertex_ids()[v];
        auto f = fullness(g, vid);
        if (f.full) continue;

        std::vector<int> loops;
        for (size_t k = 0; k < g.interior_edges().size(); ++k)
            if (g.is_loop(static_cast<int>(k)) && g.interior_edges()[k].a.vertex == vid &&
                m.edge_crossings[k] == 0)
                loops.push_back(static_cast<int>(k));

        bool any_essential = false;
        for (int l : loops)
            if (classify_loop(g, l) == LoopClass::Essential) any_essential = true;

        if (!any_essential) {
            GabaiWitness w;
            w.kind = GabaiWitness::Kind::VertexNoEssentialLoop;
            w.vertex = vid;
            w.rho = f.rho;
            w.mu = g.mu();
            w.pre_slide = false;
            return w;
        }
        for (int l : loops) {
            Cycle c;
            c.steps.push_back({l, true});
            c.tail_label = g.interior_edges()[l].a.slot;
            auto sides = cut_along_cycle(g, c);
            for (const auto& side : sides) {
                bool one_sided = true;
                bool seen[2] = {false, false};
                for (int u : side.vertices) seen[m.vertex_side[u] == SutureSide::Plus ? 1 : 0] = true;
                if (seen[0] && seen[1]) one_sided = false;
                if (one_sided) {
                    GabaiWitness w;
                    w.kind = GabaiWitness::Kind::VertexLoopOneSided;
                    w.vertex = vid;
                    w.rho = f.rho;
                    w.mu = g.mu();
                    w.pre_slide = true;
                    return w;
                }
            }
        }
    }

    for (SutureSide side : {SutureSide::Minus, SutureSide::Plus}) {
        auto f = suture_fullness(g, side);
        if (!f.full) {
            GabaiWitness w;
            w.kind = GabaiWitness::Kind::SutureSideCircle;
            w.side = side;
            w.rho = f.rho;
            w.mu = g.mu();
            w.pre_slide = true;
            return w;
        }
    }
    return std::nullopt;
}

} // namespace dehnkit
