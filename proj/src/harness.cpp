#include "dehnkit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dehnkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Raw all-plus disc graph during enumeration. Darts are v*mu + s (s 0-based).
struct RawGraph {
    int n = 0, mu = 0;
    std::vector<std::pair<int, int>> matching; // interior dart pairs
    std::vector<int> boundary_darts;           // cyclic order along the disc boundary
};

constexpr int kNoPartner = -1;
constexpr int kBoundary = -2;

std::vector<int> partner_table(const RawGraph& r) {
    std::vector<int> partner(r.n * r.mu, kNoPartner);
    for (auto [a, b] : r.matching) {
        partner[a] = b;
        partner[b] = a;
    }
    for (int d : r.boundary_darts) partner[d] = kBoundary;
    return partner;
}

// Connectivity of the sphere closure (the disc boundary is one node).
bool raw_connected(const RawGraph& r) {
    int nodes = r.n + 1;
    std::vector<int> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : r.matching) parent[find(a / r.mu)] = find(b / r.mu);
    for (int d : r.boundary_darts) parent[find(d / r.mu)] = find(r.n);
    int root = find(0);
    for (int v = 1; v < r.n; ++v)
        if (find(v) != root) return false;
    if (!r.boundary_darts.empty() && find(r.n) != root) return false;
    return true;
}

// Face count of the closure; all vertices are plus, so the rotation at a
// vertex is slot +1 and the closure vertex rotation is decreasing boundary
// order.
bool raw_planar(const RawGraph& r, const std::vector<int>& partner) {
    int b = static_cast<int>(r.boundary_darts.size());
    int total = r.n * r.mu + b;
    std::vector<int> boundary_index(r.n * r.mu, -1);
    for (int j = 0; j < b; ++j) boundary_index[r.boundary_darts[j]] = j;

    auto alpha = [&](int d) {
        if (d >= r.n * r.mu) return r.boundary_darts[d - r.n * r.mu];
        int p = partner[d];
        return p == kBoundary ? r.n * r.mu + boundary_index[d] : p;
    };
    auto next = [&](int d) {
        if (d >= r.n * r.mu) {
            int j = d - r.n * r.mu;
            return r.n * r.mu + (j - 1 + b) % b;
        }
        return (d / r.mu) * r.mu + (d % r.mu + 1) % r.mu;
    };

    std::vector<char> seen(total, 0);
    int faces = 0;
    for (int d = 0; d < total; ++d) {
        if (seen[d]) continue;
        int cur = d;
        while (!seen[cur]) {
            seen[cur] = 1;
            cur = next(alpha(cur));
        }
        ++faces;
    }
    int vertices = r.n + (b > 0 ? 1 : 0);
    int edges = static_cast<int>(r.matching.size()) + b;
    return vertices - edges + faces == 2;
}

RawGraph reflect(const RawGraph& r) {
    RawGraph out;
    out.n = r.n;
    out.mu = r.mu;
    auto refl = [&](int d) { return (d / r.mu) * r.mu + (r.mu - 1 - d % r.mu); };
    for (auto [a, b] : r.matching) out.matching.push_back({refl(a), refl(b)});
    for (auto it = r.boundary_darts.rbegin(); it != r.boundary_darts.rend(); ++it)
        out.boundary_darts.push_back(refl(*it));
    return out;
}

// Breadth-first rotation code from one start vertex. The traversal order is
// fully determined by the structure, so isomorphic graphs give equal code
// sets over all starts.
std::vector<int> bfs_code(const RawGraph& r, const std::vector<int>& partner, int start) {
    int b = static_cast<int>(r.boundary_darts.size());
    std::vector<int> boundary_index(r.n * r.mu, -1);
    for (int j = 0; j < b; ++j) boundary_index[r.boundary_darts[j]] = j;

    const int kClosure = r.n;
    std::vector<int> number(r.n + 1, -1);
    std::vector<int> queue;
    int anchor = -1; // boundary position of the first boundary dart met

    number[start] = 0;
    queue.push_back(start);
    int next_number = 1;

    std::vector<int> code{r.n, r.mu, b};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        if (v != kClosure) {
            for (int s = 0; s < r.mu; ++s) {
                int d = v * r.mu + s;
                if (partner[d] == kBoundary) {
                    if (anchor == -1) anchor = boundary_index[d];
                    if (number[kClosure] == -1) {
                        number[kClosure] = next_number++;
                        queue.push_back(kClosure);
                    }
                    code.push_back(-1);
                    code.push_back((boundary_index[d] - anchor + b) % b);
                } else {
                    int w = partner[d] / r.mu;
                    if (number[w] == -1) {
                        number[w] = next_number++;
                        queue.push_back(w);
                    }
                    code.push_back(number[w]);
                    code.push_back(partner[d] % r.mu);
                }
            }
        } else {
            // closure rotation, anchored at the first boundary dart met
            for (int i = 0; i < b; ++i) {
                int j = (anchor - i + b) % b;
                int d = r.boundary_darts[j];
                int w = d / r.mu;
                if (number[w] == -1) {
                    number[w] = next_number++;
                    queue.push_back(w);
                }
                code.push_back(number[w]);
                code.push_back(d % r.mu);
            }
        }
    }
    return code;
}

std::vector<int> raw_canonical(const RawGraph& r, const std::vector<int>& partner) {
    std::vector<int> best;
    RawGraph refl = reflect(r);
    std::vector<int> refl_partner = partner_table(refl);
    for (int start = 0; start < r.n; ++start) {
        for (int variant = 0; variant < 2; ++variant) {
            auto code = variant == 0 ? bfs_code(r, partner, start)
                                     : bfs_code(refl, refl_partner, start);
            if (best.empty() || code < best) best = std::move(code);
        }
    }
    return best;
}

FatGraph materialize(const RawGraph& r) {
    std::vector<FatVertex> vertices;
    for (int v = 0; v < r.n; ++v) vertices.push_back({v, VertexSign::Plus});
    std::vector<InteriorEdge> interior;
    for (auto [a, b] : r.matching)
        interior.push_back({{a / r.mu, a % r.mu + 1}, {b / r.mu, b % r.mu + 1}});
    std::vector<BoundaryEdge> boundary;
    for (size_t j = 0; j < r.boundary_darts.size(); ++j)
        boundary.push_back(
            {{r.boundary_darts[j] / r.mu, r.boundary_darts[j] % r.mu + 1}, static_cast<int>(j)});
    return FatGraph(Ambient::Disc, r.mu, true, std::move(vertices), std::move(interior),
                    std::move(boundary));
}

// Recursively matches the free darts, lowest first, skipping same-slot pairs.
template <typename F>
void match_darts(RawGraph& r, std::vector<int>& partner, int from, const F& on_complete) {
    int d = from;
    int total = r.n * r.mu;
    while (d < total && partner[d] != kNoPartner) ++d;
    if (d == total) {
        on_complete();
        return;
    }
    for (int e = d + 1; e < total; ++e) {
        if (partner[e] != kNoPartner) continue;
        if (e % r.mu == d % r.mu) continue; // same label at both endpoints
        partner[d] = e;
        partner[e] = d;
        r.matching.push_back({d, e});
        match_darts(r, partner, d + 1, on_complete);
        r.matching.pop_back();
        partner[d] = kNoPartner;
        partner[e] = kNoPartner;
    }
}

} // namespace

std::string canonical_code(const FatGraph& g) {
    RawGraph r;
    r.n = g.vertex_count();
    r.mu = g.mu();
    bool minus = g.sign_of(g.vertex_ids()[0]) == VertexSign::Minus;
    for (int i = 0; i < r.n; ++i)
        if ((g.sign_of(g.vertex_ids()[i]) == VertexSign::Minus) != minus)
            throw PreconditionError("canonical codes are defined for graphs of one sign");
    // A uniformly minus graph is the plus graph with labels read against the
    // other orientation of the filling curve: relabel s -> mu+1-s.
    auto slot = [&](const EdgeEnd& e) {
        int s = e.slot - 1;
        return minus ? r.mu - 1 - s : s;
    };
    for (const auto& e : g.interior_edges())
        r.matching.push_back({g.index_of_vertex(e.a.vertex) * r.mu + slot(e.a),
                              g.index_of_vertex(e.b.vertex) * r.mu + slot(e.b)});
    for (const auto& e : g.boundary_edges())
        r.boundary_darts.push_back(g.index_of_vertex(e.end.vertex) * r.mu + slot(e.end));

    auto partner = partner_table(r);
    auto code = raw_canonical(r, partner);
    std::ostringstream os;
    for (size_t i = 0; i < code.size(); ++i) os << (i ? "." : "") << code[i];
    return os.str();
}

void enumerate_gabai_graphs(const EnumerationBounds& bounds,
                            const std::function<void(const FatGraph&)>& sink) {
    if (bounds.max_boundary_edges >= bounds.mu)
        throw PreconditionError("a Gabai disc meets the surface fewer than mu times: "
                                "max_boundary_edges must be < mu");
    if (bounds.mu < 1) throw PreconditionError("mu must be positive");

    for (int n = 1; n <= bounds.max_vertices; ++n) {
        for (int b = 0; b <= bounds.max_boundary_edges; ++b) {
            if ((n * bounds.mu - b) % 2 != 0) continue;

            std::map<std::vector<int>, RawGraph> found;

            RawGraph r;
            r.n = n;
            r.mu = bounds.mu;
            int total = n * bounds.mu;

            // choose the boundary darts (as a set, then each cyclic order
            // with the smallest dart leading)
            std::vector<int> chosen(b);
            std::function<void(int, int)> choose = [&](int pos, int from) {
                if (pos == b) {
                    std::vector<int> tail(chosen.begin() + (b > 0 ? 1 : 0), chosen.end());
                    std::sort(tail.begin(), tail.end());
                    do {
                        r.boundary_darts.clear();
                        if (b > 0) r.boundary_darts.push_back(chosen[0]);
                        r.boundary_darts.insert(r.boundary_darts.end(), tail.begin(), tail.end());
                        auto partner = partner_table(r);
                        match_darts(r, partner, 0, [&] {
                            if (!raw_connected(r)) return;
                            if (!raw_planar(r, partner)) return;
                            auto code = raw_canonical(r, partner);
                            if (!found.count(code)) found.emplace(std::move(code), r);
                        });
                    } while (std::next_permutation(tail.begin(), tail.end()));
                    return;
                }
                for (int d = from; d < total; ++d) {
                    chosen[pos] = d;
                    choose(pos + 1, d + 1);
                }
            };
            choose(0, 0);

            for (const auto& [code, raw] : found) sink(materialize(raw));
        }
    }
}

std::vector<FatGraph> enumerate_gabai_graphs(const EnumerationBounds& bounds) {
    std::vector<FatGraph> out;
    enumerate_gabai_graphs(bounds, [&](const FatGraph& g) { out.push_back(g); });
    return out;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "family: " << family << "\n";
    os << "params: " << params << "\n";
    os << "instances: " << instances << "\n";
    if (rejected > 0) os << "rejected: " << rejected << "\n";
    os << "failures: " << failures.size() << "\n";
    for (const auto& f : failures) os << "  " << f << "\n";
    os << "wall_seconds: " << wall_seconds << "\n";
    os << "result: " << (failures.empty() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

namespace {

void check_scharlemann_instance(const FatGraph& g, VerificationReport& rep) {
    ++rep.instances;
    if (!admissible(g).ok()) {
        ++rep.rejected;
        return;
    }
    try {
        Cycle c = find_scharlemann_cycle(g);
        if (!is_scharlemann(g, c))
            rep.failures.push_back(g.dump() + ": returned cycle fails the Scharlemann test");
    } catch (const CounterexampleError& e) {
        rep.failures.push_back(e.instance + ": " + e.what());
    }
}

void check_lambda_instance(const FatGraph& g, VerificationReport& rep) {
    ++rep.instances;
    if (!admissible(g).ok()) {
        ++rep.rejected;
        return;
    }
    std::vector<char> used(g.mu() + 1, 0);
    for (const auto& be : g.boundary_edges()) used[be.end.slot] = 1;
    for (int label = 1; label <= g.mu(); ++label) {
        if (used[label]) continue;
        if (find_lambda_cycles(g, label).empty())
            rep.failures.push_back(g.dump() + ": no lambda-cycle for unused label " +
                                   std::to_string(label));
    }
}

} // namespace

VerificationReport verify_scharlemann_existence(int max_vertices, int mu) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.family = "scharlemann-existence";
    rep.params = "max_vertices=" + std::to_string(max_vertices) + " mu=" + std::to_string(mu) +
                 " boundary_edges<mu";
    enumerate_gabai_graphs({max_vertices, mu, mu - 1},
                           [&](const FatGraph& g) { check_scharlemann_instance(g, rep); });
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

VerificationReport verify_scharlemann_over(const std::vector<FatGraph>& family) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.family = "scharlemann-existence";
    rep.params = "supplied family of " + std::to_string(family.size());
    for (const auto& g : family) check_scharlemann_instance(g, rep);
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

VerificationReport verify_lambda_cycle_existence(int max_vertices, int mu) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.family = "lambda-cycle-existence";
    rep.params = "max_vertices=" + std::to_string(max_vertices) + " mu=" + std::to_string(mu) +
                 " boundary_edges<mu";
    enumerate_gabai_graphs({max_vertices, mu, mu - 1},
                           [&](const FatGraph& g) { check_lambda_instance(g, rep); });
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

VerificationReport verify_lambda_over(const std::vector<FatGraph>& family) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.family = "lambda-cycle-existence";
    rep.params = "supplied family of " + std::to_string(family.size());
    for (const auto& g : family) check_lambda_instance(g, rep);
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

// ---- terminal-sphere connectivity family -----------------------------------

namespace {

SuturedData connectivity_sutured(int arcs) {
    SuturedData d;
    BoundaryPattern p;
    p.regions.push_back({0, RegionSign::Minus, 0, {0}});
    p.regions.push_back({1, RegionSign::Plus, 0, {0}});
    p.sutures.push_back({0, 0, 1});
    d.boundary_components.push_back(std::move(p));
    for (int a = 0; a < arcs; ++a) d.beta_arcs.push_back({a, 0, 1});
    d.beta_loops = 0;
    return d;
}

// Boundary circles by strand tracing: cross an edge, then pass through the
// arc at the far endpoint on the same strand. Orbits of jump(alpha(.)) come
// in orientation-reversed pairs; one orbit per pair is a circle.
struct TracedWords {
    std::vector<BoundaryWord> words;
    std::vector<std::vector<int>> word_edges; // graph edges each word runs along
    bool orientable = true;
};

TracedWords trace_words(const FatGraph& g) {
    const int mu = g.mu();
    const int n = g.vertex_count();
    const auto& marking = *g.suture();

    auto jump = [&](int dart) {
        int v = dart / mu, s = dart % mu;
        return (v ^ 1) * mu + s;
    };

    TracedWords out;
    std::vector<char> used(n * mu, 0);
    for (int d0 = 0; d0 < n * mu; ++d0) {
        if (used[d0]) continue;
        std::vector<int> orbit;
        int cur = d0;
        do {
            orbit.push_back(cur);
            cur = jump(g.alpha(cur));
        } while (cur != d0);

        // mark both this orbit and its orientation-reverse
        bool self_reverse = false;
        for (int d : orbit) used[d] = 1;
        for (int d : orbit) {
            int rd = g.alpha(d);
            if (std::find(orbit.begin(), orbit.end(), rd) != orbit.end()) self_reverse = true;
            used[rd] = 1;
        }
        if (self_reverse) {
            out.orientable = false;
            continue;
        }

        BoundaryWord word;
        std::vector<int> edges;
        for (int d : orbit) {
            int e = g.dart_edge(d);
            edges.push_back(e);
            for (int c = 0; c < marking.edge_crossings[e]; ++c)
                word.push_back({TokenKind::Suture, 0});
            int arrive = g.alpha(d);
            word.push_back({TokenKind::Arc, (arrive / mu) / 2});
        }
        out.words.push_back(std::move(word));
        out.word_edges.push_back(std::move(edges));
    }
    return out;
}

ParamSurface surface_from_words(const TracedWords& tw, int mu, int arcs) {
    ParamSurface q;
    for (const auto& w : tw.words) {
        ParamPiece piece;
        auto type = classify_zero_index_word(w);
        if (type == ZeroIndexDiscType::Cancelling ||
            type == ZeroIndexDiscType::NonSelfAmalgamating) {
            // the connectivity accounting assumes these were already removed,
            // so such circles bound the next-simplest pieces instead
            piece.surface = {1, 1, 0, std::nullopt};
        } else {
            piece.surface = {0, 1, 0, std::nullopt};
        }
        piece.words.push_back(w);
        q.pieces.push_back(std::move(piece));
    }
    for (int a = 0; a < arcs; ++a) q.mu_per_edge[a] = mu;
    return q;
}

} // namespace

void enumerate_connectivity_family(const ConnectivityFamilyConfig& cfg,
                                   const std::function<void(const ConnectivityInstance&)>& sink) {
    if (cfg.max_arcs < 1 || cfg.mu < 1)
        throw PreconditionError("connectivity family needs at least one arc and mu >= 1");

    for (int arcs = 1; arcs <= cfg.max_arcs; ++arcs) {
        const int n = 2 * arcs;
        const int mu = cfg.mu;
        SuturedData sutured = connectivity_sutured(arcs);

        RawGraph r;
        r.n = n;
        r.mu = mu;
        std::vector<int> partner(n * mu, kNoPartner);

        std::vector<FatVertex> vertices;
        std::vector<SutureSide> vertex_side(n);
        for (int v = 0; v < n; ++v) {
            // even index: arc endpoint on R-, odd: on R+; the two meridian
            // discs of one arc are viewed from opposite sides
            vertices.push_back({v, v % 2 == 0 ? VertexSign::Minus : VertexSign::Plus});
            vertex_side[v] = v % 2 == 0 ? SutureSide::Minus : SutureSide::Plus;
        }

        match_darts(r, partner, 0, [&] {
            std::vector<InteriorEdge> edges;
            for (auto [a, b] : r.matching)
                edges.push_back({{a / mu, a % mu + 1}, {b / mu, b % mu + 1}});

            // crossing counts: parity minimum plus an even surplus
            int ne = static_cast<int>(edges.size());
            std::vector<int> extra(ne, 0);
            while (true) {
                SutureMarking marking;
                marking.vertex_side = vertex_side;
                for (int k = 0; k < ne; ++k) {
                    bool same = (edges[k].a.vertex % 2) == (edges[k].b.vertex % 2);
                    marking.edge_crossings.push_back((same ? 0 : 1) + 2 * extra[k]);
                }
                FatGraph g(Ambient::Sphere, mu, false, vertices, edges, {}, marking);
                if (admissible(g).ok()) {
                    TracedWords tw = trace_words(g);
                    if (tw.orientable) {
                        ConnectivityInstance inst{std::move(g), sutured,
                                                  surface_from_words(tw, mu, arcs),
                                                  tw.word_edges, 0};
                        inst.index_value = index(inst.surface, inst.sutured);
                        sink(inst);
                    }
                }

                int k = 0;
                while (k < ne && extra[k] == cfg.max_extra_crossings) extra[k++] = 0;
                if (k == ne) break;
                ++extra[k];
            }
        });
    }
}

VerificationReport verify_connectivity_dichotomy(const ConnectivityFamilyConfig& cfg) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.family = "connectivity-dichotomy";
    rep.params = "max_arcs=" + std::to_string(cfg.max_arcs) + " mu=" + std::to_string(cfg.mu) +
                 " max_extra_crossings=" + std::to_string(cfg.max_extra_crossings) +
                 " seed=" + std::to_string(cfg.seed);
    enumerate_connectivity_family(cfg, [&](const ConnectivityInstance& inst) {
        ++rep.instances;
        const FatGraph& g = inst.graph;
        const auto& marking = *g.suture();

        auto adjacent = [&](int va, int vb) {
            for (size_t k = 0; k < g.interior_edges().size(); ++k) {
                if (marking.edge_crossings[k] != 0) continue;
                const auto& e = g.interior_edges()[k];
                if ((e.a.vertex == va && e.b.vertex == vb) ||
                    (e.a.vertex == vb && e.b.vertex == va))
                    return true;
            }
            return false;
        };

        for (int va = 0; va < g.vertex_count(); ++va) {
            for (int vb = va + 1; vb < g.vertex_count(); ++vb) {
                if (marking.vertex_side[va] != marking.vertex_side[vb]) continue;
                if (!fullness(g, va).full || !fullness(g, vb).full) continue;
                if (adjacent(va, vb)) continue;
                if (inst.index_value < 2LL * g.mu())
                    rep.failures.push_back(g.dump() + ": non-adjacent full pair (" +
                                           std::to_string(va) + "," + std::to_string(vb) +
                                           ") with index " + std::to_string(inst.index_value) +
                                           " < 2*mu");
            }
        }
    });
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

// ---- surgery theorem scenarios -----------------------------------------------

void validate(const Scenario& s) {
    if (s.delta < 1) throw PreconditionError("slope distance delta must be at least 1");
    if (s.alpha_intersections < 0)
        throw PreconditionError("alpha intersection count must be nonnegative");
    int expected = 0;
    switch (s.kind) {
        case ScenarioSurface::Sphere: expected = 2; break;
        case ScenarioSurface::Disc: expected = 1; break;
        case ScenarioSurface::Annulus: expected = 0; break;
        case ScenarioSurface::Torus: expected = 0; break;
        case ScenarioSurface::GenusG:
            if (s.chi > 2 || s.chi % 2 != 0)
                throw PreconditionError("a closed genus-g surface has even chi <= 2");
            return;
    }
    if (s.chi != expected)
        throw PreconditionError("chi " + std::to_string(s.chi) +
                                " is inconsistent with the surface kind (expected " +
                                std::to_string(expected) + ")");
}

InequalityStatus check_surgery_inequality(const Scenario& s) {
    validate(s);
    long long lhs = static_cast<long long>(s.delta - 1) * s.alpha_intersections;
    long long rhs = -static_cast<long long>(s.chi);
    return lhs <= rhs ? InequalityStatus::Holds : InequalityStatus::Violated;
}

std::string to_string(ConclusionBranch b) {
    switch (b) {
        case ConclusionBranch::NotApplicable: return "not-applicable";
        case ConclusionBranch::BoundaryIrreducible: return "boundary-irreducible";
        case ConclusionBranch::LensSummand: return "lens-summand";
        case ConclusionBranch::DeltaOne: return "delta-one";
        case ConclusionBranch::ToroidalGenusTwo: return "toroidal-genus-two";
        case ConclusionBranch::AnnularSingleTorusGenusTwo: return "annular-single-torus-genus-two";
    }
    return "not-applicable";
}

ScenarioConclusion scenario_report(const Scenario& s) {
    validate(s);
    if (s.kind == ScenarioSurface::GenusG)
        throw PreconditionError(
            "the decision table covers disc, sphere, torus and annulus scenarios");

    ScenarioConclusion out;
    auto missing = [&](const char* flag) {
        out.branch = ConclusionBranch::NotApplicable;
        out.missing_flag = flag;
        out.text = std::string("theorem not applicable: hypothesis '") + flag + "' is not asserted";
        return out;
    };

    if (!s.flags.n_irreducible) return missing("n_irreducible");
    if (!s.flags.n_boundary_irreducible) return missing("n_boundary_irreducible");
    if (!s.flags.h2_nonzero) return missing("h2_nonzero");
    if (!s.flags.m_irreducible) return missing("m_irreducible");
    if (!s.flags.exceptional_class) return missing("exceptional_class");

    switch (s.kind) {
        case ScenarioSurface::Disc:
            out.branch = ConclusionBranch::BoundaryIrreducible;
            out.text = "the surgered manifold is boundary-irreducible; an essential disc "
                       "cannot exist";
            break;
        case ScenarioSurface::Sphere:
            out.branch = ConclusionBranch::LensSummand;
            out.text = "the surgered manifold has a lens space proper summand";
            break;
        case ScenarioSurface::Torus:
            if (!s.flags.m_prime_irreducible) return missing("m_prime_irreducible");
            if (s.delta == 1) {
                out.branch = ConclusionBranch::DeltaOne;
                out.text = "delta = 1";
            } else {
                out.branch = ConclusionBranch::ToroidalGenusTwo;
                out.text = "an essential torus bounds a submanifold of Heegaard genus 2 "
                           "(delta != 1)";
            }
            break;
        case ScenarioSurface::Annulus:
            if (!s.flags.m_prime_irreducible) return missing("m_prime_irreducible");
            if (!s.flags.m_prime_atoroidal) return missing("m_prime_atoroidal");
            if (!s.flags.boundary_component_bound_ok) return missing("boundary_component_bound_ok");
            if (s.delta == 1) {
                out.branch = ConclusionBranch::DeltaOne;
                out.text = "delta = 1";
            } else {
                out.branch = ConclusionBranch::AnnularSingleTorusGenusTwo;
                out.text = "the boundary is a single torus and the surgered manifold has "
                           "Heegaard genus 2 (delta != 1)";
            }
            break;
        default: break;
    }
    return out;
}

} // namespace dehnkit
