// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every tolerance is exact; the combinatorial criteria are
// exhaustive at the stated bounds.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "dehnkit/cobordism.hpp"
#include "dehnkit/fatgraph.hpp"
#include "dehnkit/harness.hpp"
#include "dehnkit/io.hpp"
#include "dehnkit/slope.hpp"
#include "dehnkit/sutured.hpp"
#include "oracles.hpp"

using namespace dehnkit;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (detail.size() < 500) detail += (detail.empty() ? "" : "; ") + why;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// criterion 1: a Scharlemann cycle exists in every admissible Gabai graph
// with at most 4 vertices and mu in {2,3,4}; the search output passes the
// Scharlemann test and appears in the full brute-force cycle enumeration,
// which also independently contains a Scharlemann cycle.
Outcome scharlemann_existence() {
    Outcome out;
    long long graphs = 0;
    for (int mu = 2; mu <= 4; ++mu) {
        enumerate_gabai_graphs({4, mu, mu - 1}, [&](const FatGraph& g) {
            ++graphs;
            try {
                Cycle c = find_scharlemann_cycle(g);
                if (!is_scharlemann(g, c)) {
                    out.fail(g.dump() + ": output fails the Scharlemann test");
                    return;
                }
                auto brute = oracles::brute_all_cycles(g);
                std::set<std::string> keys;
                bool brute_has_scharlemann = false;
                for (const auto& bc : brute) {
                    if (bc.tail_label == 0) continue; // tails not uniform
                    keys.insert(oracles::cycle_key(bc));
                    if (is_scharlemann(g, bc)) brute_has_scharlemann = true;
                }
                if (!keys.count(oracles::cycle_key(c)))
                    out.fail(g.dump() + ": returned cycle missing from brute enumeration");
                if (!brute_has_scharlemann)
                    out.fail(g.dump() + ": brute enumeration finds no Scharlemann cycle");
            } catch (const Error& e) {
                out.fail(g.dump() + ": " + e.what());
            }
        });
    }
    out.detail = std::to_string(graphs) + " graphs" + (out.pass ? "" : "; " + out.detail);
    return out;
}

// criterion 2: for every graph in the same family and every label carried by
// no boundary edge, a lambda-cycle exists.
Outcome lambda_existence() {
    Outcome out;
    long long checked = 0;
    for (int mu = 2; mu <= 4; ++mu) {
        enumerate_gabai_graphs({4, mu, mu - 1}, [&](const FatGraph& g) {
            std::vector<char> used(mu + 1, 0);
            for (const auto& be : g.boundary_edges()) used[be.end.slot] = 1;
            for (int label = 1; label <= mu; ++label) {
                if (used[label]) continue;
                ++checked;
                if (find_lambda_cycles(g, label).empty())
                    out.fail(g.dump() + ": no lambda-cycle for unused label " +
                             std::to_string(label));
            }
        });
    }
    out.detail = std::to_string(checked) + " graph/label pairs" +
                 (out.pass ? "" : "; " + out.detail);
    return out;
}

// criterion 3: the index of structurally generated surgery and 2-handle
// scenarios equals the closed-form specializations, exactly.
Outcome index_identities() {
    Outcome out;
    std::mt19937 rng(2026);

    SuturedData filled;
    filled.beta_loops = 1;
    int surgery_cases = 0;
    while (surgery_cases < 150) {
        int g = static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % 6);
        if (g == 0 && k == 1) continue;
        ParamPiece piece{{g, k, 0, {}}, std::vector<BoundaryWord>(k)};
        ParamSurface q{{piece}, {}};
        long long got = index(q, filled);
        long long want = dehn_surgery_index(2 - 2 * g, k);
        if (got != want)
            out.fail("surgery g=" + std::to_string(g) + " k=" + std::to_string(k) + ": " +
                     std::to_string(got) + " != " + std::to_string(want));
        ++surgery_cases;
    }

    SuturedData handle;
    {
        BoundaryPattern p;
        p.regions.push_back({0, RegionSign::Minus, 0, {0}});
        p.regions.push_back({1, RegionSign::Plus, 0, {0}});
        p.sutures.push_back({0, 0, 1});
        handle.boundary_components.push_back(p);
        handle.beta_arcs.push_back({0, 0, 1});
    }
    int handle_cases = 0;
    while (handle_cases < 150) {
        int delta = 1 + static_cast<int>(rng() % 4);
        int npieces = 1 + static_cast<int>(rng() % 2);
        ParamSurface q;
        int boundaries = 0, qbar_chi = 0;
        for (int pi = 0; pi < npieces; ++pi) {
            int g = static_cast<int>(rng() % 3);
            int m = 1 + static_cast<int>(rng() % 3);
            if (g == 0 && m == 1 && delta < 2) m = 2;
            ParamPiece piece{{g, m, 0, {}}, {}};
            for (int w = 0; w < m; ++w)
                piece.words.push_back(BoundaryWord(delta, WordToken{TokenKind::Arc, 0}));
            q.pieces.push_back(piece);
            boundaries += m;
            qbar_chi += 2 - 2 * g;
        }
        q.mu_per_edge[0] = boundaries * delta;
        long long got = index(q, handle);
        long long want = two_handle_index(qbar_chi, boundaries, delta);
        if (got != want)
            out.fail("2-handle delta=" + std::to_string(delta) + ": " + std::to_string(got) +
                     " != " + std::to_string(want));
        ++handle_cases;
    }
    out.detail = std::to_string(surgery_cases) + " surgery + " + std::to_string(handle_cases) +
                 " handle scenarios" + (out.pass ? "" : "; " + out.detail);
    return out;
}

// criterion 4: over every valid disc boundary word of length <= 4, the index
// vanishes exactly on the four special disc types.
Outcome zero_index_classification() {
    Outcome out;
    SuturedData data;
    {
        BoundaryPattern p;
        p.regions.push_back({0, RegionSign::Minus, 0, {0, 1}});
        p.regions.push_back({1, RegionSign::Plus, 0, {0, 1}});
        p.sutures.push_back({0, 0, 1});
        p.sutures.push_back({1, 0, 1});
        data.boundary_components.push_back(p);
        data.beta_arcs.push_back({0, 0, 1});
        data.beta_arcs.push_back({1, 0, 1});
    }
    std::vector<WordToken> alphabet{{TokenKind::Suture, 0}, {TokenKind::Suture, 1},
                                    {TokenKind::Arc, 0},    {TokenKind::Arc, 1},
                                    {TokenKind::SpanCircle, 0}};
    long long valid = 0, zero = 0;
    std::function<void(BoundaryWord&)> visit = [&](BoundaryWord& w) {
        if (!w.empty() || true) {
            ParamPiece disc{{0, 1, 0, {}}, {w}};
            ParamSurface q{{disc}, {}};
            if (check_param_conditions(q, data).ok()) {
                ++valid;
                long long i = index(q, data);
                bool classified = classify_zero_index_disc(disc) != ZeroIndexDiscType::None;
                if (i < 0) out.fail("negative index on a valid word");
                if ((i == 0) != classified)
                    out.fail("word of length " + std::to_string(w.size()) +
                             ": index " + std::to_string(i) + " vs type " +
                             to_string(classify_zero_index_disc(disc)));
                if (i == 0) ++zero;
            }
        }
        if (w.size() == 4) return;
        for (const auto& t : alphabet) {
            w.push_back(t);
            visit(w);
            w.pop_back();
        }
    };
    BoundaryWord w;
    visit(w);
    if (zero == 0) out.fail("no zero-index words found");
    out.detail = std::to_string(valid) + " valid words, " + std::to_string(zero) +
                 " of index zero" + (out.pass ? "" : "; " + out.detail);
    return out;
}

// criterion 5: integral homology of the compression region agrees with the
// generic normal-form oracle for all |a_i| <= 6, q <= 12, g <= 3; the
// product, rank and lens conclusions hold.
Outcome cobordism_homology_sweep() {
    Outcome out;
    long long instances = 0;
    for (int g = 0; g <= 3 && out.pass; ++g) {
        std::vector<long long> coeffs(2 * g, -6);
        for (;;) {
            for (int q = 1; q <= 12; ++q) {
                TubeCompressionData d{g, CompressedSurfaceKind::ClosedGenus, {}, q, coeffs, 4, {}};
                auto rep = cobordism_homology(d);
                ++instances;

                std::vector<long long> relation = coeffs;
                relation.push_back(q);
                auto want = oracles::abelian_quotient(2 * g + 1, {relation});
                if (rep.h1_integral.free_rank != want.free_rank ||
                    rep.h1_integral.torsion != want.torsion) {
                    out.fail("H1 mismatch at g=" + std::to_string(g) +
                             " q=" + std::to_string(q));
                    break;
                }
                if (rep.h1_rational_rank != 2 * g) out.fail("rational rank != 2g");
                if (rep.is_product != (q == 1)) out.fail("product flag wrong");
                if (!rep.is_rational_cobordism) out.fail("rational cobordism flag wrong");
                if (g == 0) {
                    for (auto kind : {CompressedSurfaceKind::Sphere, CompressedSurfaceKind::Disc}) {
                        TubeCompressionData ds{0, kind, {}, q, {}, 4, {}};
                        auto rs = cobordism_homology(ds);
                        if (q >= 2 && (!rs.lens_summand || *rs.lens_summand != q))
                            out.fail("missing lens summand at q=" + std::to_string(q));
                        if (q == 1 && rs.lens_summand) out.fail("spurious lens summand");
                    }
                }
            }
            if (!out.pass) break;
            int i = 0;
            while (i < 2 * g && coeffs[i] == 6) coeffs[i++] = -6;
            if (i == 2 * g) break;
            ++coeffs[i];
        }
        if (g == 0) continue;
    }
    out.detail = std::to_string(instances) + " relation vectors" +
                 (out.pass ? "" : "; " + out.detail);
    return out;
}

// criterion 6: the cycle-to-cobordism bookkeeping preserves genus and drops
// the intersection count by exactly two on every cycle found in criterion
// 1's family.
Outcome cycle_to_cobordism_bookkeeping() {
    Outcome out;
    long long cycles = 0;
    for (int mu = 2; mu <= 4; ++mu) {
        enumerate_gabai_graphs({4, mu, mu - 1}, [&](const FatGraph& g) {
            Cycle c = find_scharlemann_cycle(g);
            int genus = static_cast<int>(cycles % 3);
            int alpha = 2 + static_cast<int>(cycles % 4);
            SurfaceComponent qbar{genus, 0, 0, {}};
            auto rep = scharlemann_cycle_to_cobordism(g, c, qbar, alpha);
            ++cycles;
            if (rep.r_surface.genus != genus) out.fail("genus changed");
            if (rep.r_surface.puncture_count != alpha - 2)
                out.fail("intersections did not drop by two");
            if (rep.h1_rational_rank != 2 * genus) out.fail("rational rank mismatch");
            if (static_cast<int>(c.steps.size()) == 1 && !rep.is_product)
                out.fail("length-1 cycle must give a product");
        });
    }
    out.detail = std::to_string(cycles) + " cycles" + (out.pass ? "" : "; " + out.detail);
    return out;
}

// criterion 7: the double curve sum preserves the homology class and its
// component count is the gcd of the class, matching the grid resolution
// oracle for all slope pairs with coordinates <= 5 and multiplicities <= 3.
Outcome double_curve_sum_oracle() {
    Outcome out;
    std::vector<Slope> slopes;
    for (long long p = -5; p <= 5; ++p)
        for (long long q = 0; q <= 5; ++q) {
            if (p == 0 && q == 0) continue;
            if (q == 0 && p != 1) continue; // normal form
            if (std::gcd(std::abs(p), std::abs(q)) != 1) continue;
            slopes.push_back(Slope(p, q));
        }
    long long pairs = 0;
    for (const auto& s1 : slopes) {
        for (const auto& s2 : slopes) {
            for (long long m1 = 1; m1 <= 3; ++m1)
                for (long long m2 = 1; m2 <= 3; ++m2) {
                    OrientedMulticurve a({{s1, m1, 1}});
                    OrientedMulticurve b({{s2, m2, 1}});
                    auto r = double_curve_sum_torus(a, b);
                    auto fam = oracles::grid_resolution(a, b);
                    ++pairs;

                    long long cx = 0, cy = 0;
                    for (auto [x, y] : fam.classes) {
                        cx += x;
                        cy += y;
                    }
                    auto [ax, ay] = a.homology_class();
                    auto [bx, by] = b.homology_class();
                    if (r.homology_class() != std::pair(ax + bx, ay + by) ||
                        r.homology_class() != std::pair(cx, cy)) {
                        out.fail("class not additive at " + s1.to_string() + "," + s2.to_string());
                        return out;
                    }
                    if (r.total_components() != fam.components) {
                        out.fail("component count mismatch at " + s1.to_string() + "+" +
                                 s2.to_string() + " mults " + std::to_string(m1) + "," +
                                 std::to_string(m2));
                        return out;
                    }
                    if (!(s1 == s2)) {
                        long long g = std::gcd(std::abs(ax + bx), std::abs(ay + by));
                        if (r.total_components() != g) {
                            out.fail("component count is not the class gcd");
                            return out;
                        }
                    }
                }
        }
    }
    out.detail = std::to_string(pairs) + " slope/multiplicity pairs";
    return out;
}

// criterion 8: the decision table reproduces the four conclusions on a
// hand-derived 24-row golden table, and the surgery inequality matches its
// literal evaluation on 1000 random triples.
Outcome decision_tables() {
    Outcome out;

    ScenarioFlags all;
    all.n_irreducible = all.n_boundary_irreducible = all.m_irreducible = all.h2_nonzero =
        all.exceptional_class = all.m_prime_irreducible = all.m_prime_atoroidal =
            all.boundary_component_bound_ok = true;
    auto unset = [&](void (*f)(ScenarioFlags&)) {
        ScenarioFlags flags = all;
        f(flags);
        return flags;
    };

    struct Row {
        Scenario scenario;
        ConclusionBranch branch;
        const char* missing; // nullptr when applicable
    };
    using B = ConclusionBranch;
    using K = ScenarioSurface;
    std::vector<Row> golden{
        // the four conclusions
        {{1, K::Disc, 1, 0, all}, B::BoundaryIrreducible, nullptr},
        {{3, K::Disc, 1, 0, all}, B::BoundaryIrreducible, nullptr},
        {{1, K::Sphere, 2, 0, all}, B::LensSummand, nullptr},
        {{3, K::Sphere, 2, 0, all}, B::LensSummand, nullptr},
        {{5, K::Sphere, 2, 0, all}, B::LensSummand, nullptr},
        {{1, K::Torus, 0, 2, all}, B::DeltaOne, nullptr},
        {{2, K::Torus, 0, 2, all}, B::ToroidalGenusTwo, nullptr},
        {{5, K::Torus, 0, 2, all}, B::ToroidalGenusTwo, nullptr},
        {{1, K::Annulus, 0, 1, all}, B::DeltaOne, nullptr},
        {{2, K::Annulus, 0, 1, all}, B::AnnularSingleTorusGenusTwo, nullptr},
        {{4, K::Annulus, 0, 1, all}, B::AnnularSingleTorusGenusTwo, nullptr},
        // hypothesis gates, base bullets first
        {{2, K::Sphere, 2, 0, unset([](ScenarioFlags& f) { f.n_irreducible = false; })},
         B::NotApplicable, "n_irreducible"},
        {{2, K::Sphere, 2, 0,
          unset([](ScenarioFlags& f) { f.n_boundary_irreducible = false; })},
         B::NotApplicable, "n_boundary_irreducible"},
        {{2, K::Sphere, 2, 0, unset([](ScenarioFlags& f) { f.h2_nonzero = false; })},
         B::NotApplicable, "h2_nonzero"},
        {{2, K::Sphere, 2, 0, unset([](ScenarioFlags& f) { f.m_irreducible = false; })},
         B::NotApplicable, "m_irreducible"},
        {{2, K::Sphere, 2, 0, unset([](ScenarioFlags& f) { f.exceptional_class = false; })},
         B::NotApplicable, "exceptional_class"},
        {{2, K::Disc, 1, 0, unset([](ScenarioFlags& f) { f.exceptional_class = false; })},
         B::NotApplicable, "exceptional_class"},
        {{2, K::Disc, 1, 0,
          unset([](ScenarioFlags& f) { f.n_boundary_irreducible = false; })},
         B::NotApplicable, "n_boundary_irreducible"},
        {{2, K::Torus, 0, 2, unset([](ScenarioFlags& f) { f.h2_nonzero = false; })},
         B::NotApplicable, "h2_nonzero"},
        {{1, K::Torus, 0, 2, unset([](ScenarioFlags& f) { f.m_irreducible = false; })},
         B::NotApplicable, "m_irreducible"},
        {{2, K::Torus, 0, 2,
          unset([](ScenarioFlags& f) { f.m_prime_irreducible = false; })},
         B::NotApplicable, "m_prime_irreducible"},
        {{2, K::Annulus, 0, 1,
          unset([](ScenarioFlags& f) { f.m_prime_irreducible = false; })},
         B::NotApplicable, "m_prime_irreducible"},
        {{2, K::Annulus, 0, 1,
          unset([](ScenarioFlags& f) { f.m_prime_atoroidal = false; })},
         B::NotApplicable, "m_prime_atoroidal"},
        {{2, K::Annulus, 0, 1,
          unset([](ScenarioFlags& f) { f.boundary_component_bound_ok = false; })},
         B::NotApplicable, "boundary_component_bound_ok"},
    };
    if (golden.size() != 24) out.fail("golden table must have 24 rows");

    for (size_t i = 0; i < golden.size(); ++i) {
        auto conclusion = scenario_report(golden[i].scenario);
        if (conclusion.branch != golden[i].branch)
            out.fail("row " + std::to_string(i) + ": got " + to_string(conclusion.branch));
        if (golden[i].missing &&
            (!conclusion.missing_flag || *conclusion.missing_flag != golden[i].missing))
            out.fail("row " + std::to_string(i) + ": wrong missing flag");
    }

    std::mt19937 rng(99);
    for (int i = 0; i < 1000; ++i) {
        Scenario s;
        s.kind = ScenarioSurface::GenusG;
        s.delta = 1 + static_cast<int>(rng() % 8);
        s.chi = 2 - 2 * static_cast<int>(rng() % 8);
        s.alpha_intersections = static_cast<int>(rng() % 10);
        bool literal = static_cast<long long>(s.delta - 1) * s.alpha_intersections <=
                       -static_cast<long long>(s.chi);
        if ((check_surgery_inequality(s) == InequalityStatus::Holds) != literal)
            out.fail("inequality mismatch");
    }
    out.detail = "24 golden rows + 1000 random triples" + (out.pass ? "" : "; " + out.detail);
    return out;
}

// criterion 9: over the terminal-sphere family, every instance with two
// non-adjacent full vertices on one side has index >= 2 mu, and the index
// dominates the per-component summation bound.
Outcome connectivity_dichotomy() {
    Outcome out;
    long long instances = 0, dichotomy_cases = 0;
    for (int mu = 2; mu <= 3; ++mu) {
        ConnectivityFamilyConfig cfg;
        cfg.max_arcs = 2;
        cfg.mu = mu;
        cfg.max_extra_crossings = 1;
        enumerate_connectivity_family(cfg, [&](const ConnectivityInstance& inst) {
            ++instances;
            const FatGraph& g = inst.graph;
            const auto& m = *g.suture();
            auto arc_of = [](int v) { return v / 2; };

            for (int va = 0; va < g.vertex_count(); ++va) {
                for (int vb = va + 1; vb < g.vertex_count(); ++vb) {
                    if (m.vertex_side[va] != m.vertex_side[vb]) continue;
                    if (!fullness(g, va).full || !fullness(g, vb).full) continue;
                    bool adjacent = false;
                    for (size_t k = 0; k < g.interior_edges().size(); ++k) {
                        const auto& e = g.interior_edges()[k];
                        if (m.edge_crossings[k] == 0 &&
                            ((e.a.vertex == va && e.b.vertex == vb) ||
                             (e.a.vertex == vb && e.b.vertex == va)))
                            adjacent = true;
                    }
                    if (adjacent) continue;
                    ++dichotomy_cases;

                    if (inst.index_value < 2LL * g.mu())
                        out.fail(g.dump() + ": index " + std::to_string(inst.index_value) +
                                 " < 2mu");

                    // per-component summation bound from the boundary words
                    long long bound_sum = 0;
                    for (size_t pi = 0; pi < inst.surface.pieces.size(); ++pi) {
                        const auto& piece = inst.surface.pieces[pi];
                        long long s = 0, t = 0;
                        for (const auto& tok : piece.words[0]) {
                            if (tok.kind != TokenKind::Arc) continue;
                            if (tok.id == arc_of(va)) ++s;
                            if (tok.id == arc_of(vb)) ++t;
                        }
                        if (s + t == 0) continue;
                        long long loops = 0;
                        for (int e : inst.piece_edges[pi]) {
                            const auto& ie = g.interior_edges()[e];
                            if (ie.a.vertex != ie.b.vertex) continue;
                            if (m.edge_crossings[e] != 0) continue;
                            if (ie.a.vertex == va || ie.a.vertex == vb) ++loops;
                        }
                        bool is_disc =
                            piece.surface.genus == 0 && piece.surface.boundary_count == 1;
                        long long bound = is_disc ? -2 + 2 * (s + t) - 2 * loops
                                                  : 2 * (s + t) - 2 * loops;
                        if (piece_index(piece) < bound)
                            out.fail("piece index below the per-component bound");
                        bound_sum += std::max(0LL, bound);
                    }
                    if (inst.index_value < bound_sum)
                        out.fail("index below the summed component bound");
                }
            }
        });
    }
    if (dichotomy_cases == 0) out.fail("family contains no dichotomy cases");
    out.detail = std::to_string(instances) + " instances, " + std::to_string(dichotomy_cases) +
                 " dichotomy cases" + (out.pass ? "" : "; " + out.detail);
    return out;
}

// criterion 10: single-field mutations breaking the distinct-labels rule,
// the suture adjacency axiom or the Gabai bound are all detected.
Outcome mutation_detection() {
    Outcome out;
    long long obs1 = 0, adjacency = 0, gabai = 0;

    for (int mu = 2; mu <= 3; ++mu) {
        for (const auto& g : enumerate_gabai_graphs({3, mu, mu - 1})) {
            // partner swaps creating an equal-label edge
            auto edges = g.interior_edges();
            for (size_t i = 0; i < edges.size(); ++i) {
                for (size_t j = i + 1; j < edges.size(); ++j) {
                    auto mutated = edges;
                    std::swap(mutated[i].b, mutated[j].b);
                    if (mutated[i].a.slot != mutated[i].b.slot &&
                        mutated[j].a.slot != mutated[j].b.slot)
                        continue;
                    std::vector<FatVertex> vs;
                    for (int v = 0; v < g.vertex_count(); ++v)
                        vs.push_back({g.vertex_ids()[v], VertexSign::Plus});
                    FatGraph bad(g.ambient(), g.mu(), g.gabai_flag(), vs, mutated,
                                 g.boundary_edges());
                    bool flagged = false;
                    for (const auto& v : admissible(bad).violations)
                        flagged = flagged || v.axiom == "Observation 1";
                    if (!flagged) out.fail("label mutation not detected");
                    ++obs1;
                }
            }

            // converting an interior edge into two boundary edges past the bound
            if (static_cast<int>(g.boundary_edges().size()) + 2 > mu - 1 &&
                !g.interior_edges().empty()) {
                auto mutated = g.interior_edges();
                InteriorEdge removed = mutated.back();
                mutated.pop_back();
                auto boundary = g.boundary_edges();
                int pos = boundary.empty() ? 0 : boundary.back().boundary_pos + 1;
                boundary.push_back({removed.a, pos});
                boundary.push_back({removed.b, pos + 1});
                if (static_cast<int>(boundary.size()) >= mu) {
                    std::vector<FatVertex> vs;
                    for (int v = 0; v < g.vertex_count(); ++v)
                        vs.push_back({g.vertex_ids()[v], VertexSign::Plus});
                    FatGraph bad(g.ambient(), g.mu(), true, vs, mutated, boundary);
                    bool flagged = false;
                    for (const auto& v : admissible(bad).violations)
                        flagged = flagged || v.axiom == "Gabai bound";
                    if (!flagged) out.fail("Gabai bound mutation not detected");
                    ++gabai;
                }
            }
        }
    }

    // suture adjacency mutations over structured sutured data
    for (int regions = 1; regions <= 3; ++regions) {
        for (int target = 0; target < regions; ++target) {
            for (int way = 0; way < 2; ++way) {
                SuturedData d;
                BoundaryPattern p;
                for (int r = 0; r < regions; ++r) {
                    p.regions.push_back({2 * r, RegionSign::Minus, 0, {r}});
                    p.regions.push_back({2 * r + 1, RegionSign::Plus, 0, {r}});
                    p.sutures.push_back({r, 2 * r, 2 * r + 1});
                }
                // chain the regions so every suture bounds two region sides
                for (int r = 0; r + 1 < regions; ++r) {
                    p.regions[2 * r + 1].boundary_circle_ids.push_back(r + 1);
                    p.sutures[r + 1].plus_region = 2 * r + 1;
                    p.regions[2 * r + 3].boundary_circle_ids.pop_back();
                }
                d.boundary_components.push_back(p);
                if (!check_sutured_axioms(d).ok()) continue; // only mutate valid data

                auto& s = d.boundary_components[0].sutures[target];
                if (way == 0)
                    s.plus_region = s.minus_region;
                else
                    s.minus_region = s.plus_region;
                bool flagged = false;
                for (const auto& v : check_sutured_axioms(d).violations)
                    flagged = flagged || v.axiom == "suture adjacency";
                if (!flagged) out.fail("suture adjacency mutation not detected");
                ++adjacency;
            }
        }
    }

    if (obs1 == 0 || adjacency == 0 || gabai == 0) out.fail("a mutation family is empty");
    out.detail = std::to_string(obs1) + " label + " + std::to_string(adjacency) +
                 " adjacency + " + std::to_string(gabai) + " bound mutations" +
                 (out.pass ? "" : "; " + out.detail);
    return out;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {"Scharlemann cycle existence, exhaustive (<=4 vertices, mu 2..4)",
         scharlemann_existence},
        {"lambda-cycle existence for unused labels, exhaustive", lambda_existence},
        {"index specialization identities (surgery and 2-handle)", index_identities},
        {"index zero exactly on the four disc types (words <= 4)", zero_index_classification},
        {"compression-region homology vs normal-form oracle (|a|<=6, q<=12, g<=3)",
         cobordism_homology_sweep},
        {"cycle-to-cobordism bookkeeping (genus kept, intersections -2)",
         cycle_to_cobordism_bookkeeping},
        {"double curve sum vs grid resolution oracle (coords <=5, mults <=3)",
         double_curve_sum_oracle},
        {"surgery decision tables (24 golden rows + 1000 random triples)", decision_tables},
        {"connectivity dichotomy over the terminal-sphere family", connectivity_dichotomy},
        {"mutation detection (labels, suture adjacency, Gabai bound)", mutation_detection},
    };

    bool all_pass = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        all_pass = all_pass && out.pass;
        std::ostringstream line;
        line << "CRITERION " << (i + 1) << ": " << (out.pass ? "PASS" : "FAIL") << " - "
             << criteria[i].name << " [" << out.detail << "] ("
             << seconds_since(t0) << "s)";
        std::cout << line.str() << std::endl;
    }
    return all_pass ? 0 : 1;
}
