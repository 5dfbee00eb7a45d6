#include <doctest.h>

#include <random>

#include "dehnkit/sutured.hpp"

using namespace dehnkit;

namespace {

// one sphere boundary component: R- disc and R+ disc split by one suture
SuturedData one_suture_ball(int arcs) {
    SuturedData d;
    BoundaryPattern p;
    p.regions.push_back({0, RegionSign::Minus, 0, {0}});
    p.regions.push_back({1, RegionSign::Plus, 0, {0}});
    p.sutures.push_back({0, 0, 1});
    d.boundary_components.push_back(p);
    for (int a = 0; a < arcs; ++a) d.beta_arcs.push_back({a, 0, 1});
    return d;
}

SuturedData closed_with_loop() {
    SuturedData d;
    d.beta_loops = 1;
    return d;
}

WordToken S(int id) { return {TokenKind::Suture, id}; }
WordToken A(int id) { return {TokenKind::Arc, id}; }
WordToken C(int id) { return {TokenKind::SpanCircle, id}; }

} // namespace

TEST_CASE("sutured axioms") {
    // a closed manifold with an empty suture set and one core loop is valid
    CHECK(check_sutured_axioms(closed_with_loop()).ok());
    CHECK(check_sutured_axioms(one_suture_ball(2)).ok());

    // suture with both neighbors of one sign
    SuturedData bad = one_suture_ball(0);
    bad.boundary_components[0].sutures[0].plus_region = 0;
    auto rep = check_sutured_axioms(bad);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "suture adjacency");

    // T-region of genus 2
    SuturedData torus_bad = closed_with_loop();
    BoundaryPattern p;
    p.regions.push_back({5, RegionSign::Torus, 2, {}});
    torus_bad.boundary_components.push_back(p);
    rep = check_sutured_axioms(torus_bad);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "T(gamma) torus");

    // region boundary circles must be sutures of the same component
    SuturedData dangling = one_suture_ball(0);
    dangling.boundary_components[0].regions[0].boundary_circle_ids = {42};
    CHECK_THROWS_AS(check_sutured_axioms(dangling), StructureError);

    // a suture never listed as a region boundary circle breaks the bijection
    SuturedData unbalanced = one_suture_ball(0);
    unbalanced.boundary_components[0].regions[0].boundary_circle_ids.clear();
    rep = check_sutured_axioms(unbalanced);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "circle bijection");
}

TEST_CASE("beta tautness conditions") {
    CHECK(check_beta_taut_conditions(one_suture_ball(1)).ok());

    // arc with both endpoints in R+
    SuturedData bad = one_suture_ball(1);
    bad.beta_arcs[0].endpoint_minus_region = 1;
    auto rep = check_beta_taut_conditions(bad);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "arc endpoints");

    // arc endpoint on a torus region
    SuturedData on_torus = one_suture_ball(1);
    BoundaryPattern p;
    p.regions.push_back({7, RegionSign::Torus, 1, {}});
    on_torus.boundary_components.push_back(p);
    on_torus.beta_arcs[0].endpoint_plus_region = 7;
    rep = check_beta_taut_conditions(on_torus);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "beta placement");

    // declared flags are echoed, false flags are violations
    SuturedData declared = one_suture_ball(0);
    declared.declared_irreducible = false;
    rep = check_beta_taut_conditions(declared);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "irreducibility");
    declared.declared_irreducible = true;
    declared.declared_r_taut = false;
    rep = check_beta_taut_conditions(declared);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "R(gamma) tautness");
}

TEST_CASE("parameterizing surface conditions") {
    SuturedData data = one_suture_ball(2);

    // sphere piece
    ParamSurface sphere{{ParamPiece{{0, 0, 0, {}}, {}}}, {}};
    auto rep = check_param_conditions(sphere, data);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "P3");

    // disc crossing the suture twice passes
    ParamSurface product_disc{{ParamPiece{{0, 1, 0, {}}, {{S(0), S(0)}}}}, {}};
    CHECK(check_param_conditions(product_disc, data).ok());

    // annulus with circle words passes P2
    ParamSurface circle_annulus{{ParamPiece{{0, 2, 0, {}}, {{C(0)}, {C(0)}}}}, {}};
    CHECK(check_param_conditions(circle_annulus, data).ok());

    // a circle cannot share its word with other tokens
    ParamSurface bad_circle{{ParamPiece{{0, 1, 0, {}}, {{C(0), S(0)}}}}, {}};
    rep = check_param_conditions(bad_circle, data);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "P2");

    // empty-word disc and single-token disc are P3 violations
    ParamSurface empty_disc{{ParamPiece{{0, 1, 0, {}}, {{}}}}, {}};
    rep = check_param_conditions(empty_disc, data);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "P3");
    ParamSurface one_token{{ParamPiece{{0, 1, 0, {}}, {{S(0)}}}}, {}};
    rep = check_param_conditions(one_token, data);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "P3");

    // word count must match the boundary count
    ParamSurface miscounted{{ParamPiece{{0, 2, 0, {}}, {{S(0), S(0)}}}}, {}};
    rep = check_param_conditions(miscounted, data);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "P1");

    // dangling ids are structure errors
    ParamSurface dangling{{ParamPiece{{0, 1, 0, {}}, {{S(9), S(9)}}}}, {}};
    CHECK_THROWS_AS(check_param_conditions(dangling, data), StructureError);

    // mu_per_edge must match the words
    ParamSurface with_mu{{ParamPiece{{0, 1, 0, {}}, {{A(0), A(1)}}}}, {{0, 2}}};
    rep = check_param_conditions(with_mu, data);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "P1");
}

TEST_CASE("index evaluation") {
    SuturedData data = one_suture_ball(2);

    // product disc: -2*1 + 2 + 0
    ParamSurface product_disc{{ParamPiece{{0, 1, 0, {}}, {{S(0), S(0)}}}}, {}};
    CHECK(index(product_disc, data) == 0);

    // cancelling disc
    ParamSurface cancelling{{ParamPiece{{0, 1, 0, {}}, {{A(0), S(0)}}}}, {{0, 1}}};
    CHECK(index(cancelling, data) == 0);

    // genus-0 piece with 3 boundary words, 4 suture crossings, 2 arcs
    ParamSurface pants{
        {ParamPiece{{0, 3, 0, {}}, {{S(0), S(0)}, {S(0), S(0), A(0)}, {A(1)}}}}, {}};
    CHECK(index(pants, data) == 8);

    // additivity over pieces
    ParamSurface both{{product_disc.pieces[0], pants.pieces[0]}, {}};
    CHECK(index(both, data) == 8);

    // invalid surfaces are rejected
    ParamSurface bad{{ParamPiece{{0, 0, 0, {}}, {}}}, {}};
    CHECK_THROWS_AS(index(bad, data), PreconditionError);
}

TEST_CASE("specialization identities on structured scenarios") {
    std::mt19937 rng(11);

    // surgery on a closed surface meeting the core k times
    SuturedData filled = closed_with_loop();
    for (int trial = 0; trial < 120; ++trial) {
        int g = static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % 6);
        if (g == 0 && k == 1) continue; // a disc cannot anchor to nothing
        ParamPiece piece;
        piece.surface = {g, k, 0, {}};
        piece.words.assign(k, BoundaryWord{});
        ParamSurface q{{piece}, {}};
        int qbar_chi = 2 - 2 * g;
        CHECK(index(q, filled) == dehn_surgery_index(qbar_chi, k));
    }

    // 2-handle attachment: every boundary word crosses the cocore annulus
    // delta times
    for (int trial = 0; trial < 120; ++trial) {
        int delta = 1 + static_cast<int>(rng() % 4);
        int pieces = 1 + static_cast<int>(rng() % 2);
        SuturedData data = one_suture_ball(1);
        ParamSurface q;
        int total_boundaries = 0, qbar_chi = 0;
        for (int pi = 0; pi < pieces; ++pi) {
            int g = static_cast<int>(rng() % 3);
            int m = 1 + static_cast<int>(rng() % 3);
            if (g == 0 && m == 1 && delta < 2) m = 2;
            ParamPiece piece;
            piece.surface = {g, m, 0, {}};
            for (int w = 0; w < m; ++w) piece.words.push_back(BoundaryWord(delta, A(0)));
            q.pieces.push_back(piece);
            total_boundaries += m;
            qbar_chi += 2 - 2 * g;
        }
        q.mu_per_edge[0] = total_boundaries * delta;
        CHECK(index(q, data) == two_handle_index(qbar_chi, total_boundaries, delta));
    }
}

TEST_CASE("zero-index disc classification") {
    CHECK(classify_zero_index_word({A(1), S(1)}) == ZeroIndexDiscType::Cancelling);
    CHECK(classify_zero_index_word({S(1), A(1)}) == ZeroIndexDiscType::Cancelling);
    CHECK(classify_zero_index_word({A(1), A(2)}) == ZeroIndexDiscType::NonSelfAmalgamating);
    CHECK(classify_zero_index_word({S(1), S(1)}) == ZeroIndexDiscType::Product);
    CHECK(classify_zero_index_word({S(1), S(2)}) == ZeroIndexDiscType::Product);
    CHECK(classify_zero_index_word({A(1), A(1)}) == ZeroIndexDiscType::SelfAmalgamating);
    CHECK(classify_zero_index_word({S(1), S(1), S(2), S(2)}) == ZeroIndexDiscType::None);
    CHECK(classify_zero_index_word({A(1), S(1), S(2)}) == ZeroIndexDiscType::None);

    ParamPiece annulus{{0, 2, 0, {}}, {{S(1), S(1)}, {}}};
    CHECK_THROWS_AS(classify_zero_index_disc(annulus), PreconditionError);
}

TEST_CASE("index zero exactly on the four disc types") {
    SuturedData data = one_suture_ball(2);
    std::vector<WordToken> alphabet{S(0), A(0), A(1), C(0)};

    std::vector<BoundaryWord> words{{}};
    for (int len = 1; len <= 4; ++len) {
        std::vector<BoundaryWord> next;
        for (const auto& w : words)
            if (static_cast<int>(w.size()) == len - 1)
                for (const auto& t : alphabet) {
                    BoundaryWord w2 = w;
                    w2.push_back(t);
                    next.push_back(w2);
                }
        words.insert(words.end(), next.begin(), next.end());
    }

    int zero_count = 0;
    for (const auto& w : words) {
        ParamPiece disc{{0, 1, 0, {}}, {w}};
        ParamSurface q{{disc}, {}};
        if (!check_param_conditions(q, data).ok()) continue;
        bool classified = classify_zero_index_disc(disc) != ZeroIndexDiscType::None;
        long long i = index(q, data);
        CHECK(i >= 0);
        CHECK((i == 0) == classified);
        if (i == 0) ++zero_count;
    }
    CHECK(zero_count > 0);
}
