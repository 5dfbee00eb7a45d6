#include "dehnkit/sutured.hpp"

#include <algorithm>
#include <set>

namespace dehnkit {

std::string ValidationReport::to_text() const {
    std::string out;
    for (const auto& v : violations) out += v.axiom + ": " + v.message + "\n";
    for (const auto& n : notes) out += "note: " + n + "\n";
    if (violations.empty()) out += "ok\n";
    return out;
}

namespace {

struct ResolvedSutured {
    // region id -> sign, component index
    std::map<int, std::pair<RegionSign, int>> regions;
    std::map<int, int> suture_component; // suture id -> component index
};

ResolvedSutured resolve(const SuturedData& data) {
    ResolvedSutured r;
    for (size_t ci = 0; ci < data.boundary_components.size(); ++ci) {
        const auto& bc = data.boundary_components[ci];
        for (const auto& reg : bc.regions) {
            if (r.regions.count(reg.id))
                throw StructureError("duplicate region id " + std::to_string(reg.id));
            r.regions[reg.id] = {reg.sign, static_cast<int>(ci)};
        }
        for (const auto& s : bc.sutures) {
            if (r.suture_component.count(s.id))
                throw StructureError("duplicate suture id " + std::to_string(s.id));
            r.suture_component[s.id] = static_cast<int>(ci);
        }
    }
    return r;
}

std::string sign_name(RegionSign s) {
    switch (s) {
        case RegionSign::Minus: return "-";
        case RegionSign::Plus: return "+";
        case RegionSign::Torus: return "T";
    }
    return "?";
}

} // namespace

ValidationReport check_sutured_axioms(const SuturedData& data) {
    ValidationReport rep;
    auto res = resolve(data);
    if (data.beta_loops < 0) throw StructureError("beta_loops must be nonnegative");

    for (size_t ci = 0; ci < data.boundary_components.size(); ++ci) {
        const auto& bc = data.boundary_components[ci];

        for (const auto& s : bc.sutures) {
            auto check_side = [&](int rid, RegionSign want) {
                auto it = res.regions.find(rid);
                if (it == res.regions.end())
                    throw StructureError("suture " + std::to_string(s.id) +
                                         " references unknown region " + std::to_string(rid));
                if (it->second.second != static_cast<int>(ci))
                    rep.violations.push_back({"suture adjacency",
                                              "suture " + std::to_string(s.id) +
                                                  " is adjacent to region " + std::to_string(rid) +
                                                  " in another boundary component"});
                else if (it->second.first != want)
                    rep.violations.push_back(
                        {"suture adjacency", "suture " + std::to_string(s.id) + " lists region " +
                                                 std::to_string(rid) + " as its " +
                                                 sign_name(want) + " side, but that region has sign " +
                                                 sign_name(it->second.first)});
            };
            check_side(s.minus_region, RegionSign::Minus);
            check_side(s.plus_region, RegionSign::Plus);
        }

        for (const auto& reg : bc.regions) {
            if (reg.sign == RegionSign::Torus) {
                if (reg.genus != 1 || !reg.boundary_circle_ids.empty())
                    rep.violations.push_back(
                        {"T(gamma) torus", "region " + std::to_string(reg.id) +
                                               " is marked T but is not a closed torus"});
            }
            for (int cid : reg.boundary_circle_ids) {
                auto it = res.suture_component.find(cid);
                if (it == res.suture_component.end() || it->second != static_cast<int>(ci))
                    throw StructureError("region " + std::to_string(reg.id) +
                                         " lists unknown boundary circle " + std::to_string(cid));
            }
        }

        // Each suture must appear as a boundary circle of exactly its two
        // adjacent regions.
        std::map<int, int> circle_uses;
        for (const auto& reg : bc.regions)
            for (int cid : reg.boundary_circle_ids) circle_uses[cid]++;
        for (const auto& s : bc.sutures) {
            int uses = circle_uses.count(s.id) ? circle_uses[s.id] : 0;
            if (uses != 2)
                rep.violations.push_back(
                    {"circle bijection", "suture " + std::to_string(s.id) + " bounds " +
                                             std::to_string(uses) + " region sides, expected 2"});
            circle_uses.erase(s.id);
        }
        for (const auto& [cid, uses] : circle_uses)
            rep.violations.push_back({"circle bijection",
                                      "boundary circle " + std::to_string(cid) +
                                          " does not correspond to any suture"});
    }
    return rep;
}

ValidationReport check_beta_taut_conditions(const SuturedData& data) {
    ValidationReport rep;
    auto res = resolve(data);

    for (const auto& arc : data.beta_arcs) {
        auto check_end = [&](int rid, RegionSign want, const char* role) {
            auto it = res.regions.find(rid);
            if (it == res.regions.end())
                throw StructureError("arc " + std::to_string(arc.id) +
                                     " references unknown region " + std::to_string(rid));
            RegionSign got = it->second.first;
            if (got == RegionSign::Torus)
                rep.violations.push_back(
                    {"beta placement", "arc " + std::to_string(arc.id) + " has its " + role +
                                           " endpoint on torus region " + std::to_string(rid)});
            else if (got != want)
                rep.violations.push_back(
                    {"arc endpoints", "arc " + std::to_string(arc.id) + " has its " + role +
                                          " endpoint in a region of sign " + sign_name(got)});
        };
        check_end(arc.endpoint_minus_region, RegionSign::Minus, "negative");
        check_end(arc.endpoint_plus_region, RegionSign::Plus, "positive");
    }

    if (data.declared_irreducible)
        rep.notes.push_back("irreducibility of the beta-exterior: declared true (not computed)");
    else
        rep.violations.push_back(
            {"irreducibility", "declared false: the beta-exterior is declared reducible"});

    if (data.declared_r_taut)
        rep.notes.push_back("tautness of R(gamma) and T(gamma): declared true (not computed)");
    else
        rep.violations.push_back(
            {"R(gamma) tautness", "declared false: the boundary surfaces are declared non-taut"});

    return rep;
}

namespace {

int count_tokens(const ParamPiece& p, TokenKind k) {
    int n = 0;
    for (const auto& w : p.words)
        for (const auto& t : w)
            if (t.kind == k) ++n;
    return n;
}

} // namespace

ValidationReport check_param_conditions(const ParamSurface& q, const SuturedData& data) {
    ValidationReport rep;
    auto res = resolve(data);
    std::set<int> arc_ids;
    for (const auto& a : data.beta_arcs) {
        if (!arc_ids.insert(a.id).second)
            throw StructureError("duplicate beta-arc id " + std::to_string(a.id));
    }

    std::map<int, int> arc_traversals;
    for (size_t pi = 0; pi < q.pieces.size(); ++pi) {
        const auto& piece = q.pieces[pi];
        validate(piece.surface);
        std::string tag = "piece " + std::to_string(pi);

        if (static_cast<int>(piece.words.size()) != piece.surface.boundary_count)
            rep.violations.push_back(
                {"P1", tag + ": " + std::to_string(piece.words.size()) +
                           " boundary words for a surface with boundary_count " +
                           std::to_string(piece.surface.boundary_count)});

        for (const auto& word : piece.words) {
            for (const auto& tok : word) {
                if (tok.kind == TokenKind::Suture) {
                    if (!res.suture_component.count(tok.id))
                        throw StructureError(tag + ": word references unknown suture " +
                                             std::to_string(tok.id));
                } else {
                    if (!arc_ids.count(tok.id))
                        throw StructureError(tag + ": word references unknown beta-arc " +
                                             std::to_string(tok.id));
                    if (tok.kind == TokenKind::Arc) arc_traversals[tok.id]++;
                }
            }
            bool has_circle =
                std::any_of(word.begin(), word.end(),
                            [](const WordToken& t) { return t.kind == TokenKind::SpanCircle; });
            if (has_circle && word.size() != 1)
                rep.violations.push_back(
                    {"P2", tag + ": a circle component of the boundary inside an arc annulus "
                               "cannot share its word with other crossings"});
        }

        bool closed = piece.surface.boundary_count == 0;
        if (closed && piece.surface.genus == 0)
            rep.violations.push_back({"P3", tag + ": sphere component"});
        if (piece.surface.genus == 0 && piece.surface.boundary_count == 1) {
            int anchored = count_tokens(piece, TokenKind::Suture) + count_tokens(piece, TokenKind::Arc);
            if (anchored < 2)
                rep.violations.push_back(
                    {"P3", tag + ": disc component meets gamma and the arc annuli " +
                               std::to_string(anchored) + " time(s); discs must meet them at least twice"});
        }
    }

    for (const auto& [arc, mu] : q.mu_per_edge) {
        if (!arc_ids.count(arc))
            throw StructureError("mu_per_edge references unknown beta-arc " + std::to_string(arc));
        if (mu < 0) throw StructureError("mu_per_edge values must be nonnegative");
        int actual = arc_traversals.count(arc) ? arc_traversals.at(arc) : 0;
        if (mu != actual)
            rep.violations.push_back(
                {"P1", "mu_per_edge declares " + std::to_string(mu) + " spanning arcs over arc " +
                           std::to_string(arc) + " but the words traverse it " +
                           std::to_string(actual) + " time(s)"});
    }
    return rep;
}

long long piece_index(const ParamPiece& piece) {
    long long chi = euler(piece.surface);
    long long sutures = count_tokens(piece, TokenKind::Suture);
    long long arcs = count_tokens(piece, TokenKind::Arc);
    return -2 * chi + sutures + arcs;
}

long long index(const ParamSurface& q, const SuturedData& data) {
    auto rep = check_param_conditions(q, data);
    if (!rep.ok())
        throw PreconditionError("index requires a valid parameterizing surface:\n" + rep.to_text());
    long long total = 0;
    for (const auto& p : q.pieces) total += piece_index(p);
    return total;
}

long long dehn_surgery_index(int qbar_chi, int alpha_intersections) {
    return -2LL * qbar_chi + 2LL * alpha_intersections;
}

long long two_handle_index(int qbar_chi, int boundary_components, int handle_delta) {
    return -2LL * qbar_chi + 2LL * boundary_components +
           static_cast<long long>(boundary_components) * handle_delta;
}

std::string to_string(ZeroIndexDiscType t) {
    switch (t) {
        case ZeroIndexDiscType::Cancelling: return "cancelling";
        case ZeroIndexDiscType::NonSelfAmalgamating: return "non_self_amalgamating";
        case ZeroIndexDiscType::Product: return "product";
        case ZeroIndexDiscType::SelfAmalgamating: return "self_amalgamating";
        case ZeroIndexDiscType::None: return "none";
    }
    return "none";
}

ZeroIndexDiscType classify_zero_index_word(const BoundaryWord& word) {
    if (word.size() != 2) return ZeroIndexDiscType::None;
    const WordToken& a = word[0];
    const WordToken& b = word[1];
    if (a.kind == TokenKind::SpanCircle || b.kind == TokenKind::SpanCircle)
        return ZeroIndexDiscType::None;
    if (a.kind == TokenKind::Suture && b.kind == TokenKind::Suture)
        return ZeroIndexDiscType::Product;
    if (a.kind == TokenKind::Arc && b.kind == TokenKind::Arc)
        return a.id == b.id ? ZeroIndexDiscType::SelfAmalgamating
                            : ZeroIndexDiscType::NonSelfAmalgamating;
    return ZeroIndexDiscType::Cancelling; // one arc, one suture, either cyclic order
}

ZeroIndexDiscType classify_zero_index_disc(const ParamPiece& disc) {
    if (disc.surface.genus != 0 || disc.surface.boundary_count != 1)
        throw PreconditionError("zero-index classification applies to disc pieces only");
    if (disc.words.size() != 1)
        throw PreconditionError("disc piece must carry exactly one boundary word");
    return classify_zero_index_word(disc.words[0]);
}

} // namespace dehnkit
