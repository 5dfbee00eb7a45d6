#include "dehnkit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dehnkit {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& name, const std::string& what) {
    throw ParseError(name + ": " + what);
}

int line_of_byte(const std::string& text, size_t byte) {
    int line = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

json parse_envelope(const std::string& text, const std::string& name,
                    const std::string& expected_type) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(name, "line " + std::to_string(line_of_byte(text, e.byte)) + ": " + e.what());
    }
    if (!j.is_object()) fail(name, "top level must be an object");
    if (!j.contains("version") || !j["version"].is_number_integer())
        fail(name, "field 'version': missing or not an integer");
    if (j["version"].get<int>() != 1)
        fail(name, "field 'version': unknown version " + j["version"].dump());
    if (!j.contains("type") || !j["type"].is_string())
        fail(name, "field 'type': missing or not a string");
    if (j["type"].get<std::string>() != expected_type)
        fail(name, "field 'type': expected \"" + expected_type + "\", got " + j["type"].dump());
    return j;
}

const json& field(const json& j, const char* key, const std::string& name) {
    if (!j.contains(key)) fail(name, std::string("missing field '") + key + "'");
    return j[key];
}

int int_field(const json& j, const char* key, const std::string& name) {
    const json& f = field(j, key, name);
    if (!f.is_number_integer()) fail(name, std::string("field '") + key + "': expected integer");
    return f.get<int>();
}

bool bool_field(const json& j, const char* key, const std::string& name, bool dflt) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_boolean()) fail(name, std::string("field '") + key + "': expected boolean");
    return j[key].get<bool>();
}

std::string str_field(const json& j, const char* key, const std::string& name) {
    const json& f = field(j, key, name);
    if (!f.is_string()) fail(name, std::string("field '") + key + "': expected string");
    return f.get<std::string>();
}

EdgeEnd parse_end(const json& j, const std::string& name) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        fail(name, "edge end must be [vertex, slot]");
    return {j[0].get<int>(), j[1].get<int>()};
}

json end_json(const EdgeEnd& e) { return json::array({e.vertex, e.slot}); }

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- fatgraph --------------------------------------------------------------

FatGraph parse_fatgraph(const std::string& text, const std::string& name) {
    json j = parse_envelope(text, name, "fatgraph");

    std::string amb = str_field(j, "ambient", name);
    Ambient ambient;
    if (amb == "disc")
        ambient = Ambient::Disc;
    else if (amb == "sphere")
        ambient = Ambient::Sphere;
    else
        fail(name, "field 'ambient': expected \"disc\" or \"sphere\"");

    int mu = int_field(j, "mu", name);
    bool gabai = bool_field(j, "gabai", name, false);

    std::vector<FatVertex> vertices;
    for (const auto& v : field(j, "vertices", name)) {
        std::string sign = str_field(v, "sign", name);
        if (sign != "+" && sign != "-") fail(name, "field 'sign': expected \"+\" or \"-\"");
        vertices.push_back(
            {int_field(v, "id", name), sign == "+" ? VertexSign::Plus : VertexSign::Minus});
    }

    std::vector<InteriorEdge> interior;
    for (const auto& e : field(j, "interior_edges", name)) {
        if (!e.is_array() || e.size() != 2) fail(name, "interior edge must be a pair of ends");
        interior.push_back({parse_end(e[0], name), parse_end(e[1], name)});
    }

    std::vector<BoundaryEdge> boundary;
    if (j.contains("boundary_edges"))
        for (const auto& e : j["boundary_edges"])
            boundary.push_back({parse_end(field(e, "end", name), name),
                                int_field(e, "boundary_pos", name)});

    std::optional<SutureMarking> suture;
    if (j.contains("suture_circles") && !j["suture_circles"].empty()) {
        const auto& circles = j["suture_circles"];
        if (!circles.is_array()) fail(name, "field 'suture_circles': expected array");
        if (circles.size() > 1)
            fail(name, "field 'suture_circles': only a single marked suture is supported");
        const auto& sc = circles[0];
        SutureMarking m;
        m.vertex_side.resize(vertices.size());
        const auto& sides = field(sc, "vertex_sides", name);
        for (size_t i = 0; i < vertices.size(); ++i) {
            std::string key = std::to_string(vertices[i].id);
            if (!sides.contains(key))
                fail(name, "field 'vertex_sides': missing vertex " + key);
            std::string s = sides[key].get<std::string>();
            if (s != "+" && s != "-") fail(name, "field 'vertex_sides': expected \"+\" or \"-\"");
            m.vertex_side[i] = s == "+" ? SutureSide::Plus : SutureSide::Minus;
        }
        for (const auto& c : field(sc, "edge_crossings", name)) {
            if (!c.is_number_integer()) fail(name, "field 'edge_crossings': expected integers");
            m.edge_crossings.push_back(c.get<int>());
        }
        suture = std::move(m);
    }

    try {
        return FatGraph(ambient, mu, gabai, std::move(vertices), std::move(interior),
                        std::move(boundary), std::move(suture));
    } catch (const StructureError& e) {
        fail(name, e.what());
    }
}

std::string serialize(const FatGraph& g) {
    json j;
    j["version"] = 1;
    j["type"] = "fatgraph";
    j["ambient"] = g.ambient() == Ambient::Disc ? "disc" : "sphere";
    j["mu"] = g.mu();
    if (g.gabai_flag()) j["gabai"] = true;
    j["vertices"] = json::array();
    for (int i = 0; i < g.vertex_count(); ++i)
        j["vertices"].push_back({{"id", g.vertex_ids()[i]},
                                 {"sign", g.sign_of(g.vertex_ids()[i]) == VertexSign::Plus ? "+" : "-"}});
    j["interior_edges"] = json::array();
    for (const auto& e : g.interior_edges())
        j["interior_edges"].push_back(json::array({end_json(e.a), end_json(e.b)}));
    j["boundary_edges"] = json::array();
    for (const auto& e : g.boundary_edges())
        j["boundary_edges"].push_back({{"end", end_json(e.end)}, {"boundary_pos", e.boundary_pos}});
    if (g.suture()) {
        json sc;
        sc["vertex_sides"] = json::object();
        for (int i = 0; i < g.vertex_count(); ++i)
            sc["vertex_sides"][std::to_string(g.vertex_ids()[i])] =
                g.suture()->vertex_side[i] == SutureSide::Plus ? "+" : "-";
        sc["edge_crossings"] = g.suture()->edge_crossings;
        j["suture_circles"] = json::array({sc});
    }
    return j.dump(2) + "\n";
}

// ---- sutured ---------------------------------------------------------------

SuturedData parse_sutured(const std::string& text, const std::string& name) {
    json j = parse_envelope(text, name, "sutured");
    SuturedData d;
    for (const auto& bc : field(j, "boundary_components", name)) {
        BoundaryPattern p;
        for (const auto& r : field(bc, "regions", name)) {
            BoundaryRegion reg;
            reg.id = int_field(r, "id", name);
            std::string sign = str_field(r, "sign", name);
            if (sign == "-")
                reg.sign = RegionSign::Minus;
            else if (sign == "+")
                reg.sign = RegionSign::Plus;
            else if (sign == "T")
                reg.sign = RegionSign::Torus;
            else
                fail(name, "field 'sign': expected \"-\", \"+\" or \"T\"");
            reg.genus = int_field(r, "genus", name);
            if (r.contains("boundary_circle_ids"))
                for (const auto& c : r["boundary_circle_ids"]) reg.boundary_circle_ids.push_back(c.get<int>());
            p.regions.push_back(std::move(reg));
        }
        for (const auto& s : field(bc, "sutures", name))
            p.sutures.push_back({int_field(s, "id", name), int_field(s, "minus_region", name),
                                 int_field(s, "plus_region", name)});
        d.boundary_components.push_back(std::move(p));
    }
    if (j.contains("beta_arcs"))
        for (const auto& a : j["beta_arcs"])
            d.beta_arcs.push_back({int_field(a, "id", name), int_field(a, "minus_region", name),
                                   int_field(a, "plus_region", name)});
    d.beta_loops = j.contains("beta_loops") ? int_field(j, "beta_loops", name) : 0;
    d.declared_irreducible = bool_field(j, "declared_irreducible", name, true);
    d.declared_r_taut = bool_field(j, "declared_r_taut", name, true);
    return d;
}

std::string serialize(const SuturedData& d) {
    json j;
    j["version"] = 1;
    j["type"] = "sutured";
    j["boundary_components"] = json::array();
    for (const auto& bc : d.boundary_components) {
        json regions = json::array(), sutures = json::array();
        for (const auto& r : bc.regions) {
            const char* sign = r.sign == RegionSign::Minus ? "-"
                               : r.sign == RegionSign::Plus ? "+"
                                                            : "T";
            regions.push_back({{"id", r.id},
                               {"sign", sign},
                               {"genus", r.genus},
                               {"boundary_circle_ids", r.boundary_circle_ids}});
        }
        for (const auto& s : bc.sutures)
            sutures.push_back(
                {{"id", s.id}, {"minus_region", s.minus_region}, {"plus_region", s.plus_region}});
        j["boundary_components"].push_back({{"regions", regions}, {"sutures", sutures}});
    }
    j["beta_arcs"] = json::array();
    for (const auto& a : d.beta_arcs)
        j["beta_arcs"].push_back({{"id", a.id},
                                  {"minus_region", a.endpoint_minus_region},
                                  {"plus_region", a.endpoint_plus_region}});
    j["beta_loops"] = d.beta_loops;
    j["declared_irreducible"] = d.declared_irreducible;
    j["declared_r_taut"] = d.declared_r_taut;
    return j.dump(2) + "\n";
}

// ---- param surface ----------------------------------------------------------

namespace {

WordToken parse_token(const std::string& s, const std::string& name) {
    if (s.size() < 2) fail(name, "word token too short: \"" + s + "\"");
    TokenKind k;
    switch (s[0]) {
        case 'S': k = TokenKind::Suture; break;
        case 'A': k = TokenKind::Arc; break;
        case 'C': k = TokenKind::SpanCircle; break;
        default: fail(name, "word token must start with S, A or C: \"" + s + "\"");
    }
    try {
        size_t used = 0;
        int id = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1) throw std::invalid_argument("");
        return {k, id};
    } catch (const std::exception&) {
        fail(name, "word token needs an integer id: \"" + s + "\"");
    }
}

std::string token_text(const WordToken& t) {
    char c = t.kind == TokenKind::Suture ? 'S' : t.kind == TokenKind::Arc ? 'A' : 'C';
    return c + std::to_string(t.id);
}

} // namespace

ParamSurface parse_param_surface(const std::string& text, const std::string& name) {
    json j = parse_envelope(text, name, "param-surface");
    ParamSurface q;
    for (const auto& pj : field(j, "pieces", name)) {
        ParamPiece piece;
        const auto& s = field(pj, "surface", name);
        piece.surface.genus = int_field(s, "g", name);
        piece.surface.boundary_count = int_field(s, "b", name);
        piece.surface.puncture_count =
            s.contains("punctures") ? int_field(s, "punctures", name) : 0;
        if (s.contains("signs")) {
            std::vector<int> signs;
            for (const auto& v : s["signs"]) signs.push_back(v.get<int>());
            piece.surface.puncture_signs = std::move(signs);
        }
        if (s.contains("orientable") && !s["orientable"].get<bool>())
            fail(name, "field 'orientable': nonorientable surfaces are not supported");
        for (const auto& wj : field(pj, "words", name)) {
            BoundaryWord w;
            for (const auto& t : wj) w.push_back(parse_token(t.get<std::string>(), name));
            piece.words.push_back(std::move(w));
        }
        q.pieces.push_back(std::move(piece));
    }
    if (j.contains("mu_per_edge"))
        for (auto it = j["mu_per_edge"].begin(); it != j["mu_per_edge"].end(); ++it)
            q.mu_per_edge[std::stoi(it.key())] = it.value().get<int>();
    return q;
}

std::string serialize(const ParamSurface& q) {
    json j;
    j["version"] = 1;
    j["type"] = "param-surface";
    j["pieces"] = json::array();
    for (const auto& p : q.pieces) {
        json s = {{"g", p.surface.genus},
                  {"b", p.surface.boundary_count},
                  {"punctures", p.surface.puncture_count}};
        if (p.surface.puncture_signs) s["signs"] = *p.surface.puncture_signs;
        json words = json::array();
        for (const auto& w : p.words) {
            json word = json::array();
            for (const auto& t : w) word.push_back(token_text(t));
            words.push_back(word);
        }
        j["pieces"].push_back({{"surface", s}, {"words", words}});
    }
    json mu = json::object();
    for (const auto& [arc, n] : q.mu_per_edge) mu[std::to_string(arc)] = n;
    j["mu_per_edge"] = mu;
    return j.dump(2) + "\n";
}

// ---- scenario ----------------------------------------------------------------

namespace {

const std::pair<const char*, ScenarioSurface> kScenarioKinds[] = {
    {"sphere", ScenarioSurface::Sphere},   {"disc", ScenarioSurface::Disc},
    {"annulus", ScenarioSurface::Annulus}, {"torus", ScenarioSurface::Torus},
    {"genus_g", ScenarioSurface::GenusG},
};

}

Scenario parse_scenario(const std::string& text, const std::string& name) {
    json j = parse_envelope(text, name, "scenario");
    Scenario s;
    s.delta = int_field(j, "delta", name);
    std::string kind = str_field(j, "surface_kind", name);
    bool found = false;
    for (const auto& [k, v] : kScenarioKinds)
        if (kind == k) {
            s.kind = v;
            found = true;
        }
    if (!found) fail(name, "field 'surface_kind': unknown kind \"" + kind + "\"");
    s.chi = int_field(j, "chi", name);
    s.alpha_intersections = int_field(j, "alpha_intersections", name);
    const auto& f = field(j, "flags", name);
    auto flag = [&](const char* key) { return bool_field(f, key, name, false); };
    s.flags.n_irreducible = flag("n_irreducible");
    s.flags.n_boundary_irreducible = flag("n_boundary_irreducible");
    s.flags.m_irreducible = flag("m_irreducible");
    s.flags.h2_nonzero = flag("h2_nonzero");
    s.flags.exceptional_class = flag("exceptional_class");
    s.flags.m_prime_irreducible = flag("m_prime_irreducible");
    s.flags.m_prime_atoroidal = flag("m_prime_atoroidal");
    s.flags.boundary_component_bound_ok = flag("boundary_component_bound_ok");
    s.flags.assumptions_a_to_d = flag("assumptions_a_to_d");
    try {
        validate(s);
    } catch (const PreconditionError& e) {
        fail(name, e.what());
    }
    return s;
}

std::string serialize(const Scenario& s) {
    json j;
    j["version"] = 1;
    j["type"] = "scenario";
    j["delta"] = s.delta;
    for (const auto& [k, v] : kScenarioKinds)
        if (v == s.kind) j["surface_kind"] = k;
    j["chi"] = s.chi;
    j["alpha_intersections"] = s.alpha_intersections;
    j["flags"] = {{"n_irreducible", s.flags.n_irreducible},
                  {"n_boundary_irreducible", s.flags.n_boundary_irreducible},
                  {"m_irreducible", s.flags.m_irreducible},
                  {"h2_nonzero", s.flags.h2_nonzero},
                  {"exceptional_class", s.flags.exceptional_class},
                  {"m_prime_irreducible", s.flags.m_prime_irreducible},
                  {"m_prime_atoroidal", s.flags.m_prime_atoroidal},
                  {"boundary_component_bound_ok", s.flags.boundary_component_bound_ok},
                  {"assumptions_a_to_d", s.flags.assumptions_a_to_d}};
    return j.dump(2) + "\n";
}

// ---- multicurve ---------------------------------------------------------------

OrientedMulticurve parse_multicurve(const std::string& text, const std::string& name) {
    json j = parse_envelope(text, name, "multicurve");
    std::vector<MulticurveTerm> terms;
    for (const auto& t : field(j, "terms", name)) {
        Slope slope = Slope::parse(str_field(t, "slope", name));
        long long mult = int_field(t, "mult", name);
        int orient = int_field(t, "orient", name);
        terms.push_back({slope, mult, orient});
    }
    try {
        return OrientedMulticurve(std::move(terms));
    } catch (const StructureError& e) {
        fail(name, e.what());
    }
}

std::string serialize(const OrientedMulticurve& c) {
    json j;
    j["version"] = 1;
    j["type"] = "multicurve";
    j["terms"] = json::array();
    for (const auto& t : c.terms())
        j["terms"].push_back(
            {{"slope", t.slope.to_string()}, {"mult", t.multiplicity}, {"orient", t.orientation}});
    return j.dump(2) + "\n";
}

// ---- dot export -----------------------------------------------------------------

std::string to_dot(const FatGraph& g) {
    std::ostringstream os;
    os << "graph fatgraph {\n";
    for (int i = 0; i < g.vertex_count(); ++i) {
        int id = g.vertex_ids()[i];
        os << "  v" << id << " [label=\"" << id
           << (g.sign_of(id) == VertexSign::Plus ? "+" : "-") << "\"];\n";
    }
    if (!g.boundary_edges().empty()) os << "  boundary [shape=doublecircle];\n";
    for (const auto& e : g.interior_edges())
        os << "  v" << e.a.vertex << " -- v" << e.b.vertex << " [taillabel=\"" << e.a.slot
           << "\", headlabel=\"" << e.b.slot << "\"];\n";
    for (const auto& e : g.boundary_edges())
        os << "  v" << e.end.vertex << " -- boundary [taillabel=\"" << e.end.slot
           << "\", headlabel=\"" << e.boundary_pos << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace dehnkit
