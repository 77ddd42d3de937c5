#include "pbu/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "pbu/bu_family.hpp"
#include "pbu/corr_lab.hpp"
#include "pbu/homology.hpp"
#include "pbu/spherical.hpp"
#include "pbu/sym_square.hpp"

namespace pbu::cli {

using json = nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Schema helpers

void allow_keys(const json& j, const std::string& at, std::initializer_list<const char*> keys)
{
    if (!j.is_object())
        throw InputError(at.empty() ? "/" : at, "expected an object");
    for (const auto& [k, v] : j.items())
        if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
            throw InputError(at + "/" + k, "unknown key '" + k + "'");
}

const json& field(const json& j, const std::string& at, const char* key)
{
    if (!j.contains(key))
        throw InputError(at + "/" + key, std::string("missing required key '") + key + "'");
    return j.at(key);
}

int as_int(const json& j, const std::string& at)
{
    if (!j.is_number_integer())
        throw InputError(at, "expected an integer");
    return j.get<int>();
}

double as_double(const json& j, const std::string& at)
{
    if (!j.is_number())
        throw InputError(at, "expected a number");
    return j.get<double>();
}

std::string as_string(const json& j, const std::string& at)
{
    if (!j.is_string())
        throw InputError(at, "expected a string");
    return j.get<std::string>();
}

int int_or(const json& j, const std::string& at, const char* key, int dflt)
{
    return j.contains(key) ? as_int(j.at(key), at + "/" + key) : dflt;
}

std::vector<int> int_list(const json& j, const std::string& at)
{
    if (!j.is_array())
        throw InputError(at, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_int(j[i], at + "/" + std::to_string(i)));
    return out;
}

json simplex_json(const SimplicialPair& p, int d, std::size_t i) { return p.simplex(d, i); }

json chain_json(const SimplicialPair& p, int d, const Chain& c)
{
    json out = json::array();
    for (auto i : c)
        out.push_back(simplex_json(p, d, i));
    return out;
}

// ---------------------------------------------------------------------------
// Pairs

SimplicialPair model_pair(const std::string& name, int n, const std::string& at)
{
    if (name == "point")
        return models::point();
    if (name == "two_points")
        return models::two_points();
    if (name == "circle")
        return models::circle(n > 0 ? n : 3);
    if (name == "interval")
        return models::interval(n > 0 ? n : 2);
    if (name == "interval_rel_boundary")
        return models::interval_rel_boundary(n > 0 ? n : 2);
    if (name == "sphere" || name == "octahedron")
        return models::octahedron();
    if (name == "torus")
        return models::torus7();
    if (name == "projective_plane")
        return models::rp2_6();
    if (name == "mobius")
        return models::mobius5();
    if (name == "mobius_rel_boundary")
        return models::mobius5_rel_boundary();
    throw InputError(at, "unknown model '" + name + "'");
}

SimplicialPair random_pair(const json& j, const std::string& at, unsigned seed)
{
    allow_keys(j, at, {"vertices", "facets", "dim", "sub_facets"});
    const int nv = int_or(j, at, "vertices", 8);
    const int nf = int_or(j, at, "facets", 10);
    const int dim = int_or(j, at, "dim", 2);
    const int ns = int_or(j, at, "sub_facets", 2);
    if (nv < dim + 1 || dim < 0 || nf < 1 || ns < 0)
        throw InputError(at, "random pair parameters out of range");
    std::mt19937 rng(seed);
    auto draw = [&](int k) {
        std::vector<int> v(nv);
        for (int i = 0; i < nv; ++i)
            v[i] = i;
        for (int i = 0; i < k; ++i)
            std::swap(v[i], v[i + rng() % (nv - i)]);
        Simplex s(v.begin(), v.begin() + k);
        std::sort(s.begin(), s.end());
        return s;
    };
    std::set<Simplex> facets;
    for (int i = 0; i < nf; ++i)
        facets.insert(draw(1 + static_cast<int>(rng() % (dim + 1))));
    std::vector<Simplex> list(facets.begin(), facets.end());
    std::vector<Simplex> sub;
    for (int i = 0; i < ns && !list.empty(); ++i) {
        const Simplex& f = list[rng() % list.size()];
        sub.push_back(Simplex(f.begin(), f.begin() + 1 + rng() % f.size()));
    }
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    return SimplicialPair::build(nv, list, sub);
}

SimplicialPair parse_pair(const json& j, const std::string& at, unsigned seed)
{
    if (j.contains("model")) {
        allow_keys(j, at, {"model", "n"});
        return model_pair(as_string(j.at("model"), at + "/model"), int_or(j, at, "n", 0), at + "/model");
    }
    if (j.contains("random")) {
        allow_keys(j, at, {"random"});
        return random_pair(j.at("random"), at + "/random", seed);
    }
    allow_keys(j, at, {"vertices", "simplices", "sub"});
    const json& sj = field(j, at, "simplices");
    if (!sj.is_array())
        throw InputError(at + "/simplices", "expected an array of simplices");
    std::vector<Simplex> simplices;
    int max_v = -1;
    for (std::size_t i = 0; i < sj.size(); ++i) {
        simplices.push_back(int_list(sj[i], at + "/simplices/" + std::to_string(i)));
        for (int v : simplices.back())
            max_v = std::max(max_v, v);
    }
    const int nv = j.contains("vertices") ? as_int(j.at("vertices"), at + "/vertices") : max_v + 1;
    std::vector<Simplex> sub;
    if (j.contains("sub")) {
        const auto idx = int_list(j.at("sub"), at + "/sub");
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 0 || idx[i] >= static_cast<int>(simplices.size()))
                throw InputError(at + "/sub/" + std::to_string(i), "index outside the simplices list");
            sub.push_back(simplices[idx[i]]);
        }
    }
    try {
        return SimplicialPair::build(nv, simplices, sub);
    } catch (const TopologyError& e) {
        throw InputError(at, e.what());
    }
}

json ranks_json(const SimplicialPair& p)
{
    json out = json::object();
    for (int k = 0; k <= p.dimension(); ++k)
        out[std::to_string(k)] = DegreeHomology(p, k).rank();
    return out;
}

json pair_summary(const SimplicialPair& p)
{
    json counts = json::array();
    for (int d = 0; d <= p.dimension(); ++d)
        counts.push_back(p.count(d));
    return {{"dimension", p.dimension()}, {"simplex_counts", counts}, {"relative_betti", ranks_json(p)}};
}

HomologyClass parse_class(const json& j, const std::string& at, const SimplicialPair& p)
{
    if (j.is_string()) {
        if (j.get<std::string>() != "fundamental")
            throw InputError(at, "class must be \"fundamental\" or a list of simplices");
        try {
            return fundamental_class(p);
        } catch (const TopologyError& e) {
            throw InputError(at, e.what());
        }
    }
    if (!j.is_array() || j.empty())
        throw InputError(at, "class must be \"fundamental\" or a nonempty list of simplices");
    HomologyClass c;
    c.home = p.fingerprint();
    c.degree = -1;
    std::vector<std::size_t> raw;
    for (std::size_t i = 0; i < j.size(); ++i) {
        Simplex s = int_list(j[i], at + "/" + std::to_string(i));
        std::sort(s.begin(), s.end());
        const int d = static_cast<int>(s.size()) - 1;
        if (c.degree >= 0 && d != c.degree)
            throw InputError(at + "/" + std::to_string(i), "simplices of mixed dimension");
        c.degree = d;
        auto idx = p.index_of(s);
        if (!idx)
            throw InputError(at + "/" + std::to_string(i), "not a simplex of the pair");
        if (!p.in_sub(d, *idx))
            raw.push_back(*idx);
    }
    c.chain = chain_normalize(raw);
    return c;
}

// ---------------------------------------------------------------------------
// Commands

json homology_cmd(const RunConfig& cfg, const json& in, int& status)
{
    allow_keys(in, "", {"pair"});
    const SimplicialPair p = parse_pair(field(in, "", "pair"), "/pair", cfg.seed.value_or(0));
    json reps = json::object();
    for (int k = 0; k <= p.dimension(); ++k) {
        DegreeHomology h(p, k);
        json list = json::array();
        for (const auto& r : h.representatives())
            list.push_back(chain_json(p, k, r));
        reps[std::to_string(k)] = list;
    }
    status = ok;
    return {{"ranks", ranks_json(p)},
            {"relative_euler_characteristic", p.relative_euler_characteristic()},
            {"representatives", reps},
            {"hypotheses", json::array()}};
}

json essential_cmd(const RunConfig& cfg, const json& in, int& status)
{
    allow_keys(in, "", {"source", "target", "vertex_map", "degree"});
    const SimplicialPair src = parse_pair(field(in, "", "source"), "/source", cfg.seed.value_or(0));
    const SimplicialPair tgt = parse_pair(field(in, "", "target"), "/target", cfg.seed.value_or(0));
    const auto vmap = int_list(field(in, "", "vertex_map"), "/vertex_map");
    std::optional<SimplicialMap> f;
    try {
        f.emplace(src, tgt, vmap);
    } catch (const std::exception& e) {
        throw InputError("/vertex_map", e.what());
    }
    std::optional<int> degree;
    if (in.contains("degree"))
        degree = as_int(in.at("degree"), "/degree");
    const auto rep = is_h_essential(*f, degree);
    const bool preimage = f->sub_is_preimage();
    json witness = nullptr;
    if (rep.witness)
        witness = chain_json(src, rep.witness->degree, rep.witness->chain);
    status = preimage ? ok : hypothesis_violated;
    return {{"essential", rep.essential},
            {"degree", rep.degree},
            {"image_rank", rep.image_rank},
            {"target_rank", rep.target_rank},
            {"witness", witness},
            {"refutation", rep.refutation},
            {"warnings", rep.warnings},
            {"hypotheses", json::array({{{"name", "source sub is the preimage of the target sub"}, {"holds", preimage}}})}};
}

json symsquare_cmd(const RunConfig& cfg, const json& in, int& status)
{
    allow_keys(in, "", {"pair", "class", "scale", "neighborhood", "max_subdivisions"});
    const SimplicialPair p = parse_pair(field(in, "", "pair"), "/pair", cfg.seed.value_or(0));
    const HomologyClass alpha = in.contains("class") ? parse_class(in.at("class"), "/class", p)
                                                     : parse_class(json("fundamental"), "/class", p);
    SymSquareOptions opt;
    opt.scale = cfg.res.value_or(int_or(in, "", "scale", opt.scale));
    opt.max_subdivisions = int_or(in, "", "max_subdivisions", opt.max_subdivisions);
    if (in.contains("neighborhood")) {
        const auto kind = as_string(in.at("neighborhood"), "/neighborhood");
        if (kind == "carrier")
            opt.kind = NeighborhoodKind::carrier;
        else if (kind == "whole")
            opt.kind = NeighborhoodKind::whole;
        else if (kind == "diagonal")
            opt.kind = NeighborhoodKind::diagonal;
        else
            throw InputError("/neighborhood", "expected carrier, whole or diagonal");
    }
    const bool cycle = DegreeHomology(p, alpha.degree).is_relative_cycle(alpha.chain);
    json hyps = json::array({{{"name", "alpha is a relative cycle"}, {"holds", cycle}}});
    if (!cycle) {
        status = hypothesis_violated;
        return {{"hypotheses", hyps}};
    }
    try {
        const SquaredClass sq = sym_square_class(p, alpha, opt);
        DegreeHomology h(sq.target, sq.cls.degree);
        const auto coords = h.coordinates(sq.cls.chain);
        json cj = json::array();
        if (coords)
            for (std::size_t i = 0; i < h.rank(); ++i)
                cj.push_back(coords->get(i) ? 1 : 0);
        const bool nonzero = coords && coords->any();
        json model = pair_summary(sq.model.pair);
        model["level"] = sq.model.level;
        status = ok;
        return {{"model", model},
                {"target", pair_summary(sq.target)},
                {"degree", sq.cls.degree},
                {"target_rank", h.rank()},
                {"coordinates", cj},
                {"square_nonzero", nonzero},
                {"subdivisions", sq.subdivisions},
                {"scale", opt.scale},
                {"hypotheses", hyps}};
    } catch (const TopologyError& e) {
        status = inconclusive;
        return {{"error", e.what()}, {"hypotheses", hyps}};
    }
}

ParameterModel parse_w(const json& j, const std::string& at, const std::optional<int>& res)
{
    allow_keys(j, at, {"kind", "res"});
    const std::string kind = as_string(field(j, at, "kind"), at + "/kind");
    const int r = res.value_or(int_or(j, at, "res", 16));
    if (r < 1)
        throw InputError(at + "/res", "resolution must be positive");
    if (kind == "point")
        return parameters::point();
    if (kind == "interval")
        return parameters::interval(r);
    if (kind == "circle")
        return parameters::circle(std::max(r, 3));
    if (kind == "square")
        return parameters::square(r);
    throw InputError(at + "/kind", "expected point, interval, circle or square");
}

json bu_cmd(const RunConfig& cfg, const json& in, int& status, std::map<std::string, std::string>& artifacts)
{
    allow_keys(in, "", {"w", "directions", "family", "eps"});
    const bool n2 = cfg.feature == "n2";
    const ParameterModel w = in.contains("w") ? parse_w(in.at("w"), "/w", cfg.res)
                                              : parse_w(json{{"kind", "interval"}}, "/w", cfg.res);
    DirectionSpace dirs;
    const json dj = in.value("directions", json::object());
    allow_keys(dj, "/directions", {"samples", "cube"});
    try {
        dirs = n2 ? cube_directions(int_or(dj, "/directions", "cube", 4))
                  : circle_directions(int_or(dj, "/directions", "samples", 256));
    } catch (const std::invalid_argument& e) {
        throw InputError("/directions", e.what());
    }
    FamilyFunction f;
    int m = n2 ? 2 : 1;
    const json fj = in.value("family", json{{"name", n2 ? "n2_linear" : "cos"}});
    allow_keys(fj, "/family", {"name", "trig"});
    if (fj.contains("trig")) {
        if (n2)
            throw InputError("/family/trig", "trigonometric families live on S^1");
        const json& t = fj.at("trig");
        allow_keys(t, "/family/trig", {"cos", "sin", "const"});
        auto coeffs = [&](const char* key) {
            std::vector<double> c;
            if (t.contains(key))
                for (std::size_t i = 0; i < t.at(key).size(); ++i)
                    c.push_back(as_double(t.at(key)[i], std::string("/family/trig/") + key + "/" + std::to_string(i)));
            return c;
        };
        f = families::trig(coeffs("cos"), coeffs("sin"), t.contains("const") ? as_double(t.at("const"), "/family/trig/const") : 0.0);
    } else {
        const std::string name = as_string(field(fj, "/family", "name"), "/family/name");
        const auto& names = n2 ? families::sphere_names() : families::circle_names();
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw InputError("/family/name", "unknown family '" + name + "' for " + (n2 ? "S^2" : "S^1"));
        f = families::named(name);
    }
    SampledFamily fam = sample_family(w, dirs, m, f);
    if (cfg.eps)
        fam.eps = *cfg.eps;
    else if (in.contains("eps"))
        fam.eps = as_double(in.at("eps"), "/eps");
    const SolutionSet sol = solve_bu(fam);
    const SpanningReport r = spanning_check(sol, fam);
    std::ostringstream csv;
    csv << "w_cell,d_cell,e\n";
    for (const auto& c : sol.cells) {
        csv << c.w_cell << ',' << c.d_cell << ',';
        for (std::size_t i = 0; i < c.e.size(); ++i)
            csv << (i ? ";" : "") << c.e[i];
        csv << '\n';
    }
    artifacts["csv"] = csv.str();
    status = !r.hypothesis_holds ? hypothesis_violated : r.status == SpanStatus::inconclusive ? inconclusive : ok;
    json witness = json::array();
    for (const auto& [a, b] : r.witness)
        witness.push_back({a, b});
    return {{"status", to_string(r.status)},
            {"surjective", r.surjective},
            {"essential", r.essential},
            {"w_cells", r.w_cells},
            {"empty_fibers", r.empty_fibers},
            {"flagged", r.flagged},
            {"components", r.components},
            {"eps", r.eps},
            {"witness_cells", witness},
            {"notes", r.notes},
            {"sphere_dim", dirs.sphere_dim},
            {"direction_samples", dirs.directions.size()},
            {"hypotheses", json::array({{{"name", "Z has property S for W x S^n"}, {"holds", r.hypothesis_holds}, {"detail", r.hypothesis}}})}};
}

ChordScene parse_scene(const json& j, const RunConfig& cfg)
{
    allow_keys(j, "", {"scene", "loops", "boundary_values", "boundary_function", "samples_per_edge", "nx", "ny",
                       "dir_res", "eps", "max_gap", "queries"});
    ChordScene sc;
    if (j.contains("scene")) {
        const auto name = as_string(j.at("scene"), "/scene");
        if (name == "disk_cos")
            sc = scenes::disk_cos();
        else if (name == "square_first_coordinate")
            sc = scenes::square_first_coordinate();
        else if (name == "annulus_first_coordinate")
            sc = scenes::annulus_first_coordinate();
        else
            throw InputError("/scene", "unknown scene '" + name + "'");
    } else {
        const json& lj = field(j, "", "loops");
        for (std::size_t l = 0; l < lj.size(); ++l) {
            std::vector<Vec2> loop;
            for (std::size_t i = 0; i < lj[l].size(); ++i) {
                const std::string at = "/loops/" + std::to_string(l) + "/" + std::to_string(i);
                if (!lj[l][i].is_array() || lj[l][i].size() != 2)
                    throw InputError(at, "expected [x, y]");
                loop.push_back({as_double(lj[l][i][0], at + "/0"), as_double(lj[l][i][1], at + "/1")});
            }
            sc.loops.push_back(std::move(loop));
        }
        if (j.contains("boundary_values")) {
            const json& bj = j.at("boundary_values");
            for (std::size_t i = 0; i < bj.size(); ++i) {
                const std::string at = "/boundary_values/" + std::to_string(i);
                if (!bj[i].is_array() || bj[i].size() != 2)
                    throw InputError(at, "expected [s, e]");
                sc.boundary_values.push_back({as_double(bj[i][0], at + "/0"), as_double(bj[i][1], at + "/1")});
            }
        } else {
            const auto fn = as_string(field(j, "", "boundary_function"), "/boundary_function");
            std::function<double(Vec2)> f;
            if (fn == "x")
                f = [](Vec2 p) { return p.x; };
            else if (fn == "y")
                f = [](Vec2 p) { return p.y; };
            else if (fn == "cos_angle")
                f = [](Vec2 p) { return std::cos(std::atan2(p.y, p.x)); };
            else
                throw InputError("/boundary_function", "expected x, y or cos_angle");
            sc.boundary_values = scenes::sample_boundary(sc.loops, f, int_or(j, "", "samples_per_edge", 4));
        }
    }
    sc.nx = int_or(j, "", "nx", sc.nx);
    sc.ny = int_or(j, "", "ny", sc.ny);
    sc.dir_res = int_or(j, "", "dir_res", sc.dir_res);
    if (cfg.res)
        sc.nx = sc.ny = *cfg.res;
    if (j.contains("eps"))
        sc.eps = as_double(j.at("eps"), "/eps");
    if (cfg.eps)
        sc.eps = *cfg.eps;
    if (j.contains("max_gap"))
        sc.max_gap = as_double(j.at("max_gap"), "/max_gap");
    return sc;
}

json chords_cmd(const RunConfig& cfg, const json& in, int& status, std::map<std::string, std::string>& artifacts)
{
    ChordScene sc = parse_scene(in, cfg);
    std::vector<Vec2> queries;
    if (in.contains("queries")) {
        const json& q = in.at("queries");
        for (std::size_t i = 0; i < q.size(); ++i) {
            const std::string at = "/queries/" + std::to_string(i);
            if (!q[i].is_array() || q[i].size() != 2)
                throw InputError(at, "expected [x, y]");
            queries.push_back({as_double(q[i][0], at + "/0"), as_double(q[i][1], at + "/1")});
        }
    } else {
        Vec2 c;
        for (const auto& v : sc.loops.at(0)) {
            c.x += v.x / sc.loops[0].size();
            c.y += v.y / sc.loops[0].size();
        }
        queries.push_back(c);
    }
    ChordSpanReport r;
    try {
        r = chord_span_check(sc);
    } catch (const std::invalid_argument& e) {
        throw InputError("/", e.what());
    }
    std::vector<ChordSolution> all;
    json sols = json::array();
    SceneGeometry g(sc);
    for (const auto& q : queries) {
        json list = json::array();
        if (g.inside(q)) {
            for (const auto& s : chord_solutions(sc, q)) {
                list.push_back({{"theta", s.theta},
                                {"x1", {s.x1.x, s.x1.y}},
                                {"x2", {s.x2.x, s.x2.y}},
                                {"e", s.e},
                                {"refined", s.refined}});
                all.push_back(s);
            }
        }
        sols.push_back({{"w", {q.x, q.y}}, {"inside", g.inside(q)}, {"chords", list}});
    }
    artifacts["svg"] = chord_svg(sc, all);
    const auto& c = r.conclusion;
    status = !r.hypothesis_holds ? hypothesis_violated : c.status == SpanStatus::inconclusive ? inconclusive : ok;
    return {{"status", to_string(c.status)},
            {"essential", c.essential},
            {"surjective", c.surjective},
            {"probative", r.probative},
            {"eps", r.eps},
            {"grid", {sc.nx, sc.ny}},
            {"dir_res", sc.dir_res},
            {"region_vertices", r.region_vertices},
            {"region_triangles", r.region_triangles},
            {"empty_fibers", c.empty_fibers},
            {"flagged", c.flagged},
            {"notes", r.notes},
            {"solutions", sols},
            {"hypotheses", json::array({{{"name", "boundary data has property S for (dW, empty)"},
                                         {"holds", r.hypothesis_holds},
                                         {"detail", r.hypothesis}}})}};
}

// corr ------------------------------------------------------------------------

corr::Rational parse_rational(const json& j, const std::string& at)
{
    if (j.is_number_integer())
        return corr::Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return corr::Rational(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError(at, "cannot read '" + j.get<std::string>() + "' as a rational");
        }
    }
    if (j.is_number()) {
        // Continued-fraction recovery of small denominators.
        const double x = j.get<double>();
        long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        double r = x;
        for (int it = 0; it < 40; ++it) {
            const double a = std::floor(r);
            const long long ai = static_cast<long long>(a);
            const long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
            p0 = p1;
            q0 = q1;
            p1 = p2;
            q1 = q2;
            if (std::abs(static_cast<double>(p1) / q1 - x) <= 1e-12 || q1 > 1'000'000)
                break;
            r = 1 / (r - a);
        }
        return corr::Rational(p1, q1);
    }
    throw InputError(at, "expected a number or a rational string");
}

corr::Label parse_label(const std::string& key, int k, const std::string& at)
{
    corr::Label l;
    if (key == "K") {
        for (int i = 0; i < k; ++i)
            l.push_back(i);
        return l;
    }
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            l.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw InputError(at, "label '" + key + "' is not a comma-separated list of states");
        }
    }
    std::sort(l.begin(), l.end());
    return l;
}

corr::FiniteCorrespondence parse_corr(const json& j, const corr::Label& l, int k, const corr::PayoffGrid& grid,
                                      const std::string& at)
{
    corr::FiniteCorrespondence f{k, l, grid, {}};
    if (!j.is_array())
        throw InputError(at, "expected a list of [p, y] pairs");
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string pat = at + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != 2 || !j[i][0].is_array() || !j[i][1].is_array())
            throw InputError(pat, "expected [p, y]");
        corr::Bary p;
        for (std::size_t c = 0; c < j[i][0].size(); ++c)
            p.push_back(parse_rational(j[i][0][c], pat + "/0/" + std::to_string(c)));
        if (p.size() == l.size() && static_cast<int>(l.size()) != k) {
            corr::Bary full(k);   // coordinates given over L only
            for (std::size_t c = 0; c < l.size(); ++c)
                full[l[c]] = p[c];
            p = full;
        }
        corr::Rational sum = 0;
        for (const auto& c : p)
            sum += c;
        if (!p.empty() && sum != 1 && abs(sum - 1) <= corr::Rational(1, 1'000'000'000'000LL)) {
            auto it = std::max_element(p.begin(), p.end());
            *it += 1 - sum;
        }
        corr::GridPayoff y;
        for (std::size_t c = 0; c < j[i][1].size(); ++c) {
            try {
                y.push_back(grid.snap(as_double(j[i][1][c], pat + "/1/" + std::to_string(c))));
            } catch (const std::invalid_argument& e) {
                throw InputError(pat + "/1/" + std::to_string(c), e.what());
            }
        }
        f.points.push_back({p, y});
    }
    try {
        f.normalize();
    } catch (const std::invalid_argument& e) {
        throw InputError(at, e.what());
    }
    return f;
}

json fibers_json(const corr::HullCorrespondence& g)
{
    json out = json::array();
    for (const auto& [y, hulls] : g.fibers) {
        json yv = json::array();
        for (int v : y)
            yv.push_back(g.grid.value(v));
        json hj = json::array();
        for (const auto& h : hulls) {
            json gens = json::array();
            for (const auto& gen : h) {
                json p = json::array();
                for (const auto& c : gen.p)
                    p.push_back(c.str());
                gens.push_back({{"p", p}, {"label", corr::label_string(gen.label)}});
            }
            hj.push_back(gens);
        }
        out.push_back({{"y", yv}, {"hulls", hj}});
    }
    return out;
}

json corr_cmd(const RunConfig& cfg, const json& in, int& status)
{
    allow_keys(in, "", {"K", "script_L", "payoff_box", "F", "U", "grid_res", "construction", "lattice_res"});
    const int k = as_int(field(in, "", "K"), "/K");
    const json& sl = field(in, "", "script_L");
    std::vector<corr::Label> script_l;
    for (std::size_t i = 0; i < sl.size(); ++i) {
        auto l = int_list(sl[i], "/script_L/" + std::to_string(i));
        std::sort(l.begin(), l.end());
        script_l.push_back(l);
    }
    const json& box = field(in, "", "payoff_box");
    if (!box.is_array() || box.size() != 2)
        throw InputError("/payoff_box", "expected [a, b]");
    corr::PayoffGrid grid{as_double(box[0], "/payoff_box/0"), as_double(box[1], "/payoff_box/1"),
                          cfg.res.value_or(int_or(in, "", "grid_res", 4))};
    if (!(grid.a < grid.b) || grid.res < 1)
        throw InputError("/payoff_box", "payoff box must be a nontrivial segment with a positive grid resolution");
    const std::string construction = in.contains("construction") ? as_string(in.at("construction"), "/construction") : "far";
    std::map<corr::Label, corr::FiniteCorrespondence> fs;
    const json& fj = field(in, "", "F");
    if (!fj.is_object())
        throw InputError("/F", "expected an object keyed by labels");
    for (const auto& [key, v] : fj.items()) {
        const auto l = parse_label(key, k, "/F/" + key);
        fs.emplace(l, parse_corr(v, l, k, grid, "/F/" + key));
    }
    corr::GammaResult res;
    try {
        if (construction == "far") {
            corr::FarInput fin{k, script_l, grid, fs, {}};
            const json& uj = field(in, "", "U");
            for (const auto& [key, v] : uj.items()) {
                const std::string at = "/U/" + key;
                allow_keys(v, at, {"lo", "hi"});
                corr::GridBox b;
                for (const char* side : {"lo", "hi"}) {
                    auto& dst = std::string(side) == "lo" ? b.lo : b.hi;
                    const json& arr = field(v, at, side);
                    for (std::size_t i = 0; i < arr.size(); ++i) {
                        const std::string p = at + "/" + side + "/" + std::to_string(i);
                        try {
                            dst.push_back(grid.snap(as_double(arr[i], p)));
                        } catch (const std::invalid_argument& e) {
                            throw InputError(p, e.what());
                        }
                    }
                }
                fin.u.emplace(parse_label(key, k, at), b);
            }
            res = corr::gamma_far(fin);
        } else if (construction == "close") {
            res = corr::gamma_close(corr::CloseInput{k, script_l, grid, fs});
        } else {
            throw InputError("/construction", "expected far or close");
        }
    } catch (const std::invalid_argument& e) {
        throw InputError("/", e.what());
    }
    corr::FootprintOptions fo;
    fo.lattice_res = int_or(in, "", "lattice_res", 0);
    const auto v = corr::spanning_empirical(res.gamma, fo);
    json hyps = json::array();
    for (const auto& h : res.hypotheses)
        hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
    status = !res.hypotheses_hold() ? hypothesis_violated : v.status == SpanStatus::inconclusive ? inconclusive : ok;
    return {{"construction", construction},
            {"verdict", to_string(v.status)},
            {"label", v.note},
            {"lattice_res", v.lattice_res},
            {"footprint_vertices", v.footprint_vertices},
            {"footprint_simplices", v.footprint_simplices},
            {"image_rank", v.detail.image_rank},
            {"target_rank", v.detail.target_rank},
            {"fibers", fibers_json(res.gamma)},
            {"hypotheses", hyps}};
}

json config_json(const RunConfig& cfg)
{
    json c = {{"command", cfg.command}, {"input", cfg.input}, {"feature", cfg.feature}};
    c["res"] = cfg.res ? json(*cfg.res) : json(nullptr);
    c["eps"] = cfg.eps ? json(*cfg.eps) : json(nullptr);
    c["seed"] = cfg.seed ? json(*cfg.seed) : json(nullptr);
    return c;
}

std::string default_input(const std::string& command)
{
    if (command == "homology")
        return R"({"pair": {"model": "circle", "n": 3}})";
    if (command == "symsquare")
        return R"({"pair": {"model": "circle", "n": 3}, "class": "fundamental"})";
    if (command == "bu-solve")
        return R"({"w": {"kind": "interval", "res": 16}, "family": {"name": "cos"}})";
    if (command == "chords")
        return R"({"scene": "disk_cos", "nx": 24, "ny": 24, "dir_res": 96, "queries": [[0, 0]]})";
    throw InputError("", "command '" + command + "' needs --input");
}

}  // namespace

RunResult execute(const RunConfig& cfg, const std::string& text)
{
    json in;
    try {
        in = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("byte " + std::to_string(e.byte), e.what());
    }
    if (cfg.feature != "" && cfg.feature != "n2")
        throw InputError("--feature", "unknown feature '" + cfg.feature + "'");
    RunResult r;
    json body;
    if (cfg.command == "homology")
        body = homology_cmd(cfg, in, r.status);
    else if (cfg.command == "essential")
        body = essential_cmd(cfg, in, r.status);
    else if (cfg.command == "symsquare")
        body = symsquare_cmd(cfg, in, r.status);
    else if (cfg.command == "bu-solve")
        body = bu_cmd(cfg, in, r.status, r.artifacts);
    else if (cfg.command == "chords")
        body = chords_cmd(cfg, in, r.status, r.artifacts);
    else if (cfg.command == "corr")
        body = corr_cmd(cfg, in, r.status);
    else
        throw InputError("command", "unknown command '" + cfg.command + "'");
    json report = {{"tool", "pbu"}, {"version", version}, {"config", config_json(cfg)}, {"exit_status", r.status}};
    report["result"] = body;
    r.report = report.dump(2) + "\n";
    return r;
}

int run(const RunConfig& cfg)
{
    std::string text;
    try {
        if (cfg.input.empty()) {
            text = default_input(cfg.command);
        } else {
            std::ifstream f(cfg.input);
            if (!f)
                throw InputError(cfg.input, "cannot open input file");
            std::stringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        const RunResult r = execute(cfg, text);
        if (cfg.out.empty()) {
            std::cout << r.report;
        } else {
            std::ofstream(cfg.out) << r.report;
            const auto dot = cfg.out.find_last_of('.');
            const std::string stem = dot == std::string::npos ? cfg.out : cfg.out.substr(0, dot);
            for (const auto& [ext, content] : r.artifacts)
                std::ofstream(stem + "." + ext) << content;
        }
        return r.status;
    } catch (const InputError& e) {
        std::cerr << "pbu: " << (cfg.input.empty() ? "<default>" : cfg.input) << ": " << e.location << ": " << e.what()
                  << "\n";
        return parse_error;
    }
}

}  // namespace pbu::cli
