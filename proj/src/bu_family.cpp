#include "pbu/bu_family.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pbu/sym_square.hpp"

namespace pbu {

// ---------------------------------------------------------------------------
// Parameter models

namespace parameters {

ParameterModel point() { return {"point", models::point(), {Point{}}}; }

ParameterModel interval(int res)
{
    if (res < 1)
        throw std::invalid_argument("interval needs at least one edge");
    ParameterModel w{"interval", models::interval_rel_boundary(res), {}};
    for (int i = 0; i <= res; ++i)
        w.points.push_back({static_cast<double>(i) / res});
    return w;
}

ParameterModel circle(int res)
{
    ParameterModel w{"circle", models::circle(res), {}};
    for (int i = 0; i < res; ++i)
        w.points.push_back({static_cast<double>(i) / res});
    return w;
}

ParameterModel square(int res)
{
    if (res < 1)
        throw std::invalid_argument("square needs at least one cell per side");
    const int n = res + 1;
    std::vector<Simplex> tris;
    std::vector<Simplex> boundary;
    auto id = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < res; ++i)
        for (int j = 0; j < res; ++j) {
            tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            tris.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
        }
    for (int i = 0; i < res; ++i) {
        boundary.push_back({id(i, 0), id(i + 1, 0)});
        boundary.push_back({id(i, res), id(i + 1, res)});
        boundary.push_back({id(0, i), id(0, i + 1)});
        boundary.push_back({id(res, i), id(res, i + 1)});
    }
    ParameterModel w{"square", SimplicialPair::build(n * n, tris, boundary), {}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w.points.push_back({static_cast<double>(i) / res, static_cast<double>(j) / res});
    return w;
}

}  // namespace parameters

// ---------------------------------------------------------------------------
// Direction spaces

namespace {

void finish_directions(DirectionSpace& ds)
{
    const Quotient q = quotient_by_involution(ds.sphere, ds.antipode);
    ds.quotient = q.pair;
    ds.class_of = q.vertex_class;
    const int top = ds.sphere.dimension();
    ds.lift.assign(ds.quotient.count(top), {});
    for (std::size_t i = 0; i < ds.sphere.count(top); ++i) {
        auto& l = ds.lift[q.image[top][i]];
        if (l.empty())
            l = ds.sphere.simplex(top, i);
    }
}

}  // namespace

DirectionSpace circle_directions(int samples)
{
    if (samples % 2 != 0)
        throw std::invalid_argument("direction sample count must be even for an exact antipode");
    if (samples < 6)
        throw std::invalid_argument("at least 6 direction samples are needed");
    DirectionSpace ds;
    ds.sphere_dim = 1;
    for (int j = 0; j < samples; ++j) {
        if (j < samples / 2) {
            const double t = 2 * std::numbers::pi * j / samples;
            ds.directions.push_back({std::cos(t), std::sin(t)});
        } else {
            const Point& a = ds.directions[j - samples / 2];
            ds.directions.push_back({-a[0], -a[1]});
        }
        ds.antipode.push_back((j + samples / 2) % samples);
    }
    ds.sphere = models::circle(samples);
    finish_directions(ds);
    return ds;
}

DirectionSpace cube_directions(int r)
{
    if (r < 2)
        throw std::invalid_argument("cube direction grid needs r >= 2");
    DirectionSpace ds;
    ds.sphere_dim = 2;
    std::map<std::array<int, 3>, int> id;
    std::vector<std::array<int, 3>> grid;
    for (int x = 0; x <= r; ++x)
        for (int y = 0; y <= r; ++y)
            for (int z = 0; z <= r; ++z) {
                if (x != 0 && x != r && y != 0 && y != r && z != 0 && z != r)
                    continue;
                id[{x, y, z}] = static_cast<int>(grid.size());
                grid.push_back({x, y, z});
            }
    for (const auto& g : grid) {
        const int a = id.at({r - g[0], r - g[1], r - g[2]});
        ds.antipode.push_back(a);
        if (a < static_cast<int>(ds.directions.size())) {
            const Point& q = ds.directions[a];
            ds.directions.push_back({-q[0], -q[1], -q[2]});
            continue;
        }
        Point p{2.0 * g[0] / r - 1, 2.0 * g[1] / r - 1, 2.0 * g[2] / r - 1};
        const double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        for (auto& c : p)
            c /= n;
        ds.directions.push_back(std::move(p));
    }
    std::vector<Simplex> tris;
    for (int axis = 0; axis < 3; ++axis)
        for (int side : {0, r}) {
            const int b = (axis + 1) % 3 < (axis + 2) % 3 ? (axis + 1) % 3 : (axis + 2) % 3;
            const int c = 3 - axis - b;
            auto at = [&](int i, int j) {
                std::array<int, 3> g{};
                g[axis] = side;
                g[b] = i;
                g[c] = j;
                return id.at(g);
            };
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    tris.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
                    tris.push_back({at(i, j), at(i, j + 1), at(i + 1, j + 1)});
                }
        }
    ds.sphere = SimplicialPair::build(static_cast<int>(grid.size()), tris);
    finish_directions(ds);
    return ds;
}

// ---------------------------------------------------------------------------
// Families

SampledFamily sample_family(const ParameterModel& w, const DirectionSpace& dirs, int m, const FamilyFunction& f)
{
    if (m < 1)
        throw std::invalid_argument("value dimension must be positive");
    SampledFamily fam{w, dirs, m, {}, {}, std::nullopt};
    fam.values.reserve(w.points.size() * dirs.directions.size() * m);
    for (const auto& p : w.points)
        for (const auto& d : dirs.directions) {
            const Point v = f(p, d);
            if (static_cast<int>(v.size()) != m)
                throw std::invalid_argument("family value has the wrong dimension");
            for (double x : v) {
                if (!std::isfinite(x))
                    throw std::invalid_argument("family value is not finite");
                fam.values.push_back(x);
            }
        }
    return fam;
}

SampledFamily antipodal_difference(const SampledFamily& fam)
{
    if (!fam.is_function())
        throw std::invalid_argument("antipodal difference needs a function family");
    SampledFamily g = fam;
    const std::size_t nd = fam.direction_count();
    for (std::size_t wi = 0; wi < fam.w.points.size(); ++wi)
        for (std::size_t d = 0; d < nd; ++d) {
            const std::size_t a = static_cast<std::size_t>(fam.dirs.antipode[d]);
            if (a < d)
                continue;  // filled from the partner, so g(-v) is the exact negation
            for (int c = 0; c < fam.m; ++c) {
                const double x = fam.value(wi, d)[c] - fam.value(wi, a)[c];
                g.values[(wi * nd + d) * fam.m + c] = x;
                g.values[(wi * nd + a) * fam.m + c] = a == d ? 0.0 : -x;
            }
        }
    return g;
}

// ---------------------------------------------------------------------------
// Solver

namespace {

void check_directions(const DirectionSpace& ds)
{
    const std::size_t n = ds.directions.size();
    if (ds.antipode.size() != n)
        throw std::invalid_argument("antipode table has the wrong size");
    for (std::size_t d = 0; d < n; ++d) {
        const int a = ds.antipode[d];
        if (a < 0 || static_cast<std::size_t>(a) >= n || ds.antipode[a] != static_cast<int>(d) ||
            a == static_cast<int>(d))
            throw std::invalid_argument("direction sampling is not closed under an exact antipode");
    }
}

double box_distance(const Box& a, const Box& b)
{
    double dist = 0;
    for (std::size_t c = 0; c < a.lo.size(); ++c)
        dist = std::max({dist, a.lo[c] - b.hi[c], b.lo[c] - a.hi[c]});
    return dist;
}

Point box_meeting_point(const Box& a, const Box& b)
{
    Point e(a.lo.size());
    for (std::size_t c = 0; c < e.size(); ++c) {
        const double lo = std::max(a.lo[c], b.lo[c]);
        const double hi = std::min(a.hi[c], b.hi[c]);
        e[c] = (lo + hi) / 2;
    }
    return e;
}

struct CellTest {
    bool flagged = false;
    bool near = false;   // passes the relaxed probe
    Point e;
    double eps = 0;
};

CellTest test_function_cell(const SampledFamily& fam, const Simplex& ws, const std::vector<int>& lift)
{
    const int m = fam.m;
    std::vector<double> gmin(m, INFINITY), gmax(m, -INFINITY), fmin(m, INFINITY), fmax(m, -INFINITY);
    Point mean(m, 0.0);
    std::size_t corners = 0;
    for (int wi : ws)
        for (int d : lift) {
            const double* a = fam.value(wi, d);
            const double* b = fam.value(wi, fam.dirs.antipode[d]);
            for (int c = 0; c < m; ++c) {
                const double g = a[c] - b[c];
                gmin[c] = std::min(gmin[c], g);
                gmax[c] = std::max(gmax[c], g);
                fmin[c] = std::min({fmin[c], a[c], b[c]});
                fmax[c] = std::max({fmax[c], a[c], b[c]});
                mean[c] += (a[c] + b[c]) / 2;
            }
            ++corners;
        }
    CellTest t;
    double spread = 0;
    for (int c = 0; c < m; ++c)
        spread = std::max(spread, gmax[c] - gmin[c]);
    t.eps = fam.eps.value_or(2 * spread);
    t.flagged = true;
    t.near = true;
    for (int c = 0; c < m; ++c) {
        t.flagged = t.flagged && gmin[c] <= 0 && gmax[c] >= 0;
        t.near = t.near && gmin[c] <= t.eps && gmax[c] >= -t.eps;
    }
    for (auto& x : mean)
        x /= static_cast<double>(corners);
    t.e = std::move(mean);
    return t;
}

double cloud_spread(const SampledFamily& fam, const Simplex& ws, const std::vector<int>& lift)
{
    // Largest over corner pairs of the closest box-center gap; multi-valued clouds only
    // contribute their nearest branches.
    std::vector<std::vector<Point>> corners;
    for (int wi : ws)
        for (int d : lift) {
            std::vector<Point> centers;
            for (const auto& b : fam.cloud(wi, d)) {
                Point c(fam.m);
                for (int k = 0; k < fam.m; ++k)
                    c[k] = (b.lo[k] + b.hi[k]) / 2;
                centers.push_back(std::move(c));
            }
            corners.push_back(std::move(centers));
        }
    double spread = 0;
    for (std::size_t i = 0; i < corners.size(); ++i)
        for (std::size_t j = i + 1; j < corners.size(); ++j) {
            double closest = INFINITY;
            for (const auto& a : corners[i])
                for (const auto& b : corners[j]) {
                    double d = 0;
                    for (int k = 0; k < fam.m; ++k)
                        d = std::max(d, std::abs(a[k] - b[k]));
                    closest = std::min(closest, d);
                }
            if (std::isfinite(closest))
                spread = std::max(spread, closest);
        }
    return spread;
}

CellTest test_cloud_cell(const SampledFamily& fam, const Simplex& ws, const std::vector<int>& lift)
{
    CellTest t;
    t.eps = fam.eps ? *fam.eps : 2 * cloud_spread(fam, ws, lift);
    double best = INFINITY;
    for (int w1 : ws)
        for (int d : lift)
            for (const auto& b1 : fam.cloud(w1, d))
                for (int w2 : ws)
                    for (int d2 : lift)
                        for (const auto& b2 : fam.cloud(w2, fam.dirs.antipode[d2])) {
                            const double dist = box_distance(b1, b2);
                            if (dist < best) {
                                best = dist;
                                t.e = box_meeting_point(b1, b2);
                            }
                        }
    t.flagged = best <= t.eps;
    t.near = best <= 2 * t.eps;
    return t;
}

CellTest test_cell(const SampledFamily& fam, const Simplex& ws, const std::vector<int>& lift)
{
    return fam.is_function() ? test_function_cell(fam, ws, lift) : test_cloud_cell(fam, ws, lift);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SolutionSet solve_bu(const SampledFamily& fam)
{
    check_directions(fam.dirs);
    const std::size_t nw = fam.w.points.size();
    if (static_cast<std::size_t>(fam.w.pair.vertex_count()) != nw)
        throw std::invalid_argument("parameter model has mismatched points");
    if (fam.is_function() && fam.values.size() != nw * fam.direction_count() * fam.m)
        throw std::invalid_argument("value table has the wrong size");
    if (!fam.is_function() && fam.boxes.size() != nw * fam.direction_count())
        throw std::invalid_argument("box cloud has the wrong size");

    const SimplicialPair& w = fam.w.pair;
    const SimplicialPair& dq = fam.dirs.quotient;
    const int wd = w.dimension();
    const int dd = dq.dimension();

    SolutionSet sol;
    sol.fiber.assign(w.count(wd), {});
    for (std::size_t s = 0; s < w.count(wd); ++s)
        for (std::size_t t = 0; t < dq.count(dd); ++t) {
            CellTest ct = test_cell(fam, w.simplex(wd, s), fam.dirs.lift[t]);
            if (!ct.flagged)
                continue;
            sol.eps = std::max(sol.eps, ct.eps);
            sol.fiber[s].push_back(sol.cells.size());
            sol.cells.push_back({s, t, std::move(ct.e)});
        }

    // Closed staircase cells of the flagged products, on compacted vertex labels.
    const int nd = dq.vertex_count();
    std::vector<Simplex> cells;
    std::vector<int> used;
    for (const auto& c : sol.cells)
        for (auto& s : staircase_cells(w.simplex(wd, c.w_cell), dq.simplex(dd, c.d_cell), nd)) {
            used.insert(used.end(), s.begin(), s.end());
            cells.push_back(std::move(s));
        }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (auto& s : cells)
        for (auto& v : s)
            v = static_cast<int>(std::lower_bound(used.begin(), used.end(), v) - used.begin());
    for (int v : used) {
        sol.w_vertex.push_back(v / nd);
        sol.d_vertex.push_back(v % nd);
    }
    SimplicialPair k = SimplicialPair::build(static_cast<int>(used.size()), cells);
    Mask sub = empty_mask(k);
    for (int dim = 0; dim <= k.dimension(); ++dim)
        for (std::size_t i = 0; i < k.count(dim); ++i) {
            Simplex img;
            for (int v : k.simplex(dim, i))
                img.push_back(sol.w_vertex[v]);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            sub[dim][i] = w.in_sub(static_cast<int>(img.size()) - 1, *w.index_of(img));
        }
    sol.complex = k.with_sub(std::move(sub));

    UnionFind uf(used.size());
    if (sol.complex.dimension() >= 1)
        for (const auto& e : sol.complex.simplices(1))
            uf.unite(e[0], e[1]);
    for (std::size_t v = 0; v < used.size(); ++v)
        sol.components += uf.find(static_cast<int>(v)) == static_cast<int>(v);
    return sol;
}

// ---------------------------------------------------------------------------
// Spanning

bool family_spans(const SampledFamily& fam, std::string* detail)
{
    if (fam.is_function()) {
        if (detail)
            *detail = "graph of a sampled function; spans W x S^n";
        return true;
    }
    // The footprint is a subcomplex of the pseudomanifold W x S^n, so it carries the
    // fundamental class exactly when it contains every top cell.
    const SimplicialPair& w = fam.w.pair;
    const SimplicialPair& s = fam.dirs.sphere;
    const int wd = w.dimension();
    const int sd = s.dimension();
    for (std::size_t a = 0; a < w.count(wd); ++a)
        for (std::size_t b = 0; b < s.count(sd); ++b)
            for (int wi : w.simplex(wd, a))
                for (int d : s.simplex(sd, b))
                    if (fam.cloud(wi, d).empty()) {
                        if (detail)
                            *detail = "Z is empty over W vertex " + std::to_string(wi) + ", direction " +
                                      std::to_string(d) + "; Z does not span W x S^n";
                        return false;
                    }
    if (detail)
        *detail = "Z meets every cell of W x S^n";
    return true;
}

SpanningReport spanning_check(const SolutionSet& sol, const SampledFamily& fam)
{
    SpanningReport r;
    const SimplicialPair& w = fam.w.pair;
    const int wd = w.dimension();
    r.w_cells = w.count(wd);
    r.flagged = sol.cells.size();
    r.components = sol.components;
    r.eps = sol.eps;
    for (const auto& f : sol.fiber)
        r.empty_fibers += f.empty();
    r.surjective = r.empty_fibers == 0;
    r.hypothesis_holds = family_spans(fam, &r.hypothesis);
    if (!fam.is_function())
        r.notes.push_back("e-coordinate collapsed: essentiality is certified on the footprint in W x (S^n/+-)");

    if (sol.complex.vertex_count() > 0) {
        SimplicialMap proj(sol.complex, w, sol.w_vertex);
        r.detail = is_h_essential(proj, wd);
        r.essential = r.detail.essential;
    } else {
        r.detail.degree = wd;
        r.detail.target_rank = DegreeHomology(w, wd).rank();
        r.essential = r.detail.target_rank == 0;
        r.detail.essential = r.essential;
        r.detail.refutation = "solution set is empty";
    }

    if (r.essential) {
        r.status = SpanStatus::essential;
        if (r.detail.witness) {
            std::set<std::pair<std::size_t, std::size_t>> pairs;
            const int d = r.detail.witness->degree;
            for (auto i : r.detail.witness->chain) {
                Simplex ws, ds;
                for (int v : sol.complex.simplex(d, i)) {
                    ws.push_back(sol.w_vertex[v]);
                    ds.push_back(sol.d_vertex[v]);
                }
                std::sort(ws.begin(), ws.end());
                ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
                std::sort(ds.begin(), ds.end());
                ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
                if (static_cast<int>(ws.size()) != wd + 1)
                    continue;
                const std::size_t wc = *w.index_of(ws);
                for (auto ci : sol.fiber[wc]) {
                    const Simplex& top = fam.dirs.quotient.simplex(fam.dirs.quotient.dimension(), sol.cells[ci].d_cell);
                    if (std::includes(top.begin(), top.end(), ds.begin(), ds.end())) {
                        pairs.insert({wc, sol.cells[ci].d_cell});
                        break;
                    }
                }
            }
            r.witness.assign(pairs.begin(), pairs.end());
        }
        return r;
    }

    r.status = SpanStatus::not_essential;
    if (!r.surjective) {
        // Probe the empty fibers with the relaxed predicate; solutions there mean the grid is too coarse.
        const SimplicialPair& dq = fam.dirs.quotient;
        bool all_found = true;
        for (std::size_t s = 0; s < sol.fiber.size() && all_found; ++s) {
            if (!sol.fiber[s].empty())
                continue;
            bool found = false;
            for (std::size_t t = 0; t < dq.count(dq.dimension()) && !found; ++t)
                found = test_cell(fam, w.simplex(wd, s), fam.dirs.lift[t]).near;
            all_found = found;
        }
        if (all_found) {
            r.status = SpanStatus::inconclusive;
            r.notes.push_back("inconclusive, refine: empty fibers contain near-solutions at the current resolution");
        }
    }
    return r;
}

const char* to_string(SpanStatus s)
{
    switch (s) {
    case SpanStatus::essential: return "essential";
    case SpanStatus::not_essential: return "not_essential";
    case SpanStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace families {

namespace {

double angle(const Point& x) { return std::atan2(x[1], x[0]); }
double param(const Point& w) { return w.empty() ? 0.0 : w[0]; }

}  // namespace

const std::vector<std::string>& circle_names()
{
    static const std::vector<std::string> names{"cos",      "sin",  "rotating",   "tilted", "blend",
                                                "breathing", "harmonic", "even_plus", "exp", "wave"};
    return names;
}

const std::vector<std::string>& sphere_names()
{
    static const std::vector<std::string> names{"n2_linear", "n2_quadratic"};
    return names;
}

FamilyFunction named(const std::string& name)
{
    constexpr double two_pi = 2 * std::numbers::pi;
    if (name == "cos")
        return [](const Point&, const Point& x) { return Point{std::cos(angle(x))}; };
    if (name == "sin")
        return [](const Point&, const Point& x) { return Point{std::sin(angle(x))}; };
    if (name == "rotating")
        return [=](const Point& w, const Point& x) { return Point{std::cos(angle(x) - two_pi * param(w))}; };
    if (name == "tilted")
        return [](const Point& w, const Point& x) { return Point{std::cos(angle(x)) + param(w)}; };
    if (name == "blend")
        return [](const Point& w, const Point& x) {
            const double t = param(w);
            return Point{t * std::cos(angle(x)) + (1 - t) * std::sin(angle(x))};
        };
    if (name == "breathing")
        return [](const Point& w, const Point& x) { return Point{(1 + param(w) * param(w)) * std::cos(angle(x))}; };
    if (name == "harmonic")
        return [](const Point& w, const Point& x) {
            return Point{std::sin(angle(x) + param(w)) + 0.5 * std::cos(3 * angle(x))};
        };
    if (name == "even_plus")
        return [](const Point& w, const Point& x) { return Point{std::cos(2 * angle(x)) + param(w)}; };
    if (name == "exp")
        return [](const Point& w, const Point& x) { return Point{std::exp(std::cos(angle(x))) * (1 + param(w))}; };
    if (name == "wave")
        return [=](const Point& w, const Point& x) {
            return Point{std::cos(angle(x)) + 0.3 * std::sin(two_pi * param(w)) * std::sin(2 * angle(x))};
        };
    if (name == "n2_linear")
        return [](const Point& w, const Point& x) { return Point{x[0] + param(w) * x[2], x[1]}; };
    if (name == "n2_quadratic")
        return [](const Point& w, const Point& x) { return Point{x[0] + x[1] * x[2], x[1] * x[1] + param(w) * x[0]}; };
    throw std::invalid_argument("unknown family '" + name + "'");
}

FamilyFunction trig(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs, double constant)
{
    return [=](const Point&, const Point& x) {
        const double th = angle(x);
        double v = constant;
        for (std::size_t k = 0; k < cos_coeffs.size(); ++k)
            v += cos_coeffs[k] * std::cos((k + 1) * th);
        for (std::size_t k = 0; k < sin_coeffs.size(); ++k)
            v += sin_coeffs[k] * std::sin((k + 1) * th);
        return Point{v};
    };
}

}  // namespace families

}  // namespace pbu
