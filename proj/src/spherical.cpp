#include "pbu/spherical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pbu {

namespace {

double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
Vec2 sub(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 add(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 scale(Vec2 a, double t) { return {a.x * t, a.y * t}; }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }

double segment_distance(Vec2 p, Vec2 a, Vec2 b)
{
    const Vec2 ab = sub(b, a);
    const double len2 = dot(ab, ab);
    double t = len2 > 0 ? dot(sub(p, a), ab) / len2 : 0;
    t = std::clamp(t, 0.0, 1.0);
    return norm(sub(p, add(a, scale(ab, t))));
}

// Orientation of p relative to the ray w + λx.
double side(Vec2 w, Vec2 x, Vec2 p) { return cross(x, sub(p, w)); }

// Exact zeros count as the clockwise side, as if the ray were turned slightly counterclockwise.
bool clockwise(double o) { return o <= 0; }

}  // namespace

// ---------------------------------------------------------------------------
// Geometry

SceneGeometry::SceneGeometry(const ChordScene& scene) : scene_(scene)
{
    if (scene_.loops.empty())
        throw std::invalid_argument("scene has no boundary loops");
    if (scene_.nx < 2 || scene_.ny < 2)
        throw std::invalid_argument("grid needs at least 2 cells per side");
    if (scene_.dir_res < 6 || scene_.dir_res % 2 != 0)
        throw std::invalid_argument("dir_res must be even and at least 6");
    loop_start_.push_back(0);
    for (const auto& loop : scene_.loops) {
        if (loop.size() < 3)
            throw std::invalid_argument("boundary loop needs at least 3 vertices");
        std::vector<double> vs;
        double s = loop_start_.back();
        for (std::size_t i = 0; i < loop.size(); ++i) {
            vs.push_back(s);
            const double len = norm(sub(loop[(i + 1) % loop.size()], loop[i]));
            if (len == 0)
                throw std::invalid_argument("boundary loop repeats a vertex");
            s += len;
        }
        vertex_s_.push_back(std::move(vs));
        loop_start_.push_back(s);
    }
    for (const auto& [s, e] : scene_.boundary_values) {
        if (!(s >= 0 && s < total_length()) || !std::isfinite(e))
            throw std::invalid_argument("boundary value parameter outside the arc-length range");
        samples_.push_back({s, e, loop_of(s)});
    }
    std::sort(samples_.begin(), samples_.end(), [](const Sample& a, const Sample& b) { return a.s < b.s; });
    max_gap_ = scene_.max_gap.value_or(2.5 * median_spacing());
}

int SceneGeometry::loop_of(double s) const
{
    const auto it = std::upper_bound(loop_start_.begin(), loop_start_.end(), s);
    return std::clamp(static_cast<int>(it - loop_start_.begin()) - 1, 0, static_cast<int>(scene_.loops.size()) - 1);
}

Vec2 SceneGeometry::point_at(double s) const
{
    const int l = loop_of(s);
    const auto& vs = vertex_s_[l];
    const auto& loop = scene_.loops[l];
    const std::size_t e = static_cast<std::size_t>(std::upper_bound(vs.begin(), vs.end(), s) - vs.begin()) - 1;
    const Vec2 a = loop[e];
    const Vec2 b = loop[(e + 1) % loop.size()];
    const double len = norm(sub(b, a));
    return add(a, scale(sub(b, a), (s - vs[e]) / len));
}

double SceneGeometry::median_spacing() const
{
    std::vector<double> gaps;
    for (std::size_t i = 0; i + 1 < samples_.size(); ++i)
        if (samples_[i].loop == samples_[i + 1].loop)
            gaps.push_back(samples_[i + 1].s - samples_[i].s);
    if (gaps.empty())
        return total_length();
    std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
    return gaps[gaps.size() / 2];
}

std::vector<double> SceneGeometry::values_at(double s) const
{
    const int l = loop_of(s);
    const double start = loop_start_[l];
    const double len = loop_length(l);
    auto first = std::lower_bound(samples_.begin(), samples_.end(), start,
                                  [](const Sample& a, double v) { return a.s < v; });
    auto last = std::lower_bound(samples_.begin(), samples_.end(), start + len,
                                 [](const Sample& a, double v) { return a.s < v; });
    if (first == last)
        return {};
    auto hi = std::lower_bound(first, last, s, [](const Sample& a, double v) { return a.s < v; });
    if (hi != last && hi->s == s)
        return {hi->e};
    // Neighbors on the loop, with wraparound.
    const Sample& b = hi == last ? *first : *hi;
    const Sample& a = hi == first ? *(last - 1) : *(hi - 1);
    double sa = a.s, sb = b.s;
    if (sa > s)
        sa -= len;
    if (sb < s)
        sb += len;
    const double gap = sb - sa;
    if (gap > max_gap_ || gap <= 0)
        return {};
    return {a.e + (b.e - a.e) * (s - sa) / gap};
}

double SceneGeometry::boundary_distance(Vec2 p) const
{
    double d = INFINITY;
    for (const auto& loop : scene_.loops)
        for (std::size_t i = 0; i < loop.size(); ++i)
            d = std::min(d, segment_distance(p, loop[i], loop[(i + 1) % loop.size()]));
    return d;
}

bool SceneGeometry::inside(Vec2 p) const
{
    if (boundary_distance(p) <= 1e-9 * std::max(1.0, diameter()))
        return false;
    return hits(p, {1, 0}, false).size() % 2 == 1;
}

std::vector<RayHit> SceneGeometry::hits(Vec2 w, Vec2 x, bool check_origin) const
{
    if (check_origin && boundary_distance(w) == 0)
        throw std::invalid_argument("ray origin lies on the boundary");
    std::vector<RayHit> out;
    for (std::size_t l = 0; l < scene_.loops.size(); ++l) {
        const auto& loop = scene_.loops[l];
        const std::size_t n = loop.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 a = loop[i];
            const Vec2 b = loop[(i + 1) % n];
            const double oa = side(w, x, a);
            const double ob = side(w, x, b);
            if (clockwise(oa) == clockwise(ob))
                continue;
            const double t = oa == 0 ? 0.0 : ob == 0 ? 1.0 : oa / (oa - ob);
            const Vec2 p = add(a, scale(sub(b, a), t));
            const double lambda = dot(sub(p, w), x);
            if (lambda <= 0)
                continue;
            const double len = norm(sub(b, a));
            double s = vertex_s_[l][i] + t * len;
            if (s >= loop_start_[l + 1])
                s = loop_start_[l];
            out.push_back({lambda, static_cast<int>(l), static_cast<int>(i), s, p});
        }
    }
    std::sort(out.begin(), out.end(), [](const RayHit& a, const RayHit& b) { return a.lambda < b.lambda; });
    return out;
}

double SceneGeometry::diameter() const
{
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& loop : scene_.loops)
        for (const auto& p : loop) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
    return std::hypot(x1 - x0, y1 - y0);
}

double SceneGeometry::lipschitz() const
{
    double l = 0;
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const Sample& a = samples_[i];
        // Next sample on the same loop, wrapping around.
        std::size_t j = i + 1;
        double sb;
        if (j < samples_.size() && samples_[j].loop == a.loop) {
            sb = samples_[j].s;
        } else {
            j = i;
            while (j > 0 && samples_[j - 1].loop == a.loop)
                --j;
            sb = samples_[j].s + loop_length(a.loop);
        }
        const double ds = sb - a.s;
        if (ds > 0 && ds <= max_gap_)
            l = std::max(l, std::abs(samples_[j].e - a.e) / ds);
    }
    return l;
}

double SceneGeometry::default_eps() const
{
    const double dtheta = 2 * std::numbers::pi / scene_.dir_res;
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& loop : scene_.loops)
        for (const auto& p : loop) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
    const double h = std::hypot((x1 - x0) / scene_.nx, (y1 - y0) / scene_.ny);
    return std::max(1e-9, 2 * lipschitz() * (diameter() * dtheta + h));
}

std::vector<double> ray_hits(const ChordScene& scene, Vec2 w, Vec2 x)
{
    std::vector<double> out;
    for (const auto& h : SceneGeometry(scene).hits(w, x))
        out.push_back(h.lambda);
    return out;
}

// ---------------------------------------------------------------------------
// Region and spherical correspondence

ParameterModel scene_region(const SceneGeometry& g)
{
    const ChordScene& sc = g.scene();
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& loop : sc.loops)
        for (const auto& p : loop) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
    const int nx = sc.nx, ny = sc.ny;
    auto at = [&](int i, int j) { return Vec2{x0 + (x1 - x0) * i / nx, y0 + (y1 - y0) * j / ny}; };
    std::vector<char> in((nx + 1) * (ny + 1));
    for (int i = 0; i <= nx; ++i)
        for (int j = 0; j <= ny; ++j)
            in[i * (ny + 1) + j] = g.inside(at(i, j));

    std::vector<std::array<int, 3>> tris;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const int a = i * (ny + 1) + j, b = (i + 1) * (ny + 1) + j;
            if (in[a] && in[a + 1] && in[b] && in[b + 1]) {
                tris.push_back({a, b, b + 1});
                tris.push_back({a, a + 1, b + 1});
            }
        }
    std::vector<int> used;
    for (const auto& t : tris)
        used.insert(used.end(), t.begin(), t.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    auto relabel = [&](int v) { return static_cast<int>(std::lower_bound(used.begin(), used.end(), v) - used.begin()); };

    std::vector<Simplex> simplices;
    std::map<std::pair<int, int>, int> edge_use;
    for (const auto& t : tris) {
        Simplex s{relabel(t[0]), relabel(t[1]), relabel(t[2])};
        std::sort(s.begin(), s.end());
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                ++edge_use[{s[a], s[b]}];
        simplices.push_back(std::move(s));
    }
    std::vector<Simplex> boundary;
    for (const auto& [e, n] : edge_use)
        if (n == 1)
            boundary.push_back({e.first, e.second});

    ParameterModel w{"region", SimplicialPair::build(static_cast<int>(used.size()), simplices, boundary), {}};
    for (int v : used) {
        const Vec2 p = at(v / (ny + 1), v % (ny + 1));
        w.points.push_back({p.x, p.y});
    }
    return w;
}

SampledFamily build_spherical(const ChordScene& scene)
{
    const SceneGeometry g(scene);
    const double eps = scene.eps.value_or(g.default_eps());
    SampledFamily fam{scene_region(g), circle_directions(scene.dir_res), 1, {}, {}, eps};
    const std::size_t nw = fam.w.points.size();
    const std::size_t nd = fam.direction_count();

    std::vector<std::vector<double>> raw(nw * nd);
    for (std::size_t wi = 0; wi < nw; ++wi) {
        const Vec2 w{fam.w.points[wi][0], fam.w.points[wi][1]};
        for (std::size_t d = 0; d < nd; ++d) {
            const Vec2 x{fam.dirs.directions[d][0], fam.dirs.directions[d][1]};
            for (const auto& h : g.hits(w, x, false))
                for (double e : g.values_at(h.s))
                    raw[wi * nd + d].push_back(e);
        }
    }

    std::vector<std::vector<int>> neighbors(nw);
    if (fam.w.pair.dimension() >= 1)
        for (const auto& e : fam.w.pair.simplices(1)) {
            neighbors[e[0]].push_back(e[1]);
            neighbors[e[1]].push_back(e[0]);
        }
    // Widen each value to its nearest continuation at neighboring samples, within eps.
    fam.boxes.assign(nw * nd, {});
    for (std::size_t wi = 0; wi < nw; ++wi)
        for (std::size_t d = 0; d < nd; ++d) {
            std::vector<std::size_t> nb;
            nb.push_back(wi * nd + (d + 1) % nd);
            nb.push_back(wi * nd + (d + nd - 1) % nd);
            for (int v : neighbors[wi])
                nb.push_back(static_cast<std::size_t>(v) * nd + d);
            for (double e : raw[wi * nd + d]) {
                double r = 0;
                for (auto n : nb) {
                    double closest = INFINITY;
                    for (double f : raw[n])
                        closest = std::min(closest, std::abs(f - e));
                    if (closest <= eps)
                        r = std::max(r, closest);
                }
                fam.boxes[wi * nd + d].push_back(Box{{e - r}, {e + r}});
            }
        }
    return fam;
}

// ---------------------------------------------------------------------------
// Chords

namespace {

struct RayValues {
    std::vector<RayHit> hits;
    std::vector<double> values;   // one per hit, NaN across gaps
};

RayValues cast(const SceneGeometry& g, Vec2 w, double theta)
{
    RayValues r;
    r.hits = g.hits(w, {std::cos(theta), std::sin(theta)}, false);
    for (const auto& h : r.hits) {
        auto v = g.values_at(h.s);
        r.values.push_back(v.empty() ? NAN : v[0]);
    }
    return r;
}

ChordSolution make_solution(Vec2 w, double theta, const RayHit& a, const RayHit& b, double e, bool refined)
{
    return {w, theta, a.point, b.point, e, refined};
}

}  // namespace

std::vector<ChordSolution> chord_solutions(const ChordScene& scene, Vec2 w)
{
    const SceneGeometry g(scene);
    if (!g.inside(w))
        throw std::invalid_argument("chord query point is not interior to W");
    const int n = scene.dir_res / 2;
    const double pi = std::numbers::pi;
    std::vector<RayValues> plus(n + 1), minus(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double th = pi * j / n;
        plus[j] = cast(g, w, th);
        minus[j] = cast(g, w, th + pi);
    }

    std::vector<ChordSolution> out;
    for (int j = 0; j < n; ++j) {
        const double th = pi * j / n;
        const auto& p0 = plus[j];
        const auto& m0 = minus[j];
        for (std::size_t a = 0; a < p0.hits.size(); ++a)
            for (std::size_t b = 0; b < m0.hits.size(); ++b) {
                const double d0 = p0.values[a] - m0.values[b];
                if (std::abs(d0) <= 1e-12) {
                    out.push_back(make_solution(w, th, p0.hits[a], m0.hits[b], (p0.values[a] + m0.values[b]) / 2, true));
                    continue;
                }
                const auto& p1 = plus[j + 1];
                const auto& m1 = minus[j + 1];
                if (p1.hits.size() != p0.hits.size() || m1.hits.size() != m0.hits.size())
                    continue;
                const double d1 = p1.values[a] - m1.values[b];
                if (!(d0 * d1 < 0) || std::abs(d1) <= 1e-12)
                    continue;
                // Bisection on the bracket while hit ranks persist.
                double lo = th, hi = pi * (j + 1) / n, flo = d0;
                RayValues bp = p0, bm = m0;
                bool refined = true;
                for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
                    const double mid = (lo + hi) / 2;
                    RayValues mp = cast(g, w, mid), mm = cast(g, w, mid + pi);
                    if (mp.hits.size() != p0.hits.size() || mm.hits.size() != m0.hits.size()) {
                        refined = false;
                        break;
                    }
                    const double fm = mp.values[a] - mm.values[b];
                    bp = std::move(mp);
                    bm = std::move(mm);
                    if (fm == 0) {
                        lo = hi = mid;
                        break;
                    }
                    if ((fm < 0) == (flo < 0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                const double root = (lo + hi) / 2;
                RayValues rp = cast(g, w, root), rm = cast(g, w, root + pi);
                if (rp.hits.size() == p0.hits.size() && rm.hits.size() == m0.hits.size())
                    out.push_back(make_solution(w, root, rp.hits[a], rm.hits[b], (rp.values[a] + rm.values[b]) / 2, refined));
                else
                    out.push_back(make_solution(w, root, bp.hits[a], bm.hits[b], (bp.values[a] + bm.values[b]) / 2, false));
            }
    }
    std::sort(out.begin(), out.end(), [](const ChordSolution& a, const ChordSolution& b) { return a.theta < b.theta; });
    return out;
}

std::vector<ChordSolution> oriented_chord_solutions(const ChordScene& scene, Vec2 w)
{
    std::vector<ChordSolution> out = chord_solutions(scene, w);
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
        ChordSolution s = out[i];
        s.theta += std::numbers::pi;
        std::swap(s.x1, s.x2);
        out.push_back(s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Span check

bool boundary_data_spans(const SceneGeometry& g, std::string* detail)
{
    const int per_loop = std::max(64, g.scene().dir_res);
    const double width = g.scene().eps.value_or(g.default_eps());
    std::vector<Simplex> cycle_edges;
    std::map<std::pair<int, long long>, int> id;      // (sample, bin) -> vertex
    std::vector<std::vector<long long>> bins;
    const int loops = static_cast<int>(g.scene().loops.size());
    for (int l = 0; l < loops; ++l)
        for (int i = 0; i < per_loop; ++i) {
            const double s = g.loop_start(l) + g.loop_length(l) * i / per_loop;
            std::vector<long long> b;
            for (double e : g.values_at(s))
                b.push_back(static_cast<long long>(std::floor(e / width)));
            bins.push_back(std::move(b));
            const int v = l * per_loop + i;
            cycle_edges.push_back({v, l * per_loop + (i + 1) % per_loop});
        }
    for (std::size_t v = 0; v < bins.size(); ++v)
        for (long long b : bins[v])
            id.emplace(std::make_pair(static_cast<int>(v), b), 0);
    int next = 0;
    for (auto& [key, value] : id)
        value = next++;

    std::vector<Simplex> edges;
    std::vector<int> projection(next);
    for (const auto& [key, value] : id)
        projection[value] = key.first;
    for (int l = 0; l < loops; ++l)
        for (int i = 0; i < per_loop; ++i) {
            const int v = l * per_loop + i;
            const int u = l * per_loop + (i + 1) % per_loop;
            for (long long a : bins[v])
                for (long long b : bins[u])
                    if (std::llabs(a - b) <= 1)
                        edges.push_back({id.at({v, a}), id.at({u, b})});
        }
    std::sort(edges.begin(), edges.end(), [](Simplex a, Simplex b) {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a < b;
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](Simplex a, Simplex b) {
                                std::sort(a.begin(), a.end());
                                std::sort(b.begin(), b.end());
                                return a == b;
                            }),
                edges.end());
    const SimplicialPair boundary = SimplicialPair::build(loops * per_loop, cycle_edges);
    if (next == 0) {
        if (detail)
            *detail = "Y is empty";
        return false;
    }
    const SimplicialPair footprint = SimplicialPair::build(next, edges);
    const auto rep = is_h_essential(SimplicialMap(footprint, boundary, projection), 1);
    if (detail)
        *detail = rep.essential ? "Y spans every boundary loop in degree 1"
                                : "Y does not span the boundary: " + rep.refutation;
    return rep.essential;
}

ChordSpanReport chord_span_check(const ChordScene& scene)
{
    const SceneGeometry g(scene);
    ChordSpanReport r;
    r.hypothesis_holds = boundary_data_spans(g, &r.hypothesis);
    const SampledFamily fam = build_spherical(scene);
    r.eps = *fam.eps;
    r.region_vertices = fam.w.points.size();
    r.region_triangles = fam.w.pair.dimension() >= 2 ? fam.w.pair.count(2) : 0;
    const SolutionSet sol = solve_bu(fam);
    r.conclusion = spanning_check(sol, fam);
    r.probative = r.hypothesis_holds && r.conclusion.hypothesis_holds;
    if (!r.hypothesis_holds)
        r.notes.push_back("hypothesis violated: conclusion is non-probative");
    r.notes.push_back("closure of Z approximated by widening each hit value to its neighbors within eps");
    return r;
}

std::string chord_svg(const ChordScene& scene, const std::vector<ChordSolution>& chords)
{
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& loop : scene.loops)
        for (const auto& p : loop) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
    const double size = 512;
    const double span = std::max(x1 - x0, y1 - y0);
    const double k = (size - 32) / span;
    auto px = [&](Vec2 p) {
        std::ostringstream os;
        os.precision(6);
        os << 16 + (p.x - x0) * k << ',' << size - 16 - (p.y - y0) * k;
        return os.str();
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
    os << "<path fill=\"#eef\" fill-rule=\"evenodd\" stroke=\"#224\" stroke-width=\"1.5\" d=\"";
    for (const auto& loop : scene.loops) {
        os << 'M';
        for (std::size_t i = 0; i < loop.size(); ++i)
            os << (i ? " L" : "") << px(loop[i]);
        os << " Z ";
    }
    os << "\"/>\n";
    for (const auto& c : chords) {
        const std::string a = px(c.x1), b = px(c.x2), w = px(c.w);
        os << "<line x1=\"" << a.substr(0, a.find(',')) << "\" y1=\"" << a.substr(a.find(',') + 1) << "\" x2=\""
           << b.substr(0, b.find(',')) << "\" y2=\"" << b.substr(b.find(',') + 1)
           << "\" stroke=\"#c33\" stroke-width=\"1\"/>\n";
        os << "<circle cx=\"" << w.substr(0, w.find(',')) << "\" cy=\"" << w.substr(w.find(',') + 1)
           << "\" r=\"2.5\" fill=\"#222\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace scenes {

std::vector<Vec2> ngon(int n, double r, Vec2 c)
{
    std::vector<Vec2> out;
    for (int i = 0; i < n; ++i) {
        const double t = 2 * std::numbers::pi * i / n;
        out.push_back({c.x + r * std::cos(t), c.y + r * std::sin(t)});
    }
    return out;
}

std::vector<std::pair<double, double>> sample_boundary(const std::vector<std::vector<Vec2>>& loops,
                                                       const std::function<double(Vec2)>& f, int per_edge)
{
    std::vector<std::pair<double, double>> out;
    double s = 0;
    for (const auto& loop : loops)
        for (std::size_t i = 0; i < loop.size(); ++i) {
            const Vec2 a = loop[i];
            const Vec2 b = loop[(i + 1) % loop.size()];
            const double len = norm(sub(b, a));
            for (int k = 0; k <= per_edge; ++k) {
                const double t = static_cast<double>(k) / (per_edge + 1);
                out.push_back({s + t * len, f(add(a, scale(sub(b, a), t)))});
            }
            s += len;
        }
    return out;
}

ChordScene disk_cos(int sides)
{
    ChordScene sc;
    sc.loops = {ngon(sides, 1.0)};
    sc.boundary_values = sample_boundary(sc.loops, [](Vec2 p) { return std::cos(std::atan2(p.y, p.x)); }, 0);
    return sc;
}

ChordScene square_first_coordinate()
{
    ChordScene sc;
    sc.loops = {{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
    sc.boundary_values = sample_boundary(sc.loops, [](Vec2 p) { return p.x; }, 63);
    return sc;
}

ChordScene annulus_first_coordinate(int sides)
{
    ChordScene sc;
    auto inner = ngon(sides / 2, 0.4);
    std::reverse(inner.begin(), inner.end());
    sc.loops = {ngon(sides, 1.0), inner};
    sc.boundary_values = sample_boundary(sc.loops, [](Vec2 p) { return p.x; }, 1);
    return sc;
}

}  // namespace scenes

}  // namespace pbu
