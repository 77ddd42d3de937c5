#include "pbu/corr_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pbu::corr {

int PayoffGrid::snap(double y) const
{
    const double t = (y - a) / (b - a) * res;
    const long i = std::lround(t);
    if (i < 0 || i > res || std::abs(t - static_cast<double>(i)) > 1e-6)
        throw std::invalid_argument("payoff " + std::to_string(y) + " is not on the grid over [" + std::to_string(a) +
                                    ", " + std::to_string(b) + "] with resolution " + std::to_string(res));
    return static_cast<int>(i);
}

std::string label_string(const Label& l)
{
    std::string s = "{";
    for (std::size_t i = 0; i < l.size(); ++i)
        s += (i ? "," : "") + std::to_string(l[i]);
    return s + "}";
}

namespace {

void check_label(int k, const Label& l)
{
    if (l.empty() || !std::is_sorted(l.begin(), l.end()) || std::adjacent_find(l.begin(), l.end()) != l.end() ||
        l.front() < 0 || l.back() >= k)
        throw std::invalid_argument("bad label " + label_string(l) + " for K of size " + std::to_string(k));
}

Label full_label(int k)
{
    Label l(k);
    std::iota(l.begin(), l.end(), 0);
    return l;
}

bool is_subset(const Label& a, const Label& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

GridPayoff restrict_payoff(const GridPayoff& y, const Label& l)
{
    GridPayoff out;
    out.reserve(l.size());
    for (int i : l)
        out.push_back(y[i]);
    return out;
}

bool supported_in(const Bary& p, const Label& l)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0 && !std::binary_search(l.begin(), l.end(), static_cast<int>(i)))
            return false;
    return true;
}

}  // namespace

void FiniteCorrespondence::normalize()
{
    check_label(k, domain);
    if (grid.res < 1 || !(grid.a < grid.b))
        throw std::invalid_argument("payoff box must be a nontrivial segment with a positive grid resolution");
    for (const auto& e : points) {
        if (static_cast<int>(e.p.size()) != k)
            throw std::invalid_argument("barycentric point has the wrong length");
        Rational sum = 0;
        for (const auto& c : e.p) {
            if (c < 0)
                throw std::invalid_argument("negative barycentric coordinate");
            sum += c;
        }
        if (sum != 1)
            throw std::invalid_argument("barycentric coordinates do not sum to 1");
        if (!supported_in(e.p, domain))
            throw std::invalid_argument("point is not in the simplex of " + label_string(domain));
        if (e.y.size() != domain.size())
            throw std::invalid_argument("payoff has the wrong length for " + label_string(domain));
        for (int v : e.y)
            if (v < 0 || v > grid.res)
                throw std::invalid_argument("payoff outside the grid");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool FiniteCorrespondence::contains(const Bary& p, const GridPayoff& y) const
{
    return std::binary_search(points.begin(), points.end(), Entry{p, y});
}

std::vector<Bary> preimage(const FiniteCorrespondence& f, const std::vector<double>& y, double eps)
{
    if (y.size() != f.domain.size())
        throw std::invalid_argument("query payoff has the wrong length");
    std::vector<Bary> out;
    for (const auto& e : f.points) {
        bool close = true;
        for (std::size_t i = 0; i < y.size() && close; ++i)
            close = std::abs(f.grid.value(e.y[i]) - y[i]) <= eps + 1e-12;
        if (close && (out.empty() || out.back() != e.p))
            out.push_back(e.p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact hulls

bool in_hull(const std::vector<Bary>& vertices, const Bary& p)
{
    if (vertices.empty())
        return false;
    const std::size_t m = vertices.size();
    const std::size_t rows = p.size() + 1;
    const std::size_t cols = m + rows;           // λ, then artificials
    // Tableau rows: Σ λ_i v_i = p, Σ λ_i = 1; all right-hand sides are nonnegative.
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < m; ++i)
            t[r][i] = r < p.size() ? vertices[i][r] : Rational(1);
        t[r][m + r] = 1;
        t[r][cols] = r < p.size() ? p[r] : Rational(1);
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r)
        basis[r] = m + r;
    // Reduced costs of min Σ artificials.
    std::vector<Rational> z(cols + 1);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t r = 0; r < rows; ++r)
            z[j] -= t[r][j];
    for (std::size_t r = 0; r < rows; ++r)
        z[cols] -= t[r][cols];

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (z[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols)
            break;
        std::size_t leave = rows;
        Rational best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0)
                continue;
            Rational ratio = t[r][cols] / t[r][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == rows)
            break;  // unbounded cannot happen for a bounded phase one
        const Rational piv = t[leave][enter];
        for (auto& v : t[leave])
            v /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0)
                continue;
            const Rational f = t[r][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                t[r][j] -= f * t[leave][j];
        }
        if (z[enter] != 0) {
            const Rational f = z[enter];
            for (std::size_t j = 0; j <= cols; ++j)
                z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return z[cols] == 0;
}

std::vector<Bary> extreme_points(std::vector<Bary> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Bary> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Bary> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i)
                others.push_back(pts[j]);
        if (!in_hull(others, pts[i]))
            out.push_back(pts[i]);
    }
    return out;
}

bool ConvexCorrespondence::contains(const Bary& p, const GridPayoff& y) const
{
    auto it = fibers.find(y);
    return it != fibers.end() && in_hull(it->second, p);
}

ConvexCorrespondence convexify(const FiniteCorrespondence& f)
{
    ConvexCorrespondence c{f.k, f.domain, f.grid, {}};
    std::map<GridPayoff, std::vector<Bary>> raw;
    for (const auto& e : f.points)
        raw[e.y].push_back(e.p);
    for (auto& [y, pts] : raw)
        c.fibers.emplace(y, extreme_points(std::move(pts)));
    return c;
}

ConvexCorrespondence convexify(const ConvexCorrespondence& f)
{
    ConvexCorrespondence c = f;
    for (auto& [y, pts] : c.fibers)
        pts = extreme_points(std::move(pts));
    return c;
}

bool subset(const ConvexCorrespondence& f, const ConvexCorrespondence& g)
{
    for (const auto& [y, pts] : f.fibers)
        for (const auto& p : pts)
            if (!g.contains(p, y))
                return false;
    return true;
}

bool subset(const FiniteCorrespondence& f, const FiniteCorrespondence& g)
{
    return std::includes(g.points.begin(), g.points.end(), f.points.begin(), f.points.end());
}

FiniteCorrespondence saturate(const FiniteCorrespondence& f)
{
    FiniteCorrespondence out = f;
    std::set<FiniteCorrespondence::Entry> all(f.points.begin(), f.points.end());
    const std::size_t n = f.domain.size();
    for (const auto& e : f.points) {
        GridPayoff lo = e.y, hi = e.y;
        for (std::size_t i = 0; i < n; ++i)
            if (e.p[f.domain[i]] == 0)
                hi[i] = f.grid.res;
        GridPayoff y = lo;
        for (;;) {
            all.insert({e.p, y});
            std::size_t i = 0;
            while (i < n && y[i] == hi[i]) {
                y[i] = lo[i];
                ++i;
            }
            if (i == n)
                break;
            ++y[i];
        }
    }
    out.points.assign(all.begin(), all.end());
    return out;
}

bool GridBox::contains(const GridPayoff& y) const
{
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] < lo[i] || y[i] > hi[i])
            return false;
    return true;
}

bool HullCorrespondence::contains(const Bary& p, const GridPayoff& y) const
{
    auto it = fibers.find(y);
    if (it == fibers.end())
        return false;
    for (const auto& hull : it->second) {
        std::vector<Bary> v;
        v.reserve(hull.size());
        for (const auto& g : hull)
            v.push_back(g.p);
        if (in_hull(v, p))
            return true;
    }
    return false;
}

bool GammaResult::hypotheses_hold() const
{
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

bool intersection_closed(const std::vector<Label>& script_l, std::string* detail)
{
    const std::set<Label> members(script_l.begin(), script_l.end());
    for (const auto& a : script_l)
        for (const auto& b : script_l) {
            Label c;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
            if (!c.empty() && !members.count(c)) {
                if (detail)
                    *detail = label_string(a) + " ∩ " + label_string(b) + " = " + label_string(c) + " is not in the family";
                return false;
            }
        }
    return true;
}

namespace {

void check_family(int k, const std::vector<Label>& script_l)
{
    if (k < 1)
        throw std::invalid_argument("K must be nonempty");
    std::vector<bool> covered(k, false);
    for (const auto& l : script_l) {
        check_label(k, l);
        if (static_cast<int>(l.size()) == k)
            throw std::invalid_argument("members of the family must be proper subsets of K");
        for (int i : l)
            covered[i] = true;
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end())
        throw std::invalid_argument("the family does not cover K");
}

const FiniteCorrespondence& lookup(const std::map<Label, FiniteCorrespondence>& f, const Label& l)
{
    auto it = f.find(l);
    if (it == f.end())
        throw std::invalid_argument("missing correspondence for " + label_string(l));
    if (it->second.domain != l)
        throw std::invalid_argument("correspondence stored under " + label_string(l) + " has domain " +
                                    label_string(it->second.domain));
    return it->second;
}

void check_saturated_spanning(const FiniteCorrespondence& f, std::vector<Hypothesis>& hyps)
{
    const std::string name = label_string(f.domain);
    Hypothesis sat{"F_" + name + " saturated", saturate(f) == f, ""};
    if (!sat.holds)
        sat.detail = std::to_string(saturate(f).points.size() - f.points.size()) + " points missing";
    hyps.push_back(sat);
    const auto v = spanning_empirical(f);
    hyps.push_back({"F_" + name + " has property S for its simplex", v.status == SpanStatus::essential,
                    to_string(v.status)});
}

/// Iterates over all y in the box lo..hi of the grid.
template <typename Fn>
void for_each_payoff(const GridPayoff& lo, const GridPayoff& hi, Fn fn)
{
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i])
            return;
    GridPayoff y = lo;
    for (;;) {
        fn(y);
        std::size_t i = 0;
        while (i < y.size() && y[i] == hi[i]) {
            y[i] = lo[i];
            ++i;
        }
        if (i == y.size())
            return;
        ++y[i];
    }
}

/// Generators of F̃_L^{-1}(y) = F_L^{-1}(y restricted to L), tagged with L.
std::vector<Generator> tilde_fiber(const FiniteCorrespondence& f, const GridPayoff& y)
{
    const GridPayoff x = restrict_payoff(y, f.domain);
    std::vector<Generator> out;
    for (const auto& e : f.points)
        if (e.y == x)
            out.push_back({e.p, f.domain});
    return out;
}

}  // namespace

GammaResult gamma_far(const FarInput& in)
{
    check_family(in.k, in.script_l);
    const Label kl = full_label(in.k);
    std::vector<Label> all = in.script_l;
    all.push_back(kl);

    GammaResult out;
    out.gamma.k = in.k;
    out.gamma.grid = in.grid;
    GridBox u{GridPayoff(in.k, 0), GridPayoff(in.k, in.grid.res)};
    for (const auto& l : all) {
        const auto& f = lookup(in.f, l);
        auto uit = in.u.find(l);
        if (uit == in.u.end())
            throw std::invalid_argument("missing convex set U for " + label_string(l));
        const GridBox& ul = uit->second;
        if (static_cast<int>(ul.lo.size()) != in.k || static_cast<int>(ul.hi.size()) != in.k)
            throw std::invalid_argument("U for " + label_string(l) + " must be a box in I^K");
        check_saturated_spanning(f, out.hypotheses);
        out.hypotheses.push_back({"v+ in U_" + label_string(l), ul.contains(GridPayoff(in.k, in.grid.res)), ""});

        Hypothesis inside{"F~_" + label_string(l) + " inside U_" + label_string(l) + " x Delta(K)", true, ""};
        for (int i = 0; i < in.k && inside.holds; ++i)
            if (!std::binary_search(l.begin(), l.end(), i) && (ul.lo[i] > 0 || ul.hi[i] < in.grid.res)) {
                inside.holds = false;
                inside.detail = "U does not contain the free coordinate " + std::to_string(i);
            }
        for (const auto& e : f.points) {
            if (!inside.holds)
                break;
            for (std::size_t j = 0; j < l.size(); ++j)
                if (e.y[j] < ul.lo[l[j]] || e.y[j] > ul.hi[l[j]]) {
                    inside.holds = false;
                    inside.detail = "payoff of a point of F_" + label_string(l) + " leaves U";
                    break;
                }
        }
        out.hypotheses.push_back(inside);
        for (int i = 0; i < in.k; ++i) {
            u.lo[i] = std::max(u.lo[i], ul.lo[i]);
            u.hi[i] = std::min(u.hi[i], ul.hi[i]);
        }
    }

    const auto& fk = lookup(in.f, kl);
    for_each_payoff(u.lo, u.hi, [&](const GridPayoff& y) {
        std::vector<Generator> g;
        for (const auto& l : in.script_l) {
            auto part = tilde_fiber(lookup(in.f, l), y);
            g.insert(g.end(), part.begin(), part.end());
        }
        std::sort(g.begin(), g.end());
        const auto fx = tilde_fiber(fk, y);
        std::vector<std::vector<Generator>> hulls;
        if (!g.empty())
            hulls.push_back(g);
        for (const auto& x : fx) {
            auto h = g;
            h.insert(std::upper_bound(h.begin(), h.end(), x), x);
            hulls.push_back(std::move(h));
        }
        if (!hulls.empty())
            out.gamma.fibers.emplace(y, std::move(hulls));
    });
    return out;
}

std::map<Label, FiniteCorrespondence> induced_family(const CloseInput& in)
{
    check_family(in.k, in.script_l);
    std::set<Label> maximal;
    for (const auto& l : in.script_l) {
        bool is_max = true;
        for (const auto& j : in.script_l)
            if (j != l && is_subset(l, j))
                is_max = false;
        if (is_max)
            maximal.insert(l);
    }
    for (const auto& [l, f] : in.f)
        if (!maximal.count(l))
            throw std::invalid_argument("correspondence given for the non-maximal member " + label_string(l));

    std::map<Label, FiniteCorrespondence> out;
    for (const auto& l : in.script_l) {
        FiniteCorrespondence fl{in.k, l, in.grid, {}};
        for (const auto& j : maximal) {
            if (!is_subset(l, j))
                continue;
            const auto& fj = lookup(in.f, j);
            // Positions of L's coordinates inside J.
            Label pos;
            for (int i : l)
                pos.push_back(static_cast<int>(std::lower_bound(j.begin(), j.end(), i) - j.begin()));
            for (const auto& e : fj.points)
                if (supported_in(e.p, l))
                    fl.points.push_back({e.p, restrict_payoff(e.y, pos)});
        }
        fl.normalize();
        out.emplace(l, std::move(fl));
    }
    return out;
}

GammaResult gamma_close(const CloseInput& in)
{
    GammaResult out;
    out.gamma.k = in.k;
    out.gamma.grid = in.grid;
    const auto fam = induced_family(in);
    std::string detail;
    out.hypotheses.push_back({"family intersection-closed", intersection_closed(in.script_l, &detail), detail});
    for (const auto& [l, f] : in.f)
        check_saturated_spanning(f, out.hypotheses);

    for_each_payoff(GridPayoff(in.k, 0), GridPayoff(in.k, in.grid.res), [&](const GridPayoff& y) {
        std::vector<Generator> shared;
        std::vector<std::vector<Generator>> choices;   // one list per maximal label with a nonempty fiber
        for (const auto& [l, f] : fam) {
            auto part = tilde_fiber(f, y);
            if (part.empty())
                continue;
            if (in.f.count(l))
                choices.push_back(std::move(part));
            else
                shared.insert(shared.end(), part.begin(), part.end());
        }
        if (shared.empty() && choices.empty())
            return;
        std::vector<std::vector<Generator>> hulls;
        std::vector<std::size_t> pick(choices.size(), 0);
        for (;;) {
            auto h = shared;
            for (std::size_t c = 0; c < choices.size(); ++c)
                h.push_back(choices[c][pick[c]]);
            std::sort(h.begin(), h.end());
            hulls.push_back(std::move(h));
            std::size_t c = 0;
            while (c < choices.size() && pick[c] + 1 == choices[c].size()) {
                pick[c] = 0;
                ++c;
            }
            if (c == choices.size())
                break;
            ++pick[c];
        }
        out.gamma.fibers.emplace(y, std::move(hulls));
    });
    return out;
}

// ---------------------------------------------------------------------------
// Footprint

std::vector<std::vector<int>> simplex_lattice(int k, int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> q(k, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == k - 1) {
            q[i] = left;
            out.push_back(q);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            q[i] = v;
            self(self, i + 1, left - v);
        }
    };
    if (k > 0)
        rec(rec, 0, n);
    return out;
}

namespace {

/// Freudenthal simplices of the induced subcomplex on `present` (ids of integer points),
/// reported as chains that cannot be extended at the top.
template <typename Lookup, typename Emit>
bool freudenthal_chains(const std::vector<std::vector<int>>& coords, Lookup id_of, Emit emit, std::size_t cap)
{
    std::size_t emitted = 0;
    for (std::size_t v = 0; v < coords.size(); ++v) {
        const std::size_t d = coords[v].size();
        std::vector<int> chain{static_cast<int>(v)};
        std::vector<int> pt = coords[v];
        auto rec = [&](auto&& self, unsigned used) -> bool {
            bool extended = false;
            const unsigned all = (1u << d) - 1;
            const unsigned free = all & ~used;
            for (unsigned t = free; t; t = (t - 1) & free) {
                for (std::size_t i = 0; i < d; ++i)
                    if (t >> i & 1)
                        ++pt[i];
                const int w = id_of(pt);
                if (w >= 0) {
                    extended = true;
                    chain.push_back(w);
                    if (!self(self, used | t))
                        return false;
                    chain.pop_back();
                }
                for (std::size_t i = 0; i < d; ++i)
                    if (t >> i & 1)
                        --pt[i];
            }
            if (!extended) {
                if (++emitted > cap)
                    return false;
                emit(chain);
            }
            return true;
        };
        if (!rec(rec, 0))
            return false;
    }
    return true;
}

std::vector<int> partial_sums(const std::vector<int>& q)
{
    std::vector<int> c;
    int s = 0;
    for (std::size_t j = 0; j + 1 < q.size(); ++j)
        c.push_back(s += q[j]);
    return c;
}

std::vector<std::vector<bool>> boundary_mask(const SimplicialPair& p, const std::vector<std::vector<int>>& lattice_of)
{
    std::vector<std::vector<bool>> mask(p.dimension() + 1);
    for (int d = 0; d <= p.dimension(); ++d) {
        mask[d].assign(p.count(d), false);
        for (std::size_t i = 0; i < p.count(d); ++i) {
            const auto& s = p.simplex(d, i);
            const std::size_t k = lattice_of[s[0]].size();
            for (std::size_t j = 0; j < k && !mask[d][i]; ++j)
                mask[d][i] = std::all_of(s.begin(), s.end(), [&](int v) { return lattice_of[v][j] == 0; });
        }
    }
    return mask;
}

long long denominator_lcm(const HullCorrespondence& g, long long cap)
{
    long long n = 1;
    for (const auto& [y, hulls] : g.fibers)
        for (const auto& h : hulls)
            for (const auto& gen : h)
                for (const auto& c : gen.p) {
                    const auto den = boost::multiprecision::denominator(c);
                    if (den > cap)
                        return cap + 1;
                    n = std::lcm(n, den.convert_to<long long>());
                    if (n > cap)
                        return cap + 1;
                }
    return n;
}

}  // namespace

EmpiricalVerdict spanning_empirical(const HullCorrespondence& g, FootprintOptions opt)
{
    constexpr long long max_lattice = 64;
    EmpiricalVerdict v;
    const int k = g.k;
    long long n = opt.lattice_res > 0 ? opt.lattice_res : denominator_lcm(g, max_lattice);
    if (n > max_lattice) {
        v.status = SpanStatus::inconclusive;
        v.note += "; lattice resolution above " + std::to_string(max_lattice);
        return v;
    }
    v.lattice_res = static_cast<int>(n);
    const auto lattice = simplex_lattice(k, v.lattice_res);

    // Base triangulation of Δ(K).
    std::map<std::vector<int>, int> base_id;
    std::vector<std::vector<int>> base_coords;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        base_id.emplace(partial_sums(lattice[i]), static_cast<int>(i));
        base_coords.push_back(partial_sums(lattice[i]));
    }
    std::vector<Simplex> base_simplices;
    freudenthal_chains(
        base_coords,
        [&](const std::vector<int>& c) {
            auto it = base_id.find(c);
            return it == base_id.end() ? -1 : it->second;
        },
        [&](const std::vector<int>& ch) { base_simplices.emplace_back(ch.begin(), ch.end()); }, SIZE_MAX);
    for (auto& s : base_simplices)
        std::sort(s.begin(), s.end());
    SimplicialPair base = SimplicialPair::build(static_cast<int>(lattice.size()), base_simplices);
    base = base.with_sub(boundary_mask(base, lattice));

    // Footprint vertices.
    std::vector<std::vector<int>> coords;
    std::vector<int> base_of;
    std::map<std::vector<int>, int> id;
    for (const auto& [y, hulls] : g.fibers)
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            Bary p(k);
            for (int j = 0; j < k; ++j)
                p[j] = Rational(lattice[i][j], v.lattice_res);
            if (!g.contains(p, y))
                continue;
            auto c = partial_sums(lattice[i]);
            c.insert(c.end(), y.begin(), y.end());
            id.emplace(c, static_cast<int>(coords.size()));
            coords.push_back(std::move(c));
            base_of.push_back(static_cast<int>(i));
        }
    v.footprint_vertices = coords.size();
    if (coords.empty()) {
        v.detail.degree = k - 1;
        v.detail.target_rank = DegreeHomology(base, k - 1).rank();
        v.detail.refutation = "footprint is empty";
        return v;
    }

    std::vector<Simplex> simplices;
    const bool complete = freudenthal_chains(
        coords,
        [&](const std::vector<int>& c) {
            auto it = id.find(c);
            return it == id.end() ? -1 : it->second;
        },
        [&](const std::vector<int>& ch) { simplices.emplace_back(ch.begin(), ch.end()); }, opt.max_simplices);
    if (!complete) {
        v.status = SpanStatus::inconclusive;
        v.note += "; footprint exceeds " + std::to_string(opt.max_simplices) + " simplices";
        return v;
    }
    // Footprint ids follow the lexicographic order of coordinates only within a fiber; sort each chain.
    for (auto& s : simplices)
        std::sort(s.begin(), s.end());
    SimplicialPair fp = SimplicialPair::build(static_cast<int>(coords.size()), simplices);
    std::vector<std::vector<int>> lattice_of(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        lattice_of[i] = lattice[base_of[i]];
    fp = fp.with_sub(boundary_mask(fp, lattice_of));
    v.footprint_simplices = 0;
    for (int d = 0; d <= fp.dimension(); ++d)
        v.footprint_simplices += fp.count(d);

    v.detail = is_h_essential(SimplicialMap(fp, base, base_of), k - 1);
    v.status = v.detail.essential ? SpanStatus::essential : SpanStatus::not_essential;
    return v;
}

EmpiricalVerdict spanning_empirical(const FiniteCorrespondence& f, FootprintOptions opt)
{
    // Work on Δ(L) itself: coordinates restricted to L.
    HullCorrespondence g;
    g.k = static_cast<int>(f.domain.size());
    g.grid = f.grid;
    for (const auto& e : f.points) {
        Bary p;
        for (int i : f.domain)
            p.push_back(e.p[i]);
        g.fibers[e.y].push_back({Generator{p, f.domain}});
    }
    return spanning_empirical(g, opt);
}

}  // namespace pbu::corr
