#include "pbu/sym_square.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace pbu {

namespace {

Simplex unique_sorted(Simplex s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool is_maximal(const SimplicialPair& p, int k, std::size_t i)
{
    return k == p.dimension() || p.cofaces(k, i).empty();
}

}  // namespace

// ---------------------------------------------------------------------------
// Product

std::vector<Simplex> staircase_cells(const Simplex& a, const Simplex& b, int right_vertex_count)
{
    std::vector<Simplex> out;
    Simplex path;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
        path.push_back(a[i] * right_vertex_count + b[j]);
        if (i + 1 == a.size() && j + 1 == b.size())
            out.push_back(path);
        if (i + 1 < a.size())
            walk(i + 1, j);
        if (j + 1 < b.size())
            walk(i, j + 1);
        path.pop_back();
    };
    walk(0, 0);
    return out;
}

CellRef ProductComplex::left_cell(int k, std::size_t i) const
{
    Simplex s;
    for (int w : pair.simplex(k, i))
        s.push_back(coordinates(w).first);
    s = unique_sorted(std::move(s));
    return {static_cast<int>(s.size()) - 1, *left.index_of(s)};
}

CellRef ProductComplex::right_cell(int k, std::size_t i) const
{
    Simplex s;
    for (int w : pair.simplex(k, i))
        s.push_back(coordinates(w).second);
    s = unique_sorted(std::move(s));
    return {static_cast<int>(s.size()) - 1, *right.index_of(s)};
}

Chain ProductComplex::product_cells(CellRef a, CellRef b) const
{
    Chain out;
    for (const auto& s : staircase_cells(left.simplex(a.dim, a.index), right.simplex(b.dim, b.index),
                                         right.vertex_count()))
        out.push_back(*pair.index_of(s));
    std::sort(out.begin(), out.end());
    return out;
}

ProductComplex product_triangulation(const SimplicialPair& p, const SimplicialPair& q)
{
    ProductComplex pc{p, q, {}};
    std::vector<Simplex> cells;
    for (int a = 0; a <= p.dimension(); ++a)
        for (std::size_t i = 0; i < p.count(a); ++i) {
            if (!is_maximal(p, a, i))
                continue;
            for (int b = 0; b <= q.dimension(); ++b)
                for (std::size_t j = 0; j < q.count(b); ++j)
                    if (is_maximal(q, b, j))
                        for (auto& s : staircase_cells(p.simplex(a, i), q.simplex(b, j), q.vertex_count()))
                            cells.push_back(std::move(s));
        }
    const SimplicialPair bare = SimplicialPair::build(p.vertex_count() * q.vertex_count(), cells);
    pc.pair = bare;
    Mask sub = empty_mask(bare);
    for (int k = 0; k <= bare.dimension(); ++k)
        for (std::size_t i = 0; i < bare.count(k); ++i) {
            const CellRef l = pc.left_cell(k, i);
            const CellRef r = pc.right_cell(k, i);
            sub[k][i] = p.in_sub(l.dim, l.index) || q.in_sub(r.dim, r.index);
        }
    pc.pair = bare.with_sub(std::move(sub));
    return pc;
}

// ---------------------------------------------------------------------------
// Symmetric square model

CellRef SymSquareModel::carrier(CellRef c, int target_level) const
{
    for (int j = level; j > target_level; --j)
        c = refinements[j - 1].carrier[c.dim][c.index];
    return c;
}

Chain SymSquareModel::subdivide_from_base(int k, const Chain& chain) const
{
    Chain c = chain;
    for (const auto& sd : refinements)
        c = sd.subdivide_chain(k, c);
    return c;
}

std::size_t SymSquareModel::flag_image(int dim, std::size_t cell) const
{
    const Simplex& s = product.pair.simplex(dim, cell);
    Simplex flag;
    Simplex prefix;
    for (int v : s) {
        prefix.push_back(v);
        const int d = static_cast<int>(prefix.size()) - 1;
        flag.push_back(flags.vertex_of({d, *product.pair.index_of(prefix)}));
    }
    std::sort(flag.begin(), flag.end());
    return quotient.image[dim][*flags.pair.index_of(flag)];
}

SimplicialPair SymSquareModel::with_neighborhood(const Mask& u) const
{
    Mask m = sub_mask_of(pair);
    for (std::size_t k = 0; k < m.size(); ++k)
        for (std::size_t i = 0; i < m[k].size(); ++i)
            m[k][i] = m[k][i] || u[k][i];
    return pair.with_sub(std::move(m));
}

SymSquareModel sym_square_space(const SimplicialPair& p, int level)
{
    if (level < 0)
        throw TopologyError("negative subdivision level");
    SymSquareModel m;
    m.level = level;
    m.levels.push_back(p);
    for (int j = 0; j < level; ++j) {
        m.refinements.push_back(barycentric_subdivision(m.levels.back()));
        m.levels.push_back(m.refinements.back().pair);
    }
    const SimplicialPair& x = m.base();

    m.product = product_triangulation(x, x);
    const SimplicialPair& prod = m.product.pair;
    m.swap.resize(prod.dimension() + 1);
    Mask sub = sub_mask_of(prod);
    for (int k = 0; k <= prod.dimension(); ++k)
        for (std::size_t i = 0; i < prod.count(k); ++i) {
            Simplex t;
            for (int w : prod.simplex(k, i)) {
                auto [u, v] = m.product.coordinates(w);
                t.push_back(m.product.vertex(v, u));
            }
            std::sort(t.begin(), t.end());
            const std::size_t j = *prod.index_of(t);
            m.swap[k].push_back(j);
            if (j == i)
                sub[k][i] = true;
        }
    m.product.pair = prod.with_sub(std::move(sub));

    m.flags = barycentric_subdivision(m.product.pair);
    std::vector<int> involution(m.flags.pair.vertex_count());
    for (int v = 0; v < m.flags.pair.vertex_count(); ++v) {
        const CellRef c = m.flags.vertex_origin[v];
        involution[v] = m.flags.vertex_of({c.dim, m.swap[c.dim][c.index]});
    }
    m.quotient = quotient_by_involution(m.flags.pair, involution);
    m.pair = m.quotient.pair;

    const int qd = m.pair.dimension();
    m.diag = empty_mask(m.pair);
    m.proj.resize(qd + 1);
    std::vector<std::vector<bool>> seen(qd + 1);
    for (int k = 0; k <= qd; ++k) {
        m.proj[k].resize(m.pair.count(k));
        seen[k].assign(m.pair.count(k), false);
    }
    for (int k = 0; k <= m.flags.pair.dimension(); ++k)
        for (std::size_t i = 0; i < m.flags.pair.count(k); ++i) {
            const std::size_t q = m.quotient.image[k][i];
            if (seen[k][q])
                continue;
            seen[k][q] = true;
            const CellRef top = m.flags.carrier[k][i];
            CellRef a = m.product.left_cell(top.dim, top.index);
            CellRef b = m.product.right_cell(top.dim, top.index);
            if (b < a)
                std::swap(a, b);
            m.proj[k][q] = {a, b};
            m.diag[k][q] = m.swap[top.dim][top.index] == top.index;
        }
    return m;
}

// ---------------------------------------------------------------------------
// Neighborhoods and smallness

Mask carrier_neighborhood(const SymSquareModel& m, int scale)
{
    if (scale < 0 || scale > m.level)
        throw TopologyError("neighborhood scale " + std::to_string(scale) + " outside [0, " +
                            std::to_string(m.level) + "]");
    const SimplicialPair& xs = m.levels[scale];
    std::vector<std::vector<int>> adjacent(xs.vertex_count());
    if (xs.dimension() >= 1)
        for (const auto& e : xs.simplices(1)) {
            adjacent[e[0]].push_back(e[1]);
            adjacent[e[1]].push_back(e[0]);
        }
    auto joins = [&](const Simplex& s, int x) {
        if (std::binary_search(s.begin(), s.end(), x))
            return true;
        Simplex t = s;
        t.insert(std::lower_bound(t.begin(), t.end(), x), x);
        return xs.index_of(t).has_value();
    };
    auto common_star = [&](CellRef a, CellRef b) {
        const Simplex& sa = xs.simplex(a.dim, a.index);
        const Simplex& sb = xs.simplex(b.dim, b.index);
        std::vector<int> candidates = adjacent[sa[0]];
        candidates.push_back(sa[0]);
        for (int x : candidates)
            if (joins(sa, x) && joins(sb, x))
                return true;
        return false;
    };

    Mask u = empty_mask(m.pair);
    for (int k = 0; k <= m.pair.dimension(); ++k)
        for (std::size_t i = 0; i < m.pair.count(k); ++i) {
            const auto& [a, b] = m.proj[k][i];
            u[k][i] = common_star(m.carrier(a, scale), m.carrier(b, scale));
        }
    return u;
}

Mask whole_neighborhood(const SymSquareModel& m) { return full_mask(m.pair); }

Mask diagonal_neighborhood(const SymSquareModel& m) { return m.diag; }

bool check_smallness(const SymSquareModel& m, int k, const Chain& chain, const Mask& u)
{
    const SimplicialPair& x = m.base();
    for (std::size_t a = 0; a < chain.size(); ++a)
        for (std::size_t b = a; b < chain.size(); ++b) {
            const Simplex& sa = x.simplex(k, chain[a]);
            const Simplex& sb = x.simplex(k, chain[b]);
            bool meet = false;
            for (int v : sa)
                meet = meet || std::binary_search(sb.begin(), sb.end(), v);
            if (!meet)
                continue;
            for (auto c : m.product.product_cells({k, chain[a]}, {k, chain[b]}))
                if (!u[2 * k][m.flag_image(2 * k, c)])
                    return false;
        }
    return true;
}

Chain sym_square_chain(const SymSquareModel& m, int k, const Chain& chain)
{
    Chain cells;
    for (std::size_t a = 0; a < chain.size(); ++a)
        for (std::size_t b = a + 1; b < chain.size(); ++b)
            for (auto c : m.product.product_cells({k, chain[a]}, {k, chain[b]}))
                cells.push_back(c);
    std::sort(cells.begin(), cells.end());
    std::vector<std::size_t> raw;
    for (auto f : m.flags.subdivide_chain(2 * k, cells))
        raw.push_back(m.quotient.image[2 * k][f]);
    return chain_normalize(std::move(raw));
}

SquaredClass sym_square_class(const SimplicialPair& p, const HomologyClass& alpha, const SymSquareOptions& opt)
{
    if (alpha.home != p.fingerprint())
        throw TopologyError("class does not live on this pair");
    const int k = alpha.degree;
    if (!DegreeHomology(p, k).is_relative_cycle(alpha.chain))
        throw TopologyError("representative is not a relative cycle");
    const int first = opt.kind == NeighborhoodKind::carrier ? opt.scale : 0;
    for (int extra = 0; extra <= opt.max_subdivisions; ++extra) {
        SymSquareModel m = sym_square_space(p, first + extra);
        Mask u;
        switch (opt.kind) {
        case NeighborhoodKind::carrier: u = carrier_neighborhood(m, opt.scale); break;
        case NeighborhoodKind::whole: u = whole_neighborhood(m); break;
        case NeighborhoodKind::diagonal: u = diagonal_neighborhood(m); break;
        }
        const Chain rep = m.subdivide_from_base(k, alpha.chain);
        if (!check_smallness(m, k, rep, u))
            continue;
        SimplicialPair target = m.with_neighborhood(u);
        Chain sq = sym_square_chain(m, k, rep);
        if (!DegreeHomology(target, 2 * k).is_relative_cycle(sq))
            throw TopologyError("squared chain is not a relative cycle");
        sq = target.drop_sub(2 * k, sq);
        HomologyClass cls{2 * k, std::move(sq), target.fingerprint()};
        return {std::move(m), std::move(u), std::move(target), std::move(cls), extra};
    }
    throw TopologyError("representative is not small after the subdivision cap of " +
                        std::to_string(opt.max_subdivisions));
}

// ---------------------------------------------------------------------------
// Induced maps

std::vector<int> subdivided_vertex_map(const SimplicialMap& f, const SymSquareModel& mx, const SymSquareModel& my)
{
    if (mx.level != my.level)
        throw TopologyError("models are at different levels");
    if (!(f.source() == mx.levels[0]) || !(f.target() == my.levels[0]))
        throw TopologyError("map does not match the models");
    SimplicialMap g = f;
    for (int j = 0; j < mx.level; ++j) {
        const Subdivision& sx = mx.refinements[j];
        const Subdivision& sy = my.refinements[j];
        std::vector<int> v(sx.pair.vertex_count());
        for (int w = 0; w < sx.pair.vertex_count(); ++w) {
            const CellRef c = sx.vertex_origin[w];
            v[w] = sy.vertex_of(g.image(c.dim, c.index));
        }
        g = SimplicialMap(sx.pair, sy.pair, std::move(v));
    }
    return g.vertex_map();
}

std::vector<int> sym_vertex_map(const SimplicialMap& f, const SymSquareModel& mx, const SymSquareModel& my)
{
    const std::vector<int> fn = subdivided_vertex_map(f, mx, my);
    const SimplicialPair& px = mx.product.pair;
    const SimplicialPair& py = my.product.pair;

    // Product cell -> image product cell.
    std::vector<std::vector<CellRef>> cell_image(px.dimension() + 1);
    for (int k = 0; k <= px.dimension(); ++k)
        for (const auto& s : px.simplices(k)) {
            Simplex img;
            for (int w : s) {
                auto [u, v] = mx.product.coordinates(w);
                img.push_back(my.product.vertex(fn[u], fn[v]));
            }
            img = unique_sorted(std::move(img));
            auto idx = py.index_of(img);
            if (!idx)
                throw TopologyError("f x f does not preserve the staircase; use a subdivision level >= 1");
            cell_image[k].push_back({static_cast<int>(img.size()) - 1, *idx});
        }

    std::vector<int> out(mx.pair.vertex_count(), -1);
    for (int w = 0; w < mx.flags.pair.vertex_count(); ++w) {
        const int q = mx.quotient.vertex_class[w];
        if (out[q] >= 0)
            continue;
        const CellRef c = mx.flags.vertex_origin[w];
        out[q] = my.quotient.vertex_class[my.flags.vertex_of(cell_image[c.dim][c.index])];
    }
    return out;
}

SimplicialMap induced_sym_map(const SimplicialMap& f, const SymSquareModel& mx, const SymSquareModel& my)
{
    return SimplicialMap(mx.pair, my.pair, sym_vertex_map(f, mx, my));
}

}  // namespace pbu
