#include "pbu/simplicial_pair.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace pbu {

namespace {

std::string describe(const Simplex& s)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v)
{
    // splitmix64 finalizer folded into FNV-style accumulation
    v += 0x9e3779b97f4a7c15ULL;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
    v ^= v >> 31;
    return (h ^ v) * 0x100000001b3ULL;
}

void add_all_faces(const Simplex& s, std::vector<std::set<Simplex>>& by_dim)
{
    const int d = static_cast<int>(s.size()) - 1;
    if (static_cast<int>(by_dim.size()) <= d)
        by_dim.resize(d + 1);
    if (!by_dim[d].insert(s).second)
        return;
    if (d == 0)
        return;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        f.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != drop)
                f.push_back(s[j]);
        add_all_faces(f, by_dim);
    }
}

}  // namespace

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int v : s)
        h = mix(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)));
    return static_cast<std::size_t>(h);
}

Chain chain_add(const Chain& a, const Chain& b)
{
    Chain out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Chain chain_normalize(std::vector<std::size_t> raw)
{
    std::sort(raw.begin(), raw.end());
    Chain out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size();) {
        std::size_t j = i;
        while (j < raw.size() && raw[j] == raw[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(raw[i]);
        i = j;
    }
    return out;
}

SimplicialPair::SimplicialPair() : data_(assemble({}, {})) {}

std::shared_ptr<SimplicialPair::Data> SimplicialPair::assemble(std::vector<std::vector<Simplex>> by_dim,
                                                               std::vector<std::vector<bool>> sub)
{
    auto d = std::make_shared<Data>();
    while (!by_dim.empty() && by_dim.back().empty())
        by_dim.pop_back();
    sub.resize(by_dim.size());
    d->simplices = std::move(by_dim);
    d->sub = std::move(sub);
    d->index.resize(d->simplices.size());
    d->relative_list.resize(d->simplices.size());
    d->relative_pos.resize(d->simplices.size());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t k = 0; k < d->simplices.size(); ++k) {
        const auto& list = d->simplices[k];
        d->sub[k].resize(list.size(), false);
        d->index[k].reserve(list.size() * 2);
        d->relative_pos[k].assign(list.size(), -1);
        for (std::size_t i = 0; i < list.size(); ++i) {
            d->index[k].emplace(list[i], i);
            if (!d->sub[k][i]) {
                d->relative_pos[k][i] = static_cast<std::ptrdiff_t>(d->relative_list[k].size());
                d->relative_list[k].push_back(i);
            }
            h = mix(h, k);
            for (int v : list[i])
                h = mix(h, static_cast<std::uint64_t>(v));
            h = mix(h, d->sub[k][i] ? 0xabcdULL : 0x1234ULL);
        }
    }
    d->fingerprint = h;
    d->cofaces.resize(d->simplices.size());
    for (std::size_t k = 0; k < d->simplices.size(); ++k)
        d->cofaces[k].resize(d->simplices[k].size());
    for (std::size_t k = 1; k < d->simplices.size(); ++k)
        for (std::size_t i = 0; i < d->simplices[k].size(); ++i) {
            const Simplex& s = d->simplices[k][i];
            Simplex f(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != drop)
                        f[w++] = s[j];
                d->cofaces[k - 1][d->index[k - 1].at(f)].push_back(i);
            }
        }
    return d;
}

SimplicialPair SimplicialPair::build(int vertex_count, const std::vector<Simplex>& simplices,
                                     const std::vector<Simplex>& sub)
{
    if (vertex_count < 0)
        throw TopologyError("negative vertex count");

    auto canonical = [&](const Simplex& raw, const char* what) {
        if (raw.empty())
            throw TopologyError(std::string("empty ") + what + " simplex");
        Simplex s = raw;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= vertex_count)
                throw TopologyError(std::string(what) + " simplex " + describe(raw) + " uses vertex out of range");
            if (i > 0 && s[i] == s[i - 1])
                throw TopologyError(std::string(what) + " simplex " + describe(raw) + " repeats a vertex");
        }
        return s;
    };

    std::set<Simplex> seen;
    std::vector<std::set<Simplex>> by_dim(1);
    for (int v = 0; v < vertex_count; ++v)
        by_dim[0].insert(Simplex{v});
    for (const auto& raw : simplices) {
        Simplex s = canonical(raw, "input");
        if (!seen.insert(s).second)
            throw TopologyError("duplicate simplex " + describe(s) + " (input " + describe(raw) + ")");
        add_all_faces(s, by_dim);
    }

    std::vector<std::set<Simplex>> sub_by_dim;
    for (const auto& raw : sub) {
        Simplex s = canonical(raw, "sub");
        const auto d = s.size() - 1;
        if (d >= by_dim.size() || !by_dim[d].count(s))
            throw TopologyError("sub simplex " + describe(s) + " is not contained in the complex");
        add_all_faces(s, sub_by_dim);
    }

    std::vector<std::vector<Simplex>> lists(by_dim.size());
    std::vector<std::vector<bool>> mask(by_dim.size());
    for (std::size_t k = 0; k < by_dim.size(); ++k) {
        lists[k].assign(by_dim[k].begin(), by_dim[k].end());
        mask[k].resize(lists[k].size(), false);
        if (k < sub_by_dim.size())
            for (std::size_t i = 0; i < lists[k].size(); ++i)
                mask[k][i] = sub_by_dim[k].count(lists[k][i]) > 0;
    }
    SimplicialPair p;
    p.data_ = assemble(std::move(lists), std::move(mask));
    return p;
}

SimplicialPair SimplicialPair::with_sub(std::vector<std::vector<bool>> mask) const
{
    mask.resize(data_->simplices.size());
    for (std::size_t k = 0; k < mask.size(); ++k)
        mask[k].resize(count(static_cast<int>(k)), false);
    if (!mask_is_face_closed(*this, mask))
        throw TopologyError("subcomplex mask is not face-closed");
    SimplicialPair p;
    p.data_ = assemble(data_->simplices, std::move(mask));
    return p;
}

std::size_t SimplicialPair::count(int k) const
{
    if (k < 0 || k >= static_cast<int>(data_->simplices.size()))
        return 0;
    return data_->simplices[k].size();
}

std::size_t SimplicialPair::total_count() const
{
    std::size_t n = 0;
    for (const auto& l : data_->simplices)
        n += l.size();
    return n;
}

const std::vector<Simplex>& SimplicialPair::simplices(int k) const
{
    static const std::vector<Simplex> empty;
    if (k < 0 || k >= static_cast<int>(data_->simplices.size()))
        return empty;
    return data_->simplices[k];
}

std::optional<std::size_t> SimplicialPair::index_of(const Simplex& s) const
{
    const int k = static_cast<int>(s.size()) - 1;
    if (k < 0 || k >= static_cast<int>(data_->index.size()))
        return std::nullopt;
    auto it = data_->index[k].find(s);
    if (it == data_->index[k].end())
        return std::nullopt;
    return it->second;
}

const std::vector<bool>& SimplicialPair::sub_mask(int k) const
{
    static const std::vector<bool> empty;
    if (k < 0 || k >= static_cast<int>(data_->sub.size()))
        return empty;
    return data_->sub[k];
}

std::size_t SimplicialPair::sub_count(int k) const
{
    return count(k) - relative_count(k);
}

bool SimplicialPair::sub_empty() const
{
    for (int k = 0; k <= dimension(); ++k)
        if (sub_count(k) > 0)
            return false;
    return true;
}

std::vector<std::size_t> SimplicialPair::faces(int k, std::size_t i) const
{
    std::vector<std::size_t> out;
    if (k <= 0)
        return out;
    const Simplex& s = data_->simplices[k][i];
    out.reserve(s.size());
    Simplex f(s.size() - 1);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != drop)
                f[w++] = s[j];
        out.push_back(data_->index[k - 1].at(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<std::size_t>& SimplicialPair::cofaces(int k, std::size_t i) const
{
    return data_->cofaces[k][i];
}

std::size_t SimplicialPair::relative_count(int k) const
{
    if (k < 0 || k >= static_cast<int>(data_->relative_list.size()))
        return 0;
    return data_->relative_list[k].size();
}

std::optional<std::size_t> SimplicialPair::relative_index(int k, std::size_t i) const
{
    const auto pos = data_->relative_pos[k][i];
    if (pos < 0)
        return std::nullopt;
    return static_cast<std::size_t>(pos);
}

const std::vector<std::size_t>& SimplicialPair::relative_simplices(int k) const
{
    static const std::vector<std::size_t> empty;
    if (k < 0 || k >= static_cast<int>(data_->relative_list.size()))
        return empty;
    return data_->relative_list[k];
}

Chain SimplicialPair::boundary(int k, const Chain& chain) const
{
    std::vector<std::size_t> raw;
    raw.reserve(chain.size() * (k + 1));
    for (auto i : chain)
        for (auto f : faces(k, i))
            raw.push_back(f);
    return chain_normalize(std::move(raw));
}

Chain SimplicialPair::drop_sub(int k, const Chain& chain) const
{
    Chain out;
    for (auto i : chain)
        if (!in_sub(k, i))
            out.push_back(i);
    return out;
}

long long SimplicialPair::relative_euler_characteristic() const
{
    long long chi = 0;
    for (int k = 0; k <= dimension(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(relative_count(k));
    return chi;
}

bool SimplicialPair::operator==(const SimplicialPair& other) const
{
    return data_->simplices == other.data_->simplices && data_->sub == other.data_->sub;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<bool>> full_mask(const SimplicialPair& p)
{
    std::vector<std::vector<bool>> m(p.dimension() + 1);
    for (int k = 0; k <= p.dimension(); ++k)
        m[k].assign(p.count(k), true);
    return m;
}

std::vector<std::vector<bool>> empty_mask(const SimplicialPair& p)
{
    std::vector<std::vector<bool>> m(p.dimension() + 1);
    for (int k = 0; k <= p.dimension(); ++k)
        m[k].assign(p.count(k), false);
    return m;
}

std::vector<std::vector<bool>> sub_mask_of(const SimplicialPair& p)
{
    std::vector<std::vector<bool>> m(p.dimension() + 1);
    for (int k = 0; k <= p.dimension(); ++k)
        m[k] = p.sub_mask(k);
    return m;
}

bool mask_is_face_closed(const SimplicialPair& p, const std::vector<std::vector<bool>>& mask)
{
    for (int k = 1; k <= p.dimension() && k < static_cast<int>(mask.size()); ++k)
        for (std::size_t i = 0; i < p.count(k); ++i)
            if (mask[k][i])
                for (auto f : p.faces(k, i))
                    if (!mask[k - 1][f])
                        return false;
    return true;
}

std::vector<std::vector<bool>> closure_mask(const SimplicialPair& p, const std::vector<CellRef>& cells)
{
    auto m = empty_mask(p);
    for (const auto& c : cells)
        m[c.dim][c.index] = true;
    for (int k = p.dimension(); k >= 1; --k)
        for (std::size_t i = 0; i < p.count(k); ++i)
            if (m[k][i])
                for (auto f : p.faces(k, i))
                    m[k - 1][f] = true;
    return m;
}

Subpair extract_subpair(const SimplicialPair& ambient, const std::vector<std::vector<bool>>& y_mask,
                        const std::vector<std::vector<bool>>& b_mask)
{
    if (!mask_is_face_closed(ambient, y_mask))
        throw TopologyError("Y is not a subcomplex");
    if (!mask_is_face_closed(ambient, b_mask))
        throw TopologyError("B is not a subcomplex");
    Subpair out;
    std::vector<int> new_vertex(ambient.count(0), -1);
    for (std::size_t v = 0; v < ambient.count(0); ++v)
        if (y_mask[0][v]) {
            new_vertex[v] = static_cast<int>(out.vertex_origin.size());
            out.vertex_origin.push_back(static_cast<int>(v));
        }
    std::vector<Simplex> simplices;
    std::vector<Simplex> sub;
    for (int k = 0; k <= ambient.dimension(); ++k)
        for (std::size_t i = 0; i < ambient.count(k); ++i) {
            if (!y_mask[k][i])
                continue;
            Simplex s;
            for (int v : ambient.simplex(k, i))
                s.push_back(new_vertex[v]);
            if (b_mask[k][i])
                sub.push_back(s);
            if (k > 0)
                simplices.push_back(std::move(s));
        }
    out.pair = SimplicialPair::build(static_cast<int>(out.vertex_origin.size()), simplices, sub);
    // Order-preserving relabeling keeps lexicographic order, so origins are the masked indices.
    out.origin.resize(out.pair.dimension() + 1);
    for (int k = 0; k <= out.pair.dimension(); ++k)
        for (std::size_t i = 0; i < ambient.count(k); ++i)
            if (y_mask[k][i])
                out.origin[k].push_back(i);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void collect_flags(const SimplicialPair& p, int k, std::size_t i, std::vector<CellRef>& stack,
                   const std::function<void(const std::vector<CellRef>&)>& emit)
{
    stack.push_back({k, i});
    emit(stack);
    const Simplex& s = p.simplex(k, i);
    const unsigned n = static_cast<unsigned>(s.size());
    // Every nonempty proper face, as a vertex subset.
    for (unsigned bits = 1; bits + 1 < (1u << n); ++bits) {
        Simplex f;
        for (unsigned j = 0; j < n; ++j)
            if (bits & (1u << j))
                f.push_back(s[j]);
        collect_flags(p, static_cast<int>(f.size()) - 1, *p.index_of(f), stack, emit);
    }
    stack.pop_back();
}

}  // namespace

Subdivision barycentric_subdivision(const SimplicialPair& p)
{
    Subdivision sd;
    const int dim = p.dimension();
    sd.vertex_offset.assign(dim + 2, 0);
    for (int k = 0; k <= dim; ++k)
        sd.vertex_offset[k + 1] = sd.vertex_offset[k] + p.count(k);
    for (int k = 0; k <= dim; ++k)
        for (std::size_t i = 0; i < p.count(k); ++i)
            sd.vertex_origin.push_back({k, i});

    std::vector<Simplex> simplices;
    std::vector<Simplex> sub;
    std::vector<CellRef> stack;
    for (int k = 0; k <= dim; ++k)
        for (std::size_t i = 0; i < p.count(k); ++i) {
            // Flags whose largest cell is (k, i); stack holds cells from large to small.
            collect_flags(p, k, i, stack, [&](const std::vector<CellRef>& flag) {
                if (flag.size() < 2)
                    return;
                Simplex s;
                s.reserve(flag.size());
                for (auto it = flag.rbegin(); it != flag.rend(); ++it)
                    s.push_back(sd.vertex_of(*it));
                if (p.in_sub(k, i))
                    sub.push_back(s);
                simplices.push_back(std::move(s));
            });
            if (p.in_sub(k, i))
                sub.push_back(Simplex{sd.vertex_of({k, i})});
        }

    sd.pair = SimplicialPair::build(static_cast<int>(sd.vertex_origin.size()), simplices, sub);
    sd.carrier.resize(sd.pair.dimension() + 1);
    for (int k = 0; k <= sd.pair.dimension(); ++k) {
        sd.carrier[k].reserve(sd.pair.count(k));
        for (const auto& s : sd.pair.simplices(k))
            sd.carrier[k].push_back(sd.vertex_origin[s.back()]);
    }
    return sd;
}

Chain Subdivision::subdivide_chain(int k, const Chain& chain) const
{
    std::vector<bool> wanted;
    if (k >= 0 && static_cast<std::size_t>(k) < vertex_offset.size() - 1)
        wanted.assign(vertex_offset[k + 1] - vertex_offset[k], false);
    for (auto i : chain)
        wanted[i] = true;
    Chain out;
    for (std::size_t j = 0; j < pair.count(k); ++j) {
        const auto& c = carrier[k][j];
        if (c.dim == k && wanted[c.index])
            out.push_back(j);
    }
    return out;
}

// ---------------------------------------------------------------------------

Quotient quotient_by_involution(const SimplicialPair& p, const std::vector<int>& involution)
{
    const int n = p.vertex_count();
    if (static_cast<int>(involution.size()) != n)
        throw TopologyError("involution size mismatch");
    Quotient q;
    q.vertex_class.assign(n, -1);
    int classes = 0;
    for (int v = 0; v < n; ++v) {
        const int w = involution[v];
        if (w < 0 || w >= n || involution[w] != v)
            throw TopologyError("vertex map is not an involution");
        if (q.vertex_class[v] < 0) {
            q.vertex_class[v] = classes;
            q.vertex_class[w] = classes;
            ++classes;
        }
    }

    std::map<Simplex, std::set<Simplex>> preimages;
    std::vector<Simplex> simplices;
    std::vector<Simplex> sub;
    for (int k = 0; k <= p.dimension(); ++k)
        for (std::size_t i = 0; i < p.count(k); ++i) {
            const Simplex& s = p.simplex(k, i);
            Simplex img;
            Simplex tw;
            for (int v : s) {
                img.push_back(q.vertex_class[v]);
                tw.push_back(involution[v]);
            }
            std::sort(img.begin(), img.end());
            std::sort(tw.begin(), tw.end());
            if (std::adjacent_find(img.begin(), img.end()) != img.end())
                throw TopologyError("simplex meets its own orbit; quotient is not simplicial");
            if (!p.index_of(tw))
                throw TopologyError("vertex involution is not simplicial");
            auto& pre = preimages[img];
            pre.insert(s);
            if (pre.size() > 2 || (pre.size() == 2 && (tw == s || !pre.count(tw))))
                throw TopologyError("two simplices outside one orbit share an image; quotient is not simplicial");
            if (p.in_sub(k, i))
                sub.push_back(img);
            if (k > 0)
                simplices.push_back(img);
        }
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    q.pair = SimplicialPair::build(classes, simplices, sub);

    q.image.resize(p.dimension() + 1);
    for (int k = 0; k <= p.dimension(); ++k) {
        q.image[k].reserve(p.count(k));
        for (const auto& s : p.simplices(k)) {
            Simplex img;
            for (int v : s)
                img.push_back(q.vertex_class[v]);
            std::sort(img.begin(), img.end());
            q.image[k].push_back(*q.pair.index_of(img));
        }
    }
    return q;
}

// ---------------------------------------------------------------------------

namespace models {

SimplicialPair point() { return SimplicialPair::build(1, {}); }

SimplicialPair two_points() { return SimplicialPair::build(2, {}); }

SimplicialPair circle(int n)
{
    if (n < 3)
        throw TopologyError("circle needs at least 3 vertices");
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return SimplicialPair::build(n, edges);
}

SimplicialPair interval(int edges)
{
    std::vector<Simplex> s;
    for (int i = 0; i < edges; ++i)
        s.push_back({i, i + 1});
    return SimplicialPair::build(edges + 1, s);
}

SimplicialPair interval_rel_boundary(int edges)
{
    std::vector<Simplex> s;
    for (int i = 0; i < edges; ++i)
        s.push_back({i, i + 1});
    return SimplicialPair::build(edges + 1, s, {{0}, {edges}});
}

SimplicialPair disjoint_circles(int n, int copies)
{
    std::vector<Simplex> edges;
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < n; ++i)
            edges.push_back({c * n + i, c * n + (i + 1) % n});
    return SimplicialPair::build(n * copies, edges);
}

SimplicialPair octahedron()
{
    std::vector<Simplex> t;
    for (int x : {0, 1})
        for (int y : {2, 3})
            for (int z : {4, 5})
                t.push_back({x, y, z});
    return SimplicialPair::build(6, t);
}

SimplicialPair torus7()
{
    std::vector<Simplex> t;
    for (int i = 0; i < 7; ++i) {
        t.push_back({i, (i + 1) % 7, (i + 3) % 7});
        t.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialPair::build(7, t);
}

SimplicialPair rp2_6()
{
    return SimplicialPair::build(6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                     {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

SimplicialPair mobius5()
{
    std::vector<Simplex> t;
    for (int i = 0; i < 5; ++i)
        t.push_back({i, (i + 1) % 5, (i + 2) % 5});
    return SimplicialPair::build(5, t);
}

SimplicialPair mobius5_rel_boundary()
{
    std::vector<Simplex> t;
    std::vector<Simplex> boundary;
    for (int i = 0; i < 5; ++i) {
        t.push_back({i, (i + 1) % 5, (i + 2) % 5});
        boundary.push_back({i, (i + 2) % 5});
    }
    return SimplicialPair::build(5, t, boundary);
}

}  // namespace models

}  // namespace pbu
