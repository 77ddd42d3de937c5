#include "pbu/homology.hpp"

#include <algorithm>
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

Simplex image_vertices(const Simplex& s, const std::vector<int>& vmap)
{
    Simplex img;
    img.reserve(s.size());
    for (int v : s)
        img.push_back(vmap[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

}  // namespace

// ---------------------------------------------------------------------------
// SimplicialMap

SimplicialMap::SimplicialMap(SimplicialPair source, SimplicialPair target, std::vector<int> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map))
{
    if (static_cast<int>(vertex_map_.size()) != source_.vertex_count())
        throw TopologyError("vertex map size does not match source vertex count");
    for (int v : vertex_map_)
        if (v < 0 || v >= target_.vertex_count())
            throw TopologyError("vertex map sends a vertex outside the target");
    for (int k = 0; k <= source_.dimension(); ++k)
        for (std::size_t i = 0; i < source_.count(k); ++i) {
            const Simplex img = image_vertices(source_.simplex(k, i), vertex_map_);
            auto idx = target_.index_of(img);
            if (!idx)
                throw TopologyError("image of " + describe(source_.simplex(k, i)) + " is not a target simplex");
            if (source_.in_sub(k, i) && !target_.in_sub(static_cast<int>(img.size()) - 1, *idx))
                throw TopologyError("sub simplex " + describe(source_.simplex(k, i)) + " maps outside the target sub");
        }
}

CellRef SimplicialMap::image(int k, std::size_t i) const
{
    const Simplex img = image_vertices(source_.simplex(k, i), vertex_map_);
    return {static_cast<int>(img.size()) - 1, *target_.index_of(img)};
}

Chain SimplicialMap::push_forward(int k, const Chain& chain) const
{
    std::vector<std::size_t> raw;
    raw.reserve(chain.size());
    for (auto i : chain) {
        const CellRef c = image(k, i);
        if (c.dim == k)
            raw.push_back(c.index);
    }
    return chain_normalize(std::move(raw));
}

bool SimplicialMap::order_preserving() const
{
    for (int k = 1; k <= source_.dimension(); ++k)
        for (const auto& s : source_.simplices(k))
            for (std::size_t j = 1; j < s.size(); ++j)
                if (vertex_map_[s[j - 1]] > vertex_map_[s[j]])
                    return false;
    return true;
}

bool SimplicialMap::sub_is_preimage() const
{
    for (int k = 0; k <= source_.dimension(); ++k)
        for (std::size_t i = 0; i < source_.count(k); ++i) {
            const CellRef c = image(k, i);
            if (source_.in_sub(k, i) != target_.in_sub(c.dim, c.index))
                return false;
        }
    return true;
}

SimplicialMap SimplicialMap::identity(const SimplicialPair& p)
{
    std::vector<int> v(p.vertex_count());
    for (int i = 0; i < p.vertex_count(); ++i)
        v[i] = i;
    return SimplicialMap(p, p, std::move(v));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f)
{
    if (!(f.target() == g.source()))
        throw TopologyError("maps are not composable");
    std::vector<int> v(f.vertex_map().size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = g.vertex_map()[f.vertex_map()[i]];
    return SimplicialMap(f.source(), g.target(), std::move(v));
}

// ---------------------------------------------------------------------------
// Boundary matrices and reduction

Z2Matrix boundary_matrix(const SimplicialPair& p, int k)
{
    if (k < 0)
        return Z2Matrix(0, 0);
    const std::size_t rows = k == 0 ? 0 : p.relative_count(k - 1);
    const std::size_t cols = p.relative_count(k);
    Z2Matrix m(rows, cols);
    if (k == 0)
        return m;
    const auto& rel = p.relative_simplices(k);
    for (std::size_t c = 0; c < cols; ++c)
        for (auto f : p.faces(k, rel[c]))
            if (auto r = p.relative_index(k - 1, f))
                m.set(*r, c);
    return m;
}

namespace {

void add_into(std::vector<std::size_t>& a, const std::vector<std::size_t>& b, std::vector<std::size_t>& scratch)
{
    scratch.clear();
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(scratch));
    a.swap(scratch);
}

}  // namespace

DegreeHomology::DegreeHomology(const SimplicialPair& p, int k) : pair_(p), degree_(k)
{
    if (k < 0 || k > p.dimension())
        return;

    auto relative_boundary = [&](int dim, std::size_t abs) {
        RelChain col;
        for (auto f : p.faces(dim, abs))
            if (auto r = p.relative_index(dim - 1, f))
                col.push_back(*r);
        return col;  // faces() is ascending and relative indexing is monotone
    };

    RelChain scratch;
    // Reduce the (k+1)-boundary: its nonzero reduced columns span the relative boundaries.
    if (k + 1 <= p.dimension()) {
        for (auto abs : p.relative_simplices(k + 1)) {
            RelChain col = relative_boundary(k + 1, abs);
            while (!col.empty()) {
                auto it = boundary_pivot_.find(col.back());
                if (it == boundary_pivot_.end())
                    break;
                add_into(col, reduced_boundaries_[it->second], scratch);
            }
            if (!col.empty()) {
                boundary_pivot_.emplace(col.back(), reduced_boundaries_.size());
                reduced_boundaries_.push_back(std::move(col));
            }
        }
    }
    boundary_rank_ = reduced_boundaries_.size();

    // Reduce the k-boundary with column tracking to get a cycle basis with distinct lows.
    const std::size_t n = p.relative_count(k);
    const auto& rel = p.relative_simplices(k);
    std::vector<RelChain> reduced;
    std::vector<RelChain> track;
    std::map<std::size_t, std::size_t> pivot;
    for (std::size_t j = 0; j < n; ++j) {
        if (boundary_pivot_.count(j)) {
            // Lows of the reduced (k+1)-boundary are cycles that are boundaries; skip their reduction.
            ++cycle_rank_;
            continue;
        }
        RelChain col = k == 0 ? RelChain{} : relative_boundary(k, rel[j]);
        RelChain v{j};
        while (!col.empty()) {
            auto it = pivot.find(col.back());
            if (it == pivot.end())
                break;
            add_into(col, reduced[it->second], scratch);
            add_into(v, track[it->second], scratch);
        }
        if (col.empty()) {
            ++cycle_rank_;
            if (!boundary_pivot_.count(j)) {
                rep_pivot_.emplace(j, rep_rel_.size());
                reps_.push_back(to_absolute(v));
                rep_rel_.push_back(std::move(v));
            }
        } else {
            pivot.emplace(col.back(), reduced.size());
            reduced.push_back(std::move(col));
            track.push_back(std::move(v));
        }
    }
}

DegreeHomology::RelChain DegreeHomology::to_relative(const Chain& chain) const
{
    RelChain out;
    out.reserve(chain.size());
    for (auto i : chain)
        if (auto r = pair_.relative_index(degree_, i))
            out.push_back(*r);
    return out;
}

Chain DegreeHomology::to_absolute(const RelChain& rel) const
{
    const auto& list = pair_.relative_simplices(degree_);
    Chain out;
    out.reserve(rel.size());
    for (auto r : rel)
        out.push_back(list[r]);
    return out;
}

HomologyClass DegreeHomology::representative_class(std::size_t i) const
{
    return {degree_, reps_.at(i), pair_.fingerprint()};
}

bool DegreeHomology::is_relative_cycle(const Chain& chain) const
{
    if (degree_ == 0)
        return true;
    return pair_.drop_sub(degree_ - 1, pair_.boundary(degree_, pair_.drop_sub(degree_, chain))).empty();
}

std::optional<BitVector> DegreeHomology::coordinates(const Chain& chain) const
{
    if (degree_ < 0 || degree_ > pair_.dimension()) {
        if (chain.empty())
            return BitVector(0);
        return std::nullopt;
    }
    if (!is_relative_cycle(chain))
        return std::nullopt;
    RelChain z = to_relative(chain);
    BitVector coords(rep_rel_.size());
    while (!z.empty()) {
        const auto low = z.back();
        if (auto it = boundary_pivot_.find(low); it != boundary_pivot_.end()) {
            z = chain_add(z, reduced_boundaries_[it->second]);
        } else if (auto jt = rep_pivot_.find(low); jt != rep_pivot_.end()) {
            z = chain_add(z, rep_rel_[jt->second]);
            coords.flip(jt->second);
        } else {
            return std::nullopt;
        }
    }
    return coords;
}

bool DegreeHomology::is_boundary(const Chain& chain) const
{
    auto c = coordinates(chain);
    return c && c->none();
}

Chain DegreeHomology::combination(const BitVector& coords) const
{
    Chain out;
    for (auto i : coords.support())
        out = chain_add(out, reps_[i]);
    return out;
}

HomologyReport homology(const SimplicialPair& p)
{
    HomologyReport r;
    for (int k = 0; k <= p.dimension(); ++k) {
        DegreeHomology h(p, k);
        r.ranks.push_back(h.rank());
        r.representatives.push_back(h.representatives());
    }
    return r;
}

Z2Matrix induced_map(const SimplicialMap& f, int k)
{
    return induced_map(f, DegreeHomology(f.source(), k), DegreeHomology(f.target(), k));
}

Z2Matrix induced_map(const SimplicialMap& f, const DegreeHomology& src, const DegreeHomology& tgt)
{
    const int k = src.degree();
    Z2Matrix m(tgt.rank(), src.rank());
    for (std::size_t j = 0; j < src.rank(); ++j) {
        const Chain img = f.push_forward(k, src.representatives()[j]);
        auto c = tgt.coordinates(img);
        if (!c)
            throw TopologyError("pushforward of a relative cycle is not a relative cycle");
        for (auto r : c->support())
            m.set(r, j);
    }
    return m;
}

HomologyClass fundamental_class(const SimplicialPair& p)
{
    const int m = p.dimension();
    HomologyClass cls;
    cls.home = p.fingerprint();
    if (m < 0)
        return cls;
    cls.degree = m;
    cls.chain = p.relative_simplices(m);
    if (m > 0) {
        for (auto f : p.relative_simplices(m - 1)) {
            std::size_t n = 0;
            for (auto c : p.cofaces(m - 1, f))
                if (!p.in_sub(m, c))
                    ++n;
            if (n != 2)
                throw TopologyError("not a mod-2 manifold pair: interior simplex " + describe(p.simplex(m - 1, f)) +
                                    " is a face of " + std::to_string(n) + " top simplices outside the sub");
        }
    }
    return cls;
}

EssentialityReport is_h_essential(const SimplicialMap& f, std::optional<int> degree)
{
    EssentialityReport rep;
    const int target_dim = f.target().dimension();
    rep.degree = degree.value_or(target_dim);
    if (rep.degree != target_dim)
        rep.warnings.push_back("degree " + std::to_string(rep.degree) + " differs from target dimension " +
                               std::to_string(target_dim));
    if (!f.sub_is_preimage())
        rep.warnings.push_back("source sub is not the preimage of the target sub");

    DegreeHomology tgt(f.target(), rep.degree);
    rep.target_rank = tgt.rank();
    DegreeHomology src(f.source(), rep.degree);
    rep.induced = induced_map(f, src, tgt);
    rep.image_rank = rep.induced.rank();
    rep.essential = rep.image_rank == rep.target_rank;
    if (!rep.essential) {
        rep.refutation = "image rank " + std::to_string(rep.image_rank) + " < target rank " +
                         std::to_string(rep.target_rank);
        return rep;
    }
    if (rep.target_rank == 0)
        return rep;

    std::optional<HomologyClass> fc;
    try {
        fc = fundamental_class(f.target());
    } catch (const TopologyError&) {
        rep.warnings.push_back("target is not a manifold pair; no fundamental-class witness");
    }
    if (fc && fc->degree == rep.degree) {
        auto y = tgt.coordinates(fc->chain);
        if (y) {
            auto x = rep.induced.solve(*y);
            if (x) {
                rep.witness = HomologyClass{rep.degree, src.combination(*x), f.source().fingerprint()};
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Restriction

std::string admissibility_violation(const SimplicialPair& p, const std::vector<std::vector<bool>>& y_mask,
                                    const std::vector<std::vector<bool>>& b_mask)
{
    if (!mask_is_face_closed(p, y_mask))
        return "Y is not a subcomplex";
    if (!mask_is_face_closed(p, b_mask))
        return "B is not a subcomplex";
    for (int k = 0; k <= p.dimension(); ++k)
        for (std::size_t i = 0; i < p.count(k); ++i) {
            if (b_mask[k][i] && !y_mask[k][i])
                return "B is not contained in Y at " + describe(p.simplex(k, i));
            if (!y_mask[k][i] || b_mask[k][i])
                continue;
            if (p.in_sub(k, i))
                return "simplex " + describe(p.simplex(k, i)) + " of Y\\B lies in A";
            if (k < p.dimension())
                for (auto c : p.cofaces(k, i))
                    if (!p.in_sub(k + 1, c) && (!y_mask[k + 1][c] || b_mask[k + 1][c]))
                        return "open star of " + describe(p.simplex(k, i)) + " leaves Y\\B at " +
                               describe(p.simplex(k + 1, c));
        }
    return {};
}

Restriction restrict_class(const SimplicialPair& p, const HomologyClass& alpha,
                           const std::vector<std::vector<bool>>& y_mask,
                           const std::vector<std::vector<bool>>& b_mask)
{
    if (alpha.home != p.fingerprint())
        throw TopologyError("class does not live on this pair");
    if (auto why = admissibility_violation(p, y_mask, b_mask); !why.empty())
        throw TopologyError("inadmissible restriction: " + why);

    Restriction r{extract_subpair(p, y_mask, b_mask), {}};
    // Excision is the identity on chains supported in Y\B, so the restriction keeps those terms.
    const int k = alpha.degree;
    std::vector<std::ptrdiff_t> new_index(p.count(k), -1);
    if (k <= r.subpair.pair.dimension())
        for (std::size_t j = 0; j < r.subpair.origin[k].size(); ++j)
            new_index[r.subpair.origin[k][j]] = static_cast<std::ptrdiff_t>(j);
    Chain out;
    for (auto i : alpha.chain)
        if (y_mask[k][i] && !b_mask[k][i])
            out.push_back(static_cast<std::size_t>(new_index[i]));
    std::sort(out.begin(), out.end());
    r.cls = HomologyClass{k, std::move(out), r.subpair.pair.fingerprint()};
    return r;
}

std::vector<std::vector<bool>> preimage_mask(const SimplicialMap& f, const std::vector<std::vector<bool>>& mask)
{
    auto out = empty_mask(f.source());
    for (int k = 0; k <= f.source().dimension(); ++k)
        for (std::size_t i = 0; i < f.source().count(k); ++i) {
            const CellRef c = f.image(k, i);
            out[k][i] = mask[c.dim][c.index];
        }
    return out;
}

// ---------------------------------------------------------------------------
// Long exact sequence

LongExactSequence long_exact_sequence(const SimplicialPair& p)
{
    LongExactSequence les;
    const int dim = p.dimension();
    const SimplicialPair absolute = p.with_sub(empty_mask(p));
    const Subpair sub = extract_subpair(p, sub_mask_of(p), empty_mask(p));
    const SimplicialMap include(sub.pair, absolute, sub.vertex_origin);
    const SimplicialMap quotient(absolute, p, [&] {
        std::vector<int> v(p.vertex_count());
        for (int i = 0; i < p.vertex_count(); ++i)
            v[i] = i;
        return v;
    }());

    std::vector<DegreeHomology> h_sub, h_rel;
    for (int k = 0; k <= dim; ++k) {
        h_sub.emplace_back(sub.pair, k);
        h_rel.emplace_back(p, k);
        les.rank_sub.push_back(h_sub.back().rank());
        les.rank_abs.push_back(DegreeHomology(absolute, k).rank());
        les.rank_rel.push_back(h_rel.back().rank());
        les.i_star.push_back(induced_map(include, k));
        les.j_star.push_back(induced_map(quotient, k));
    }
    for (int k = 0; k <= dim; ++k) {
        if (k == 0) {
            les.connecting.push_back(Z2Matrix(0, les.rank_rel[0]));
            continue;
        }
        std::vector<std::ptrdiff_t> to_sub(p.count(k - 1), -1);
        if (k - 1 <= sub.pair.dimension())
            for (std::size_t j = 0; j < sub.origin[k - 1].size(); ++j)
                to_sub[sub.origin[k - 1][j]] = static_cast<std::ptrdiff_t>(j);
        Z2Matrix d(les.rank_sub[k - 1], les.rank_rel[k]);
        for (std::size_t c = 0; c < h_rel[k].rank(); ++c) {
            Chain bd = p.boundary(k, h_rel[k].representatives()[c]);
            Chain in_sub;
            for (auto i : bd) {
                if (to_sub[i] < 0)
                    throw TopologyError("relative cycle boundary leaves the subcomplex");
                in_sub.push_back(static_cast<std::size_t>(to_sub[i]));
            }
            std::sort(in_sub.begin(), in_sub.end());
            auto coords = h_sub[k - 1].coordinates(in_sub);
            if (!coords)
                throw TopologyError("connecting map produced a non-cycle");
            for (auto r : coords->support())
                d.set(r, c);
        }
        les.connecting.push_back(std::move(d));
    }
    return les;
}

}  // namespace pbu
