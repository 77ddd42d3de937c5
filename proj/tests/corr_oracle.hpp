#pragma once

// Brute-force reference for |K| = 2: fibers are intervals in t = p_1, evaluated straight
// from the defining formulas, and spanning is decided by union-find over grid adjacency.

#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "pbu/corr_lab.hpp"

namespace oracle {

using pbu::corr::Rational;

struct Interval {
    Rational lo, hi;
};
using Fibers = std::map<std::pair<int, int>, std::vector<Interval>>;

inline std::optional<Interval> hull(const std::vector<Rational>& ts)
{
    if (ts.empty())
        return std::nullopt;
    Interval iv{ts[0], ts[0]};
    for (const auto& t : ts) {
        iv.lo = t < iv.lo ? t : iv.lo;
        iv.hi = t > iv.hi ? t : iv.hi;
    }
    return iv;
}

inline std::vector<Rational> matches(const pbu::corr::FiniteCorrespondence& f, int y0, int y1)
{
    std::vector<Rational> out;
    for (const auto& e : f.points) {
        bool ok = true;
        for (std::size_t j = 0; j < f.domain.size(); ++j)
            ok = ok && e.y[j] == (f.domain[j] == 0 ? y0 : y1);
        if (ok)
            out.push_back(e.p[1]);
    }
    return out;
}

inline Fibers far_fibers(const pbu::corr::FarInput& in)
{
    Fibers out;
    const int r = in.grid.res;
    for (int y0 = 0; y0 <= r; ++y0)
        for (int y1 = 0; y1 <= r; ++y1) {
            bool in_u = true;
            for (const auto& [l, box] : in.u)
                in_u = in_u && box.lo[0] <= y0 && y0 <= box.hi[0] && box.lo[1] <= y1 && y1 <= box.hi[1];
            if (!in_u)
                continue;
            std::vector<Rational> g;
            for (const auto& l : in.script_l)
                for (const auto& t : matches(in.f.at(l), y0, y1))
                    g.push_back(t);
            std::vector<Interval> ivs;
            if (auto h = hull(g))
                ivs.push_back(*h);
            for (const auto& x : matches(in.f.at({0, 1}), y0, y1)) {
                auto with = g;
                with.push_back(x);
                ivs.push_back(*hull(with));
            }
            if (!ivs.empty())
                out[{y0, y1}] = ivs;
        }
    return out;
}

/// ℒ = {{0}, {1}}: both labels maximal, so a hull takes at most one point of each.
inline Fibers close_fibers(const pbu::corr::CloseInput& in)
{
    Fibers out;
    const int r = in.grid.res;
    for (int y0 = 0; y0 <= r; ++y0)
        for (int y1 = 0; y1 <= r; ++y1) {
            auto a = matches(in.f.at({0}), y0, y1);
            auto b = matches(in.f.at({1}), y0, y1);
            std::vector<Interval> ivs;
            if (!a.empty() && !b.empty())
                ivs.push_back({Rational(0), Rational(1)});
            else if (!a.empty() || !b.empty())
                ivs.push_back(!a.empty() ? Interval{a[0], a[0]} : Interval{b[0], b[0]});
            if (!ivs.empty())
                out[{y0, y1}] = ivs;
        }
    return out;
}

inline bool spans(const Fibers& fib, int n)
{
    // Vertex (c, y0, y1) with c = n * p_0 = n * (1 - t).
    auto present = [&](int c, int y0, int y1) {
        auto it = fib.find({y0, y1});
        if (it == fib.end())
            return false;
        const Rational t = Rational(n - c, n);
        for (const auto& iv : it->second)
            if (iv.lo <= t && t <= iv.hi)
                return true;
        return false;
    };
    std::map<std::array<int, 3>, int> id;
    std::vector<std::array<int, 3>> verts;
    for (const auto& [y, ivs] : fib)
        for (int c = 0; c <= n; ++c)
            if (present(c, y.first, y.second)) {
                id[{c, y.first, y.second}] = static_cast<int>(verts.size());
                verts.push_back({c, y.first, y.second});
            }
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (int m = 1; m < 8; ++m) {
            std::array<int, 3> w = verts[i];
            for (int j = 0; j < 3; ++j)
                w[j] += m >> j & 1;
            auto it = id.find(w);
            if (it != id.end())
                parent[find(static_cast<int>(i))] = find(it->second);
        }
    std::map<int, int> seen;   // root -> bitmask of the two endpoints
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const int c = verts[i][0];
        if (c == 0 || c == n)
            seen[find(static_cast<int>(i))] |= c == 0 ? 1 : 2;
    }
    for (const auto& [root, mask] : seen)
        if (mask == 3)
            return true;
    return false;
}

inline int lattice_for(const Fibers& fib)
{
    long long n = 1;
    for (const auto& [y, ivs] : fib)
        for (const auto& iv : ivs)
            for (const auto& v : {iv.lo, iv.hi})
                n = std::lcm(n, boost::multiprecision::denominator(v).convert_to<long long>());
    return static_cast<int>(n);
}

// Random |K| = 2 instances.

inline pbu::corr::Bary edge_point(int num, int den) { return {Rational(den - num, den), Rational(num, den)}; }

inline pbu::corr::FiniteCorrespondence vertex_family(int vertex, int res, std::mt19937& rng, int count)
{
    pbu::corr::FiniteCorrespondence f{2, {vertex}, {0, 1, res}, {}};
    std::uniform_int_distribution<int> y(0, res);
    for (int i = 0; i < count; ++i)
        f.points.push_back({vertex == 0 ? edge_point(0, 1) : edge_point(1, 1), {y(rng)}});
    f.normalize();
    return f;
}

inline pbu::corr::FarInput random_far(int res, std::mt19937& rng)
{
    pbu::corr::FarInput in;
    in.k = 2;
    in.script_l = {{0}, {1}};
    in.grid = {0, 1, res};
    std::uniform_int_distribution<int> y(0, res), den_d(1, 4), cnt(0, 2), coin(0, 3);
    in.f[{0}] = vertex_family(0, res, rng, cnt(rng));
    in.f[{1}] = vertex_family(1, res, rng, cnt(rng));
    pbu::corr::FiniteCorrespondence fk{2, {0, 1}, in.grid, {}};
    const int pts = 1 + cnt(rng) * 2;
    for (int i = 0; i < pts; ++i) {
        const int den = den_d(rng);
        const int num = std::uniform_int_distribution<int>(0, den)(rng);
        fk.points.push_back({edge_point(num, den), {y(rng), y(rng)}});
    }
    fk.normalize();
    in.f[{0, 1}] = coin(rng) ? pbu::corr::saturate(fk) : fk;
    for (const pbu::corr::Label& l : std::vector<pbu::corr::Label>{{0}, {1}, {0, 1}}) {
        pbu::corr::GridBox b{{0, 0}, {res, res}};
        if (coin(rng) == 0)
            b.lo = {y(rng) / 2, y(rng) / 2};
        in.u[l] = b;
    }
    return in;
}

inline pbu::corr::CloseInput random_close(int res, std::mt19937& rng)
{
    pbu::corr::CloseInput in;
    in.k = 2;
    in.script_l = {{0}, {1}};
    in.grid = {0, 1, res};
    std::uniform_int_distribution<int> cnt(0, 2);
    in.f[{0}] = vertex_family(0, res, rng, cnt(rng));
    in.f[{1}] = vertex_family(1, res, rng, cnt(rng));
    return in;
}

}  // namespace oracle
