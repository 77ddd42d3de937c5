#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pbu/bu_family.hpp"

namespace pbu::corr {

using Rational = boost::multiprecision::cpp_rational;
/// A point of Δ(K) in barycentric coordinates over all of K.
using Bary = std::vector<Rational>;
/// A payoff vector as grid indices 0..grid_res over [a, b].
using GridPayoff = std::vector<int>;
/// A sorted nonempty subset of K = {0, ..., k-1}.
using Label = std::vector<int>;

struct PayoffGrid {
    double a = 0, b = 1;
    int res = 4;

    double value(int i) const { return a + (b - a) * i / res; }
    /// Nearest grid index; throws std::invalid_argument outside [a, b].
    int snap(double y) const;
    bool operator==(const PayoffGrid&) const = default;
};

/// F ⊂ Δ(L) × I^L on a payoff grid. Points are sorted and unique; p is zero off L and
/// y is indexed by the positions of L.
struct FiniteCorrespondence {
    int k = 0;
    Label domain;
    PayoffGrid grid;
    struct Entry {
        Bary p;
        GridPayoff y;
        auto operator<=>(const Entry&) const = default;
    };
    std::vector<Entry> points;

    /// Validates the invariants and sorts the points.
    void normalize();
    bool contains(const Bary& p, const GridPayoff& y) const;
    bool operator==(const FiniteCorrespondence&) const = default;
};

std::vector<Bary> preimage(const FiniteCorrespondence& f, const std::vector<double>& y, double eps = 0);

/// Exact convex-hull membership of p in co(vertices) by a phase-one simplex with Bland's rule.
bool in_hull(const std::vector<Bary>& vertices, const Bary& p);
/// The extreme points of a finite set, sorted.
std::vector<Bary> extreme_points(std::vector<Bary> pts);

/// cF with fibers stored as extreme-point sets.
struct ConvexCorrespondence {
    int k = 0;
    Label domain;
    PayoffGrid grid;
    std::map<GridPayoff, std::vector<Bary>> fibers;

    bool contains(const Bary& p, const GridPayoff& y) const;
    bool operator==(const ConvexCorrespondence&) const = default;
};

ConvexCorrespondence convexify(const FiniteCorrespondence& f);
ConvexCorrespondence convexify(const ConvexCorrespondence& f);
/// cF ⊆ cG, fiber by fiber.
bool subset(const ConvexCorrespondence& f, const ConvexCorrespondence& g);
bool subset(const FiniteCorrespondence& f, const FiniteCorrespondence& g);

/// Y-saturation on the grid.
FiniteCorrespondence saturate(const FiniteCorrespondence& f);

/// A closed box in I^K, in grid indices.
struct GridBox {
    GridPayoff lo, hi;
    bool contains(const GridPayoff& y) const;
};

/// A hull generator tagged with the label of the correspondence it came from.
struct Generator {
    Bary p;
    Label label;
    auto operator<=>(const Generator&) const = default;
};

/// Γ ⊂ Δ(K) × I^K with each fiber a union of hulls of generators.
struct HullCorrespondence {
    int k = 0;
    PayoffGrid grid;
    std::map<GridPayoff, std::vector<std::vector<Generator>>> fibers;

    bool contains(const Bary& p, const GridPayoff& y) const;
};

struct Hypothesis {
    std::string name;
    bool holds = true;
    std::string detail;
};

struct GammaResult {
    HullCorrespondence gamma;
    std::vector<Hypothesis> hypotheses;
    bool hypotheses_hold() const;
};

struct FarInput {
    int k = 0;
    std::vector<Label> script_l;                 ///< ℒ; F and U also carry an entry for K itself
    PayoffGrid grid;
    std::map<Label, FiniteCorrespondence> f;
    std::map<Label, GridBox> u;
};

/// Γ^{-1}(y) = co(G^{-1}(y)) ∪ ⋃_{x ∈ F^{-1}(y)} co({x} ∪ G^{-1}(y)).
GammaResult gamma_far(const FarInput& in);

struct CloseInput {
    int k = 0;
    std::vector<Label> script_l;
    PayoffGrid grid;
    std::map<Label, FiniteCorrespondence> f;     ///< maximal members of ℒ only
};

/// The induced F_L for every L ∈ ℒ: points of F_J over Δ(L) for maximal J ⊇ L, payoffs
/// restricted to L.
std::map<Label, FiniteCorrespondence> induced_family(const CloseInput& in);
/// Γ^{-1}(y): hulls of all generators with at most one per maximal label.
GammaResult gamma_close(const CloseInput& in);

/// ℒ is intersection-closed, ignoring empty intersections.
bool intersection_closed(const std::vector<Label>& script_l, std::string* detail = nullptr);

struct EmpiricalVerdict {
    SpanStatus status = SpanStatus::not_essential;
    int lattice_res = 0;
    std::size_t footprint_vertices = 0;
    std::size_t footprint_simplices = 0;
    EssentialityReport detail;
    std::string note = "EMPIRICAL: evidence on a finite grid, not a proof";
};

struct FootprintOptions {
    int lattice_res = 0;                 ///< 0: lcm of generator denominators, at least 2
    std::size_t max_simplices = 2'000'000;
};

/// Property S for Δ(K): the footprint {(q, y) : q ∈ Γ^{-1}(y)} over lattice points q of
/// resolution N is triangulated by the Freudenthal subdivision of the partial-sum
/// coordinates × payoff grid, and its projection is tested for H-essentiality.
EmpiricalVerdict spanning_empirical(const HullCorrespondence& g, FootprintOptions opt = {});
EmpiricalVerdict spanning_empirical(const FiniteCorrespondence& f, FootprintOptions opt = {});

/// Lattice points of Δ(K) with denominator n, lexicographic in numerators.
std::vector<std::vector<int>> simplex_lattice(int k, int n);

std::string label_string(const Label& l);

}  // namespace pbu::corr
