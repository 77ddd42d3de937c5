#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pbu/homology.hpp"
#include "pbu/simplicial_pair.hpp"

namespace pbu {

using Point = std::vector<double>;

/// Parameter space W as a triangulated pair (W, ∂W) with a coordinate for every vertex.
struct ParameterModel {
    std::string kind;
    SimplicialPair pair;
    std::vector<Point> points;
};

namespace parameters {
ParameterModel point();
ParameterModel interval(int res);      ///< [0,1] with res edges, rel endpoints
ParameterModel circle(int res);        ///< res samples of [0,1) with wraparound
ParameterModel square(int res);        ///< [0,1]^2, res x res squares split on the main diagonal
}  // namespace parameters

/// Sampled directions on S^n closed under the antipode, with triangulations of S^n and S^n/±.
struct DirectionSpace {
    int sphere_dim = 1;
    std::vector<Point> directions;            ///< unit vectors
    std::vector<int> antipode;                ///< sample -> antipodal sample
    SimplicialPair sphere;                    ///< vertices are samples
    SimplicialPair quotient;                  ///< S^n/±
    std::vector<int> class_of;                ///< sample -> quotient vertex
    std::vector<std::vector<int>> lift;       ///< quotient top simplex -> one preimage's samples
};

/// M equally spaced angles θ_j = 2πj/M. M must be even and at least 6.
DirectionSpace circle_directions(int samples);
/// Grid points of the surface of [-1,1]^3 with r segments per edge, projected to S^2.
DirectionSpace cube_directions(int r);

/// An e-box [lo, hi] in R^m.
struct Box {
    Point lo, hi;
};

/// A family F: W × S^n -> R^m sampled on vertices × directions, or a finite box cloud Z.
struct SampledFamily {
    ParameterModel w;
    DirectionSpace dirs;
    int m = 1;
    /// Function case: values[(wi * |dirs| + d) * m + c].
    std::vector<double> values;
    /// Box-cloud case: boxes[wi * |dirs| + d].
    std::vector<std::vector<Box>> boxes;
    std::optional<double> eps;     ///< matching tolerance; default derived from the samples

    bool is_function() const { return !values.empty(); }
    std::size_t direction_count() const { return dirs.directions.size(); }
    const double* value(std::size_t wi, std::size_t d) const { return &values[(wi * direction_count() + d) * m]; }
    const std::vector<Box>& cloud(std::size_t wi, std::size_t d) const { return boxes[wi * direction_count() + d]; }
};

using FamilyFunction = std::function<Point(const Point& w, const Point& direction)>;

/// Samples F on every (vertex, direction) pair. Rejects non-finite values.
SampledFamily sample_family(const ParameterModel& w, const DirectionSpace& dirs, int m, const FamilyFunction& f);

/// g[w, v] = F[w, v] - F[w, -v]. Throws std::invalid_argument on box-cloud input.
SampledFamily antipodal_difference(const SampledFamily& fam);

/// A cell σ × [τ] of W × (S^n/±) that satisfies the matching predicate.
struct FlaggedCell {
    std::size_t w_cell;        ///< top simplex of W
    std::size_t d_cell;        ///< top simplex of S^n/±
    Point e;                   ///< witnessing value
};

struct SolutionSet {
    std::vector<FlaggedCell> cells;
    std::vector<std::vector<std::size_t>> fiber;   ///< W top simplex -> indices into cells
    std::size_t components = 0;
    SimplicialPair complex;                        ///< closed staircase cells, sub over ∂W
    std::vector<int> w_vertex;                     ///< complex vertex -> W vertex
    std::vector<int> d_vertex;                     ///< complex vertex -> quotient vertex
    double eps = 0;                                ///< largest tolerance used
};

/// Function case: flags cells on which g changes sign (ties included) in every coordinate.
/// Box case: flags cells with boxes e1 over (σ, τ) and e2 over (σ, -τ), |e1 - e2|∞ <= ε.
/// Throws std::invalid_argument when the direction sampling is not antipode-exact.
SolutionSet solve_bu(const SampledFamily& fam);

enum class SpanStatus { essential, not_essential, inconclusive };

struct SpanningReport {
    SpanStatus status = SpanStatus::not_essential;
    bool surjective = false;
    bool essential = false;
    std::size_t w_cells = 0;
    std::size_t empty_fibers = 0;
    std::size_t flagged = 0;
    std::size_t components = 0;
    double eps = 0;
    bool hypothesis_holds = true;
    std::string hypothesis;
    std::vector<std::pair<std::size_t, std::size_t>> witness;   ///< (W cell, D cell) pairs
    std::vector<std::string> notes;
    EssentialityReport detail;
};

/// Spanning certificate for a solution set: surjectivity of the footprint onto W cells, then
/// H-essentiality of the projection (K, K over ∂W) -> (W, ∂W) in degree dim W.
SpanningReport spanning_check(const SolutionSet& sol, const SampledFamily& fam);

/// Property S of Z itself for W × S^n (box clouds; always true for graphs).
bool family_spans(const SampledFamily& fam, std::string* detail = nullptr);

const char* to_string(SpanStatus s);

namespace families {
/// Names of the built-in one-dimensional families on S^1 (W = point, interval or circle).
const std::vector<std::string>& circle_names();
/// Names of the built-in two-dimensional families on S^2.
const std::vector<std::string>& sphere_names();
/// A built-in family by name; throws std::invalid_argument for unknown names.
FamilyFunction named(const std::string& name);
/// Σ_k a_k cos kθ + b_k sin kθ + c on S^1, independent of w.
FamilyFunction trig(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs, double constant = 0);
}  // namespace families

}  // namespace pbu
