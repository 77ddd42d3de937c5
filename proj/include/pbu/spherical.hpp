#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pbu/bu_family.hpp"

namespace pbu {

struct Vec2 {
    double x = 0, y = 0;
};

/// Planar region W bounded by closed polygons, with boundary data Y given as samples
/// (s, e) over the concatenated arc length of the loops.
struct ChordScene {
    std::vector<std::vector<Vec2>> loops;
    std::vector<std::pair<double, double>> boundary_values;
    int nx = 64, ny = 64;
    int dir_res = 256;
    std::optional<double> eps;
    /// Largest arc-length gap bridged by interpolation; default 2.5 x median sample spacing.
    std::optional<double> max_gap;
};

/// A boundary hit w + λx on loop `loop`, edge `edge`, at arc length `s`.
struct RayHit {
    double lambda = 0;
    int loop = 0;
    int edge = 0;
    double s = 0;
    Vec2 point;
};

/// Validated geometry derived from a scene.
class SceneGeometry {
public:
    explicit SceneGeometry(const ChordScene& scene);

    const ChordScene& scene() const { return scene_; }
    double total_length() const { return loop_start_.back(); }
    double loop_start(int loop) const { return loop_start_[loop]; }
    double loop_length(int loop) const { return loop_start_[loop + 1] - loop_start_[loop]; }
    Vec2 point_at(double s) const;
    int loop_of(double s) const;

    /// Values of Y at arc length s (empty across gaps).
    std::vector<double> values_at(double s) const;
    /// Distance from p to the nearest boundary edge.
    double boundary_distance(Vec2 p) const;
    bool inside(Vec2 p) const;

    /// All hits with λ > 0, ascending. Rays through a vertex treat the vertex as lying on the
    /// clockwise side of the ray. Throws std::invalid_argument when w is on the boundary.
    std::vector<RayHit> hits(Vec2 w, Vec2 x, bool check_origin = true) const;

    double diameter() const;
    /// Largest |Δe| / Δs between neighboring samples on the same loop.
    double lipschitz() const;
    double default_eps() const;
    double median_spacing() const;

private:
    ChordScene scene_;
    std::vector<double> loop_start_;
    std::vector<std::vector<double>> vertex_s_;
    struct Sample {
        double s, e;
        int loop;
    };
    std::vector<Sample> samples_;    ///< sorted by s
    double max_gap_ = 0;
};

/// λ values of ray_hits, ascending.
std::vector<double> ray_hits(const ChordScene& scene, Vec2 w, Vec2 x);

/// The grid region of W: grid points inside W, squares with all corners inside.
ParameterModel scene_region(const SceneGeometry& g);

/// Box cloud Z over region × S^1 × R: point boxes at every hit, widened to their nearest
/// neighbors (one grid cell in W and in direction) within the continuation bound.
SampledFamily build_spherical(const ChordScene& scene);

struct ChordSolution {
    Vec2 w;
    double theta = 0;          ///< direction angle
    Vec2 x1, x2;               ///< endpoints along +x and -x
    double e = 0;
    bool refined = false;      ///< root located by bisection or exact sample zero
};

/// Direction classes θ ∈ [0, π) whose ±x rays carry matching values, located by sign changes
/// of e_+(θ) - e_-(θ) between direction samples and refined by bisection, plus exact sample
/// zeros. Pairs of hits are matched by their rank along each ray.
std::vector<ChordSolution> chord_solutions(const ChordScene& scene, Vec2 w);
/// The same solutions together with their antipodal copies (θ + π, endpoints swapped).
std::vector<ChordSolution> oriented_chord_solutions(const ChordScene& scene, Vec2 w);

struct ChordSpanReport {
    bool hypothesis_holds = false;
    std::string hypothesis;
    SpanningReport conclusion;
    bool probative = false;
    double eps = 0;
    std::size_t region_vertices = 0;
    std::size_t region_triangles = 0;
    std::vector<std::string> notes;
};

/// Property S of Y for (∂W, ∅) in degree 1: the footprint of Y over ∂W × e-bins must hit the
/// fundamental class of every boundary loop.
bool boundary_data_spans(const SceneGeometry& g, std::string* detail = nullptr);

ChordSpanReport chord_span_check(const ChordScene& scene);

/// SVG overlay of the polygons and the given chords.
std::string chord_svg(const ChordScene& scene, const std::vector<ChordSolution>& chords);

namespace scenes {
/// Regular n-gon inscribed in the circle of radius r centered at c, counterclockwise.
std::vector<Vec2> ngon(int n, double r, Vec2 c = {});
/// Samples f at every polygon vertex and `per_edge` interior points per edge.
std::vector<std::pair<double, double>> sample_boundary(const std::vector<std::vector<Vec2>>& loops,
                                                       const std::function<double(Vec2)>& f, int per_edge);
ChordScene disk_cos(int sides = 256);
ChordScene square_first_coordinate();
ChordScene annulus_first_coordinate(int sides = 128);
}  // namespace scenes

}  // namespace pbu
