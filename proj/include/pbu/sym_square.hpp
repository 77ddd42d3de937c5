#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pbu/homology.hpp"
#include "pbu/simplicial_pair.hpp"

namespace pbu {

using Mask = std::vector<std::vector<bool>>;

/// Staircase triangulation of X × Y. Vertex (u, v) has id u * |Y_0| + v, so every simplex is a
/// chain that is nondecreasing in both coordinates. The sub is A × Y ∪ X × B.
struct ProductComplex {
    SimplicialPair left, right;
    SimplicialPair pair;

    int vertex(int u, int v) const { return u * right.vertex_count() + v; }
    std::pair<int, int> coordinates(int w) const { return {w / right.vertex_count(), w % right.vertex_count()}; }
    /// Projections of a product simplex onto each factor.
    CellRef left_cell(int k, std::size_t i) const;
    CellRef right_cell(int k, std::size_t i) const;
    /// Top cells (dimension a + b) of the staircase subdivision of a × b.
    Chain product_cells(CellRef a, CellRef b) const;
};

ProductComplex product_triangulation(const SimplicialPair& p, const SimplicialPair& q);

/// Enumerates the staircase paths of simplex a × simplex b as product vertex lists.
std::vector<Simplex> staircase_cells(const Simplex& a, const Simplex& b, int right_vertex_count);

/// Finite model of (X, A)^s at a subdivision level n: X_n = sd^n X, the staircase product
/// X_n × X_n, one barycentric subdivision of it, then the quotient by the factor swap.
struct SymSquareModel {
    int level = 0;
    std::vector<SimplicialPair> levels;      ///< X_0 .. X_n
    std::vector<Subdivision> refinements;    ///< X_j -> X_{j+1}
    ProductComplex product;                  ///< sub = Δ ∪ A×X ∪ X×A
    std::vector<std::vector<std::size_t>> swap;  ///< per dim: product simplex -> its swap
    Subdivision flags;                       ///< sd of the product
    Quotient quotient;
    SimplicialPair pair;                     ///< the quotient pair
    Mask diag;                               ///< image of the diagonal
    /// Per dim: quotient simplex -> projections (ρ, ρ') of its top product cell, ρ <= ρ'.
    std::vector<std::vector<std::pair<CellRef, CellRef>>> proj;

    const SimplicialPair& base() const { return levels.back(); }
    /// Smallest simplex of X_target containing the simplex c of X_level.
    CellRef carrier(CellRef c, int target_level) const;
    /// Subdivides a chain on X_0 down to X_level.
    Chain subdivide_from_base(int k, const Chain& chain) const;
    /// Quotient simplex of the full flag of the product cell (dim, index) taken in vertex order.
    std::size_t flag_image(int dim, std::size_t cell) const;
    /// The quotient pair with sub enlarged by a diagonal neighborhood.
    SimplicialPair with_neighborhood(const Mask& u) const;
};

/// Builds the model at the given level. Throws TopologyError if the quotient is not simplicial.
SymSquareModel sym_square_space(const SimplicialPair& p, int level = 0);

/// Quotient cells whose top product cell has both projections carried, at scale level
/// `scale` <= level, by simplices lying in the closed star of one common vertex of X_scale.
/// Face-closed and contains the diagonal; shrinks as the scale grows.
Mask carrier_neighborhood(const SymSquareModel& m, int scale);
Mask whole_neighborhood(const SymSquareModel& m);
Mask diagonal_neighborhood(const SymSquareModel& m);

/// True when, for all i, j, the cells of σ_i × σ_j either all lie in U or σ_i and σ_j are
/// disjoint. The chain lives on X_level.
bool check_smallness(const SymSquareModel& m, int k, const Chain& chain, const Mask& u);

/// Σ_{i<j} p_*(σ_i × σ_j) as a chain of 2k-simplices of the quotient; chain lives on X_level.
Chain sym_square_chain(const SymSquareModel& m, int k, const Chain& chain);

enum class NeighborhoodKind { carrier, whole, diagonal };

struct SymSquareOptions {
    int scale = 1;                 ///< level at which the carrier neighborhood is measured
    NeighborhoodKind kind = NeighborhoodKind::carrier;
    int max_subdivisions = 5;
};

struct SquaredClass {
    SymSquareModel model;
    Mask neighborhood;
    SimplicialPair target;         ///< quotient with sub ∪ U
    HomologyClass cls;             ///< degree 2k on target
    int subdivisions = 0;          ///< levels beyond the scale needed for smallness
};

/// α^s for a class α on p. Subdivides until the representative is small and throws
/// TopologyError naming the cap when that never happens.
SquaredClass sym_square_class(const SimplicialPair& p, const HomologyClass& alpha, const SymSquareOptions& opt = {});

/// Level-n subdivision of a simplicial map f: X -> Y, as a vertex map X_n -> Y_n.
std::vector<int> subdivided_vertex_map(const SimplicialMap& f, const SymSquareModel& mx, const SymSquareModel& my);

/// Vertex map of f^s between the quotient models (same level). Throws TopologyError when
/// f × f does not preserve the staircase, which only happens at level 0 for maps that
/// reverse vertex order.
std::vector<int> sym_vertex_map(const SimplicialMap& f, const SymSquareModel& mx, const SymSquareModel& my);

/// f^s as a map of the quotient pairs (subs Δ ∪ A×X ∪ X×A).
SimplicialMap induced_sym_map(const SimplicialMap& f, const SymSquareModel& mx, const SymSquareModel& my);

}  // namespace pbu
