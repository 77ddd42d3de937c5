#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pbu/bit_matrix.hpp"
#include "pbu/simplicial_pair.hpp"

namespace pbu {

/// Vertex map between pairs that sends simplices to simplices and sub into sub.
class SimplicialMap {
public:
    /// Throws TopologyError if some simplex image is missing from the target or a sub simplex
    /// lands outside the target sub.
    SimplicialMap(SimplicialPair source, SimplicialPair target, std::vector<int> vertex_map);

    const SimplicialPair& source() const { return source_; }
    const SimplicialPair& target() const { return target_; }
    const std::vector<int>& vertex_map() const { return vertex_map_; }

    /// Image simplex of (k, i); its dimension drops when the image is degenerate.
    CellRef image(int k, std::size_t i) const;
    /// Chain-level pushforward; degenerate images contribute zero.
    Chain push_forward(int k, const Chain& chain) const;

    /// True when every simplex keeps its vertex order (weakly) under the map.
    bool order_preserving() const;
    /// True when the source sub is exactly the preimage of the target sub.
    bool sub_is_preimage() const;

    static SimplicialMap identity(const SimplicialPair& p);

private:
    SimplicialPair source_;
    SimplicialPair target_;
    std::vector<int> vertex_map_;
};

/// g after f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// A relative cycle of a given degree on a pair, identified by the pair's fingerprint.
struct HomologyClass {
    int degree = 0;
    Chain chain;            ///< absolute simplex indices of dimension `degree`, none in sub
    std::uint64_t home = 0;
};

/// Matrix of the relative boundary operator C_k -> C_{k-1}, rows and columns indexed by
/// relative simplices in lexicographic order. Out-of-range k gives an empty matrix of the
/// correct shape.
Z2Matrix boundary_matrix(const SimplicialPair& p, int k);

/// Reduced boundary data of a pair in one degree: homology basis, cycle and boundary tests,
/// and coordinates of relative cycles in that basis.
///
/// Representatives come from column reduction in lexicographic simplex order: a reduced
/// cycle born at relative simplex j is kept when j is not the pivot of any reduced
/// (k+1)-boundary.
class DegreeHomology {
public:
    DegreeHomology(const SimplicialPair& p, int k);

    int degree() const { return degree_; }
    std::size_t rank() const { return reps_.size(); }
    std::size_t cycle_rank() const { return cycle_rank_; }
    std::size_t boundary_rank() const { return boundary_rank_; }

    /// Representatives as absolute chains.
    const std::vector<Chain>& representatives() const { return reps_; }
    HomologyClass representative_class(std::size_t i) const;

    bool is_relative_cycle(const Chain& chain) const;
    /// Coordinates in the representative basis, or nullopt when `chain` is not a relative cycle.
    /// Entries in the sub are ignored.
    std::optional<BitVector> coordinates(const Chain& chain) const;
    bool is_boundary(const Chain& chain) const;
    /// Absolute chain of the basis combination given by `coords`.
    Chain combination(const BitVector& coords) const;

    const SimplicialPair& pair() const { return pair_; }

private:
    using RelChain = std::vector<std::size_t>;

    RelChain to_relative(const Chain& chain) const;
    Chain to_absolute(const RelChain& rel) const;

    SimplicialPair pair_;
    int degree_;
    std::size_t cycle_rank_ = 0;
    std::size_t boundary_rank_ = 0;
    std::vector<RelChain> reduced_boundaries_;       ///< reduced columns of the (k+1)-boundary
    std::map<std::size_t, std::size_t> boundary_pivot_;  ///< low row -> reduced column
    std::map<std::size_t, std::size_t> rep_pivot_;       ///< low row -> representative
    std::vector<RelChain> rep_rel_;
    std::vector<Chain> reps_;
};

/// Ranks and representatives of H_k for every k in [0, dim].
struct HomologyReport {
    std::vector<std::size_t> ranks;
    std::vector<std::vector<Chain>> representatives;
};
HomologyReport homology(const SimplicialPair& p);

/// Matrix of f_* : H_k(source) -> H_k(target) in the representative bases.
Z2Matrix induced_map(const SimplicialMap& f, int k);
/// Same, with the homology of source and target already computed in degree k.
Z2Matrix induced_map(const SimplicialMap& f, const DegreeHomology& src, const DegreeHomology& tgt);

/// Sum of all top simplices outside the sub. Throws TopologyError naming an interior
/// codimension-one simplex that is not a face of exactly two top simplices outside the sub.
HomologyClass fundamental_class(const SimplicialPair& p);

struct EssentialityReport {
    bool essential = false;
    int degree = 0;
    std::size_t image_rank = 0;
    std::size_t target_rank = 0;
    Z2Matrix induced;
    std::optional<HomologyClass> witness;   ///< class mapping to the target fundamental class
    std::vector<std::string> warnings;
    std::string refutation;
};

/// Surjectivity of f_* onto H_d(target). `degree` defaults to the target dimension.
EssentialityReport is_h_essential(const SimplicialMap& f, std::optional<int> degree = std::nullopt);

/// Restriction of a class on (X, A) to an admissible subpair (Y, B) of X.
struct Restriction {
    Subpair subpair;
    HomologyClass cls;
};

/// Returns an empty string when (Y, B) is admissible for (X, A); otherwise a diagnostic naming
/// the first violating simplex. Admissible means Y minus B avoids A and contains the open star
/// (taken in X minus A) of each of its simplices.
std::string admissibility_violation(const SimplicialPair& p, const std::vector<std::vector<bool>>& y_mask,
                                    const std::vector<std::vector<bool>>& b_mask);

/// Throws TopologyError on an inadmissible target.
Restriction restrict_class(const SimplicialPair& p, const HomologyClass& alpha,
                           const std::vector<std::vector<bool>>& y_mask,
                           const std::vector<std::vector<bool>>& b_mask);

/// Maps of the long exact sequence of (X, A) in the representative bases:
/// i_k : H_k(A) -> H_k(X), j_k : H_k(X) -> H_k(X, A), d_k : H_k(X, A) -> H_{k-1}(A).
struct LongExactSequence {
    std::vector<std::size_t> rank_sub, rank_abs, rank_rel;
    std::vector<Z2Matrix> i_star, j_star, connecting;
};
LongExactSequence long_exact_sequence(const SimplicialPair& p);

/// Preimage of a face-closed mask under a simplicial map (face-closed again).
std::vector<std::vector<bool>> preimage_mask(const SimplicialMap& f, const std::vector<std::vector<bool>>& mask);

}  // namespace pbu
