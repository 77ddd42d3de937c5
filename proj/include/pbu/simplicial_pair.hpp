#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace pbu {

/// Vertex indices, strictly increasing.
using Simplex = std::vector<int>;

/// Mod-2 chain: strictly increasing indices into the simplex list of one dimension.
using Chain = std::vector<std::size_t>;

/// Symmetric difference of two sorted chains.
Chain chain_add(const Chain& a, const Chain& b);
/// Sorts and cancels repeated indices in pairs.
Chain chain_normalize(std::vector<std::size_t> raw);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

/// Raised when input does not describe a valid complex, pair, map or chain.
class TopologyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reference to a simplex by dimension and index.
struct CellRef {
    int dim = -1;
    std::size_t index = 0;
    bool operator==(const CellRef&) const = default;
    auto operator<=>(const CellRef&) const = default;
};

/// A finite simplicial complex with a face-closed subcomplex, immutable after construction.
///
/// Every vertex 0..vertex_count()-1 is a 0-simplex. Within each dimension simplices are
/// sorted lexicographically by vertex tuple; that order fixes every matrix and chain index.
class SimplicialPair {
public:
    SimplicialPair();

    /// Canonicalizes vertex order, closes under faces and validates.
    /// Throws TopologyError on duplicate simplices, repeated or out-of-range vertices, and
    /// sub simplices that are not faces of listed simplices.
    static SimplicialPair build(int vertex_count, const std::vector<Simplex>& simplices,
                                const std::vector<Simplex>& sub = {});

    /// Same complex with a new subcomplex given as per-dimension masks (must be face-closed).
    SimplicialPair with_sub(std::vector<std::vector<bool>> sub_mask) const;

    int vertex_count() const { return static_cast<int>(count(0)); }
    /// Top dimension, -1 for the empty complex.
    int dimension() const { return static_cast<int>(data_->simplices.size()) - 1; }

    std::size_t count(int k) const;
    std::size_t total_count() const;
    const std::vector<Simplex>& simplices(int k) const;
    const Simplex& simplex(int k, std::size_t i) const { return data_->simplices[k][i]; }
    std::optional<std::size_t> index_of(const Simplex& s) const;

    bool in_sub(int k, std::size_t i) const { return data_->sub[k][i]; }
    const std::vector<bool>& sub_mask(int k) const;
    std::size_t sub_count(int k) const;
    bool sub_empty() const;

    /// Indices (in dimension k-1) of the codimension-one faces of simplex (k, i), ascending.
    std::vector<std::size_t> faces(int k, std::size_t i) const;
    /// Indices (in dimension k+1) of simplices having (k, i) as a facet, ascending.
    const std::vector<std::size_t>& cofaces(int k, std::size_t i) const;

    /// Number of k-simplices outside the subcomplex.
    std::size_t relative_count(int k) const;
    /// Position among the relative k-simplices, or nullopt for sub simplices.
    std::optional<std::size_t> relative_index(int k, std::size_t i) const;
    /// Absolute indices of the relative k-simplices, ascending.
    const std::vector<std::size_t>& relative_simplices(int k) const;

    /// Mod-2 boundary of a chain, without dropping sub faces.
    Chain boundary(int k, const Chain& chain) const;
    /// Removes entries lying in the subcomplex.
    Chain drop_sub(int k, const Chain& chain) const;

    /// Content hash of simplices and subcomplex.
    std::uint64_t fingerprint() const { return data_->fingerprint; }

    /// Euler characteristic of the relative chain complex.
    long long relative_euler_characteristic() const;

    bool operator==(const SimplicialPair& other) const;

private:
    struct Data {
        std::vector<std::vector<Simplex>> simplices;
        std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index;
        std::vector<std::vector<bool>> sub;
        std::vector<std::vector<std::size_t>> relative_list;
        std::vector<std::vector<std::ptrdiff_t>> relative_pos;
        std::vector<std::vector<std::vector<std::size_t>>> cofaces;
        std::uint64_t fingerprint = 0;
    };

    static std::shared_ptr<Data> assemble(std::vector<std::vector<Simplex>> by_dim,
                                          std::vector<std::vector<bool>> sub);

    std::shared_ptr<const Data> data_;
};

/// Result of extracting a subcomplex pair (Y, B) as a standalone pair.
struct Subpair {
    SimplicialPair pair;
    std::vector<int> vertex_origin;                 ///< new vertex -> old vertex
    std::vector<std::vector<std::size_t>> origin;   ///< per dim: new simplex -> old simplex
};

/// Builds (Y, B) from face-closed masks over the simplices of `ambient`. Vertex labels are
/// compacted preserving their order.
Subpair extract_subpair(const SimplicialPair& ambient, const std::vector<std::vector<bool>>& y_mask,
                        const std::vector<std::vector<bool>>& b_mask);

/// Face-closed mask of all simplices in the closure of the given cells.
std::vector<std::vector<bool>> closure_mask(const SimplicialPair& p, const std::vector<CellRef>& cells);

/// Mask of the whole complex / of the subcomplex / empty.
std::vector<std::vector<bool>> full_mask(const SimplicialPair& p);
std::vector<std::vector<bool>> empty_mask(const SimplicialPair& p);
std::vector<std::vector<bool>> sub_mask_of(const SimplicialPair& p);
bool mask_is_face_closed(const SimplicialPair& p, const std::vector<std::vector<bool>>& mask);

/// Barycentric subdivision. New vertices are the old simplices ordered by (dimension, index),
/// so the vertices of every new simplex are increasing along its flag.
struct Subdivision {
    SimplicialPair pair;
    std::vector<CellRef> vertex_origin;            ///< new vertex -> old simplex (barycenter)
    std::vector<std::vector<CellRef>> carrier;     ///< per dim: new simplex -> smallest old carrier
    std::vector<std::size_t> vertex_offset;        ///< first new vertex id of each old dimension

    int vertex_of(CellRef old) const { return static_cast<int>(vertex_offset[old.dim] + old.index); }
    /// Subdivision chain map: each old k-simplex goes to the sum of its (k+1)! full flags.
    Chain subdivide_chain(int k, const Chain& chain) const;
};

Subdivision barycentric_subdivision(const SimplicialPair& p);

/// Quotient of a complex by a simplicial involution on vertices.
struct Quotient {
    SimplicialPair pair;
    std::vector<int> vertex_class;                  ///< old vertex -> quotient vertex
    std::vector<std::vector<std::size_t>> image;    ///< per dim: old simplex -> quotient simplex
};

/// Throws TopologyError when the quotient is not a simplicial complex (a simplex meets its own
/// orbit, or two unrelated simplices share an image). The quotient sub is the image of the sub.
Quotient quotient_by_involution(const SimplicialPair& p, const std::vector<int>& involution);

/// Standard small models used across tests and tools.
namespace models {
SimplicialPair point();
SimplicialPair two_points();
SimplicialPair circle(int n);             ///< n-gon boundary, n >= 3
SimplicialPair interval_rel_boundary(int edges = 2);
SimplicialPair interval(int edges = 2);
SimplicialPair disjoint_circles(int n, int copies);
SimplicialPair octahedron();               ///< 2-sphere
SimplicialPair torus7();                   ///< 7-vertex minimal torus
SimplicialPair rp2_6();                    ///< 6-vertex projective plane
SimplicialPair mobius5_rel_boundary();     ///< 5-vertex Moebius band relative to its boundary circle
SimplicialPair mobius5();
}  // namespace models

}  // namespace pbu
