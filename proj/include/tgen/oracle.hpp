#ifndef TGEN_ORACLE_HPP
#define TGEN_ORACLE_HPP

// Brute-force reference pipeline.  It generates every face of every maximal
// simplex, closes relations by fixed-point iteration and quotients full
// boundary matrices afterwards.  Nothing here is shared with the fast path
// beyond the Simplex type and its ordering, so the two can check each other.

#include <cstddef>
#include <vector>

#include "tgen/boundary.hpp"
#include "tgen/genset.hpp"
#include "tgen/relmap.hpp"

namespace tgen::oracle
{

/// Refuses inputs with more faces than this.
inline constexpr std::size_t max_faces = std::size_t{1} << 16;

/// faces[k] is the sorted, duplicate-free list of k-faces.
struct FullComplex
{
    std::vector<std::vector<Simplex>> faces;

    std::size_t total() const;
};

FullComplex naive_complex(const GeneratingSet& g);

/// The simplicial complex whose simplices are all nonempty subsets of the
/// given vertex sets.
FullComplex complex_from_supports(const std::vector<std::vector<Vertex>>& supports);

RelationMap naive_closure(const GeneratingSet& g);

/// Unquotiented boundary matrices over the complex's own face lists.
std::vector<BoundaryMatrix> naive_boundaries(const FullComplex& complex);

/// Full matrices folded onto representatives: each non-representative row is
/// added into its representative's row, then non-representative rows and
/// columns are removed.
BoundaryComplex naive_boundaries(const GeneratingSet& g);

} // namespace tgen::oracle

#endif
