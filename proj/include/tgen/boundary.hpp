#ifndef TGEN_BOUNDARY_HPP
#define TGEN_BOUNDARY_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgen/genset.hpp"
#include "tgen/relmap.hpp"
#include "tgen/simplex.hpp"

namespace tgen
{

/// Per-dimension position of every representative simplex, in canonical
/// (lexicographic) order.
class IndexMap
{
public:
    IndexMap() = default;
    explicit IndexMap(std::vector<std::vector<Simplex>> reps_by_dim);

    /// Number of dimensions covered (max dimension + 1, or 0 when empty).
    std::size_t dimensions() const noexcept { return reps_.size(); }
    std::size_t count(std::size_t k) const { return k < reps_.size() ? reps_[k].size() : 0; }
    const std::vector<Simplex>& representatives(std::size_t k) const { return reps_.at(k); }

    /// Throws Error(IndexOutOfRange) if `a` is not a representative.
    std::size_t pos(const Simplex& a) const;
    bool contains(const Simplex& a) const;

private:
    std::vector<std::vector<Simplex>> reps_;
    std::vector<std::map<Simplex, std::size_t>> lookup_;
};

/// Sparse integer matrix; stored entries are always nonzero.
class BoundaryMatrix
{
public:
    using Key = std::pair<std::size_t, std::size_t>;

    BoundaryMatrix() = default;
    BoundaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    /// Accumulates into (row, col); a sum of zero removes the entry.
    void add(std::size_t row, std::size_t col, std::int64_t value);
    void set(std::size_t row, std::size_t col, std::int64_t value);
    std::int64_t at(std::size_t row, std::size_t col) const;

    /// Row-major ordered nonzeros.
    const std::map<Key, std::int64_t>& entries() const noexcept { return entries_; }

    friend bool operator==(const BoundaryMatrix&, const BoundaryMatrix&) = default;

private:
    void check(std::size_t row, std::size_t col) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<Key, std::int64_t> entries_;
};

/// D_0..D_N for one generating set.  D_k maps k-representatives to
/// (k-1)-representatives; D_0 has no rows.
struct BoundaryComplex
{
    std::vector<BoundaryMatrix> matrices;
    GeneratingSet genset;
    RelationMap relmap;
    /// Set when built with instrumentation.
    std::optional<std::uint64_t> generations;
};

IndexMap build_index(const GeneratingSet& g, const RelationMap& m);

/**
 * Position of `a` among the d-faces of the relation-free complex of
 * `shape`, computed from the shape alone.  For a maximal simplex this is its
 * ordinal among maximal simplices of its dimension; for other faces it adds
 * the d-faces of all earlier maximal simplices to the lexicographic rank of
 * `a` inside its owning maximal simplex.
 *
 * Throws Error(NotSupported) when `a` is not a face of P(shape).
 */
std::uint64_t pos_closed_form(const Simplex& a, const ShapeList& shape);

/// Working state of one boundary construction.
struct BconContext
{
    const RelationMap& relmap;
    const IndexMap& index;
    std::vector<BoundaryMatrix>& matrices;
    /// Smallest recursion parameter each representative has been expanded
    /// with; a representative's column is filled on first visit only.
    std::map<Simplex, std::size_t> expanded = {};
    std::uint64_t generations = 0;
};

/**
 * Adds the boundary column of `a` (if not yet present) and recurses into the
 * representatives of the faces a - a[i] with i >= p.  Non-representatives
 * return immediately.
 */
void bcon(const Simplex& a, std::size_t p, BconContext& ctx);

struct BuildOptions
{
    /// Drop the highest-dimensional matrix D_N.
    bool drop_top = false;
    bool instrument = false;
};

BoundaryComplex build_all(const GeneratingSet& g, const BuildOptions& options = {});

/// Number of guarded bcon generations; throws Error(NotSupported) when the
/// complex was built without instrumentation.
std::uint64_t generation_count(const BoundaryComplex& d);

/// "matrix k rows cols" stanzas followed by "row col value" lines.
std::string write_boundary_text(const std::vector<BoundaryMatrix>& matrices);
std::vector<BoundaryMatrix> parse_boundary_text(std::istream& in);
std::vector<BoundaryMatrix> parse_boundary_text(const std::string& text);

} // namespace tgen

#endif
