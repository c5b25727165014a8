#ifndef TGEN_INCIDENCE_HPP
#define TGEN_INCIDENCE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tgen/genset.hpp"

namespace tgen
{

/// 0/1 matrix: rows are vertices, columns are maximal simplices whose vertex
/// sets are the column supports.
class IncidenceMatrix
{
public:
    IncidenceMatrix() = default;
    IncidenceMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    /// One inner vector per column, listing its support rows.
    static IncidenceMatrix from_supports(std::size_t rows,
                                         const std::vector<std::vector<std::size_t>>& supports);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c] != 0; }
    void set(std::size_t r, std::size_t c, bool value);

    /// Ascending support rows of column c.
    std::vector<std::size_t> support(std::size_t c) const;

    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

enum class IncidenceMode
{
    /// Every column has at least two nonzero rows.
    Strict,
    /// Single-row columns are accepted as maximal vertices.
    Permissive,
};

/// Throws Error(EmptyColumn) for an empty column, Error(InvalidIncidence)
/// for a single-row column in strict mode or a column whose support lies
/// inside another's.
void validate_incidence(const IncidenceMatrix& m, IncidenceMode mode = IncidenceMode::Strict);

/// One pass over the matrix: a column with k nonzeros is a maximal
/// (k-1)-simplex.  `scanned`, if given, receives the number of entries read.
ShapeList extract_shape(const IncidenceMatrix& m, std::size_t* scanned = nullptr);

/// Rank of row v within the support of column col.
std::size_t vertex_rank(const IncidenceMatrix& m, std::size_t col, std::size_t v);

/// Label of vertex i of the ordinal-th maximal simplex of dimension col_dim,
/// matching materialize_maximal(shape).
Vertex global_label(const ShapeList& shape, std::uint32_t col_dim, std::uint64_t ordinal, std::uint32_t i);

/// One relation per pair of columns with intersecting supports, pairing the
/// faces spanned by the shared rows.
std::vector<Relation> extract_relations(const IncidenceMatrix& m, const ShapeList& shape);

GeneratingSet from_incidence(const IncidenceMatrix& m, IncidenceMode mode = IncidenceMode::Strict);

/**
 * Rows are vertex classes, columns follow materialize_maximal order.  Rows
 * keep the vertex order of every maximal simplex when some row order can;
 * otherwise the least representative goes first.  Throws Error(NotRepresentable) when `g` is not
 * determined by its vertex identifications: two vertices of one maximal
 * simplex share a class, faces with the same vertex classes are not
 * identified, or one maximal simplex collapses into another.
 */
IncidenceMatrix to_incidence(const GeneratingSet& g);

IncidenceMatrix parse_incidence(std::istream& in);
IncidenceMatrix parse_incidence(const std::string& text);
std::string serialize_incidence(const IncidenceMatrix& m);

} // namespace tgen

#endif
