#ifndef TGEN_GENSET_HPP
#define TGEN_GENSET_HPP

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "tgen/simplex.hpp"

namespace tgen
{

/// `count` maximal simplices of dimension `dim`.
struct ShapeEntry
{
    std::uint64_t count = 0;
    std::uint32_t dim = 0;

    friend bool operator==(const ShapeEntry&, const ShapeEntry&) = default;
};

/**
 * The maximal-simplex data of a generating set.  Entries have positive
 * counts and strictly increasing dimensions.
 */
class ShapeList
{
public:
    ShapeList() = default;
    /// Throws Error(Validation) on a zero count or non-increasing dimensions.
    explicit ShapeList(std::vector<ShapeEntry> entries);
    ShapeList(std::initializer_list<ShapeEntry> entries);

    const std::vector<ShapeEntry>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    /// Largest dimension present; 0 for an empty shape.
    std::uint32_t max_dim() const noexcept { return entries_.empty() ? 0 : entries_.back().dim; }

    friend bool operator==(const ShapeList&, const ShapeList&) = default;

private:
    std::vector<ShapeEntry> entries_;
};

/// An identification among two or more distinct simplices of one dimension.
class Relation
{
public:
    /// Throws Error(ShapeMismatch) on mixed dimensions and Error(Validation)
    /// on fewer than two members or repeated members.
    explicit Relation(std::vector<Simplex> members);
    Relation(std::initializer_list<Simplex> members);

    const std::vector<Simplex>& members() const noexcept { return members_; }
    std::size_t dimension() const noexcept { return members_.front().dimension(); }

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::vector<Simplex> members_;
};

/**
 * A shape list plus relations among faces of the maximal simplices it
 * generates.  Construction validates that every relation member lies inside
 * exactly one maximal simplex of materialize_maximal(shape).
 */
class GeneratingSet
{
public:
    GeneratingSet() = default;
    GeneratingSet(ShapeList shape, std::vector<Relation> relations);

    const ShapeList& shape() const noexcept { return shape_; }
    const std::vector<Relation>& relations() const noexcept { return relations_; }

    /// Non-fatal diagnostics collected during validation, e.g. a relation
    /// identifying two faces of the same maximal simplex.
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    friend bool operator==(const GeneratingSet& a, const GeneratingSet& b)
    {
        return a.shape_ == b.shape_ && a.relations_ == b.relations_;
    }

private:
    ShapeList shape_;
    std::vector<Relation> relations_;
    std::vector<std::string> warnings_;
};

/// Number of k-faces generated by `shape` before relations:
/// sum over entries of count * C(dim + 1, k + 1).
std::uint64_t face_count(const ShapeList& shape, std::uint64_t k);

/// face_count restricted to entries with dim <= m; 0 when m < 0.
std::uint64_t face_count_through(const ShapeList& shape, std::int64_t m, std::uint64_t k);

/// Maximal simplices on consecutive labels starting at 0, in shape order.
std::vector<Simplex> materialize_maximal(const ShapeList& shape);

/// Index into materialize_maximal(shape) of the maximal simplex containing
/// every vertex of `a`, or -1 when no single maximal simplex contains it.
std::int64_t owning_maximal(const ShapeList& shape, const Simplex& a);

/// Pairs a[i] with b[i]; throws Error(ShapeMismatch) on length or
/// dimension mismatch.
std::vector<Relation> couple_simps(const std::vector<Simplex>& a, const std::vector<Simplex>& b);

GeneratingSet parse_genset(std::istream& in);
GeneratingSet parse_genset(const std::string& text);
std::string serialize_genset(const GeneratingSet& g);

} // namespace tgen

#endif
