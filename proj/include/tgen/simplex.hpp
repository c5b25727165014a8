#ifndef TGEN_SIMPLEX_HPP
#define TGEN_SIMPLEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tgen
{

using Vertex = std::uint32_t;

/**
 * A simplex stored as its strictly ascending list of vertex labels.
 *
 * Simplices are totally ordered first by dimension and then
 * lexicographically on their vertex sequences.  This is the one canonical
 * order used for every index and representative choice in the library.
 */
class Simplex
{
public:
    /// Throws Error(Validation) unless `vertices` is non-empty and strictly
    /// ascending.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices);

    std::size_t dimension() const noexcept { return vertices_.size() - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    Vertex front() const noexcept { return vertices_.front(); }
    Vertex back() const noexcept { return vertices_.back(); }

    /// The face obtained by deleting the vertex at position `i`.
    /// Throws Error(DimensionTooLow) on a vertex.
    Simplex without(std::size_t i) const;

    /// Comma separated labels, e.g. "0,1,2".
    std::string to_string() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

private:
    struct Unchecked
    {
    };
    Simplex(Unchecked, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

    std::vector<Vertex> vertices_;
};

/// The codimension-1 faces [a - a[0], a - a[1], ..., a - a[k]] in vertex
/// order; face i carries boundary coefficient (-1)^i.
std::vector<Simplex> boundary_faces(const Simplex& a);

/// All k-faces of `a` in lexicographic order, empty when k > dim(a).
std::vector<Simplex> enumerate_faces(const Simplex& a, std::size_t k);

/// Exact binomial coefficient; throws Error(Overflow) if it does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Overflow-checked arithmetic helpers shared by the counting code.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

} // namespace tgen

template <>
struct std::hash<tgen::Simplex>
{
    std::size_t operator()(const tgen::Simplex& s) const noexcept;
};

#endif
