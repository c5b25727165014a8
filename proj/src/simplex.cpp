#include "tgen/simplex.hpp"

#include <algorithm>
#include <limits>

#include "tgen/error.hpp"

namespace tgen
{

const char* to_string(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::DimensionTooLow: return "DimensionTooLow";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotSupported: return "NotSupported";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyColumn: return "EmptyColumn";
    case ErrorKind::VertexNotInColumn: return "VertexNotInColumn";
    case ErrorKind::InvalidIncidence: return "InvalidIncidence";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::ChainLawViolation: return "ChainLawViolation";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::OracleTooLarge: return "OracleTooLarge";
    }
    return "Error";
}

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.empty())
        throw Error(ErrorKind::Validation, "simplex must have at least one vertex");
    for (std::size_t i = 1; i < vertices_.size(); ++i)
    {
        if (vertices_[i - 1] >= vertices_[i])
            throw Error(ErrorKind::Validation,
                        "simplex vertices must be strictly ascending: " + to_string());
    }
}

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::vector<Vertex>(vertices))
{
}

Simplex Simplex::without(std::size_t i) const
{
    if (vertices_.size() < 2)
        throw Error(ErrorKind::DimensionTooLow, "a vertex has no faces");
    std::vector<Vertex> face;
    face.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j)
    {
        if (j != i)
            face.push_back(vertices_[j]);
    }
    return Simplex(Unchecked{}, std::move(face));
}

std::string Simplex::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
    {
        if (i > 0)
            out += ',';
        out += std::to_string(vertices_[i]);
    }
    return out;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b)
{
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                  b.vertices_.begin(), b.vertices_.end());
}

std::vector<Simplex> boundary_faces(const Simplex& a)
{
    if (a.dimension() == 0)
        throw Error(ErrorKind::DimensionTooLow, "boundary of a vertex is undefined");
    std::vector<Simplex> faces;
    faces.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        faces.push_back(a.without(i));
    return faces;
}

std::vector<Simplex> enumerate_faces(const Simplex& a, std::size_t k)
{
    std::vector<Simplex> faces;
    const std::size_t n = a.size();
    if (k + 1 > n)
        return faces;

    // Walk (k+1)-subsets of positions in lex order.
    std::vector<std::size_t> idx(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
        idx[i] = i;
    while (true)
    {
        std::vector<Vertex> face;
        face.reserve(k + 1);
        for (auto i : idx)
            face.push_back(a[i]);
        faces.emplace_back(std::move(face));

        std::size_t t = k + 1;
        while (t > 0 && idx[t - 1] == n - (k + 1) + (t - 1))
            --t;
        if (t == 0)
            break;
        ++idx[t - 1];
        for (std::size_t j = t; j <= k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return faces;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "integer overflow in face counting");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorKind::Overflow, "integer overflow in face counting");
    return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    // c * (n - i) is divisible by (i + 1) after each step; the 128-bit
    // intermediate keeps that product exact.
    unsigned __int128 c = 1;
    for (std::uint64_t i = 0; i < k; ++i)
    {
        c = c * (n - i) / (i + 1);
        if (c > std::numeric_limits<std::uint64_t>::max())
            throw Error(ErrorKind::Overflow,
                        "binomial(" + std::to_string(n) + "," + std::to_string(k) +
                            ") overflows 64 bits");
    }
    return static_cast<std::uint64_t>(c);
}

} // namespace tgen

std::size_t std::hash<tgen::Simplex>::operator()(const tgen::Simplex& s) const noexcept
{
    std::size_t h = s.size();
    for (auto v : s.vertices())
        h ^= std::hash<tgen::Vertex>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}
