#include "tgen/incidence.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "tgen/error.hpp"
#include "tgen/relmap.hpp"

namespace tgen
{

IncidenceMatrix IncidenceMatrix::from_supports(std::size_t rows,
                                               const std::vector<std::vector<std::size_t>>& supports)
{
    IncidenceMatrix m(rows, supports.size());
    for (std::size_t c = 0; c < supports.size(); ++c)
    {
        for (auto r : supports[c])
            m.set(r, c, true);
    }
    return m;
}

void IncidenceMatrix::set(std::size_t r, std::size_t c, bool value)
{
    if (r >= rows_ || c >= cols_)
        throw Error(ErrorKind::IndexOutOfRange, "incidence entry (" + std::to_string(r) + ", " +
                                                    std::to_string(c) + ") out of range");
    data_[r * cols_ + c] = value ? 1 : 0;
}

std::vector<std::size_t> IncidenceMatrix::support(std::size_t c) const
{
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < rows_; ++r)
    {
        if (at(r, c))
            rows.push_back(r);
    }
    return rows;
}

void validate_incidence(const IncidenceMatrix& m, IncidenceMode mode)
{
    std::vector<std::vector<std::size_t>> supports(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
    {
        supports[c] = m.support(c);
        if (supports[c].empty())
            throw Error(ErrorKind::EmptyColumn, "column " + std::to_string(c) + " has no nonzero rows");
        if (supports[c].size() == 1 && mode == IncidenceMode::Strict)
            throw Error(ErrorKind::InvalidIncidence,
                        "column " + std::to_string(c) +
                            " is a single vertex (use permissive mode to allow maximal vertices)");
    }
    for (std::size_t a = 0; a < m.cols(); ++a)
    {
        for (std::size_t b = 0; b < m.cols(); ++b)
        {
            if (a == b || supports[a].size() > supports[b].size())
                continue;
            if (std::includes(supports[b].begin(), supports[b].end(), supports[a].begin(),
                              supports[a].end()))
                throw Error(ErrorKind::InvalidIncidence, "column " + std::to_string(a) +
                                                             " is not maximal: its support lies in column " +
                                                             std::to_string(b));
        }
    }
}

ShapeList extract_shape(const IncidenceMatrix& m, std::size_t* scanned)
{
    std::vector<std::size_t> nonzeros(m.cols(), 0);
    std::size_t reads = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
    {
        for (std::size_t c = 0; c < m.cols(); ++c)
        {
            nonzeros[c] += m.at(r, c);
            ++reads;
        }
    }
    if (scanned)
        *scanned = reads;

    std::map<std::uint32_t, std::uint64_t> tally;
    for (std::size_t c = 0; c < m.cols(); ++c)
    {
        if (nonzeros[c] == 0)
            throw Error(ErrorKind::EmptyColumn, "column " + std::to_string(c) + " has no nonzero rows");
        ++tally[static_cast<std::uint32_t>(nonzeros[c] - 1)];
    }
    std::vector<ShapeEntry> entries;
    for (const auto& [dim, count] : tally)
        entries.push_back({count, dim});
    return ShapeList(std::move(entries));
}

std::size_t vertex_rank(const IncidenceMatrix& m, std::size_t col, std::size_t v)
{
    if (col >= m.cols() || v >= m.rows())
        throw Error(ErrorKind::IndexOutOfRange, "vertex_rank: index out of range");
    if (!m.at(v, col))
        throw Error(ErrorKind::VertexNotInColumn,
                    "row " + std::to_string(v) + " is not in column " + std::to_string(col));
    std::size_t rank = 0;
    for (std::size_t r = 0; r < v; ++r)
        rank += m.at(r, col);
    return rank;
}

Vertex global_label(const ShapeList& shape, std::uint32_t col_dim, std::uint64_t ordinal, std::uint32_t i)
{
    const auto& entries = shape.entries();
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const ShapeEntry& e) { return e.dim == col_dim; });
    if (it == entries.end() || ordinal >= it->count || i > col_dim)
        throw Error(ErrorKind::IndexOutOfRange,
                    "no vertex " + std::to_string(i) + " of maximal " + std::to_string(col_dim) +
                        "-simplex #" + std::to_string(ordinal));
    const std::uint64_t label =
        checked_add(checked_add(face_count_through(shape, std::int64_t(col_dim) - 1, 0),
                                checked_mul(ordinal, col_dim + 1ULL)),
                    i);
    if (label > std::numeric_limits<Vertex>::max())
        throw Error(ErrorKind::Overflow, "vertex label exceeds 32 bits");
    return static_cast<Vertex>(label);
}

std::vector<Relation> extract_relations(const IncidenceMatrix& m, const ShapeList& shape)
{
    struct Column
    {
        std::vector<std::size_t> support;
        std::uint32_t dim;
        std::uint64_t ordinal;
    };
    std::vector<Column> columns;
    columns.reserve(m.cols());
    std::map<std::size_t, std::uint64_t> seen_by_size;
    for (std::size_t c = 0; c < m.cols(); ++c)
    {
        auto support = m.support(c);
        if (support.empty())
            throw Error(ErrorKind::EmptyColumn, "column " + std::to_string(c) + " has no nonzero rows");
        const auto dim = static_cast<std::uint32_t>(support.size() - 1);
        columns.push_back({std::move(support), dim, seen_by_size[dim]++});
    }

    std::vector<Relation> out;
    std::set<std::pair<Simplex, Simplex>> emitted;
    for (std::size_t s = 0; s < columns.size(); ++s)
    {
        for (std::size_t r = s + 1; r < columns.size(); ++r)
        {
            const auto& a = columns[s];
            const auto& b = columns[r];
            std::vector<Vertex> left, right;
            // Walk both supports together; matched rows give the positional
            // pairs (rank in a, rank in b).
            std::size_t i = 0, j = 0;
            while (i < a.support.size() && j < b.support.size())
            {
                if (a.support[i] < b.support[j])
                    ++i;
                else if (b.support[j] < a.support[i])
                    ++j;
                else
                {
                    left.push_back(global_label(shape, a.dim, a.ordinal, static_cast<std::uint32_t>(i)));
                    right.push_back(global_label(shape, b.dim, b.ordinal, static_cast<std::uint32_t>(j)));
                    ++i;
                    ++j;
                }
            }
            if (left.empty())
                continue;
            Simplex alpha(std::move(left));
            Simplex beta(std::move(right));
            if (alpha == beta || !emitted.emplace(alpha, beta).second)
                continue;
            out.emplace_back(std::vector<Simplex>{std::move(alpha), std::move(beta)});
        }
    }
    return out;
}

GeneratingSet from_incidence(const IncidenceMatrix& m, IncidenceMode mode)
{
    validate_incidence(m, mode);
    ShapeList shape = extract_shape(m);
    auto relations = extract_relations(m, shape);
    return GeneratingSet(std::move(shape), std::move(relations));
}

IncidenceMatrix to_incidence(const GeneratingSet& g)
{
    const RelationMap relmap = closure_from_relations(g);
    const auto maximal = materialize_maximal(g.shape());
    const std::uint64_t vertex_total = face_count(g.shape(), 0);

    auto vertex_class = [&](Vertex v) { return relmap.resolve(Simplex{v}).front(); };

    std::map<Vertex, std::size_t> row_of;
    for (Vertex v = 0; v < vertex_total; ++v)
        row_of.emplace(vertex_class(v), 0);

    // Consecutive vertices of a maximal simplex order their classes.
    std::map<Vertex, std::set<Vertex>> after;
    std::map<Vertex, std::size_t> pending;
    for (const auto& [rep, row] : row_of)
        pending.emplace(rep, 0);
    for (const auto& sigma : maximal)
    {
        std::map<Vertex, Vertex> seen;
        for (auto v : sigma.vertices())
        {
            const Vertex rep = vertex_class(v);
            auto [it, fresh] = seen.emplace(rep, v);
            if (!fresh)
                throw Error(ErrorKind::NotRepresentable,
                            "vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                                " of maximal simplex " + sigma.to_string() +
                                " fall into the same vertex class {" + std::to_string(rep) +
                                "}; the gluing is not determined by vertex identifications");
        }
        for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
        {
            const Vertex a = vertex_class(sigma[i]);
            const Vertex b = vertex_class(sigma[i + 1]);
            if (after[a].insert(b).second)
                ++pending[b];
        }
    }

    // Rows follow that order where it is acyclic, least representative first;
    // a cycle is broken at its least remaining representative.
    std::set<Vertex> ready, left;
    for (const auto& [rep, n] : pending)
    {
        left.insert(rep);
        if (n == 0)
            ready.insert(rep);
    }
    std::size_t next = 0;
    while (!left.empty())
    {
        const Vertex rep = ready.empty() ? *left.begin() : *ready.begin();
        ready.erase(rep);
        left.erase(rep);
        row_of[rep] = next++;
        for (auto b : after[rep])
        {
            if (left.count(b) && --pending[b] == 0)
                ready.insert(b);
        }
    }

    std::vector<std::vector<std::size_t>> supports;
    supports.reserve(maximal.size());
    for (const auto& sigma : maximal)
    {
        std::vector<std::size_t> support;
        for (auto v : sigma.vertices())
            support.push_back(row_of.at(vertex_class(v)));
        std::sort(support.begin(), support.end());
        supports.push_back(std::move(support));
    }

    // Faces spanning the same vertex classes must be the same cell, and no
    // maximal simplex may collapse into another.
    for (std::size_t a = 0; a < maximal.size(); ++a)
    {
        for (std::size_t b = a + 1; b < maximal.size(); ++b)
        {
            std::vector<Vertex> face_a, face_b;
            for (auto v : maximal[a].vertices())
            {
                const auto row = row_of.at(vertex_class(v));
                if (std::binary_search(supports[b].begin(), supports[b].end(), row))
                    face_a.push_back(v);
            }
            if (face_a.empty())
                continue;
            for (auto v : maximal[b].vertices())
            {
                const auto row = row_of.at(vertex_class(v));
                if (std::binary_search(supports[a].begin(), supports[a].end(), row))
                    face_b.push_back(v);
            }
            if (face_a.size() == maximal[a].size() || face_b.size() == maximal[b].size())
                throw Error(ErrorKind::NotRepresentable,
                            "maximal simplices " + maximal[a].to_string() + " and " +
                                maximal[b].to_string() + " collapse onto one vertex set");
            const Simplex fa(std::move(face_a));
            const Simplex fb(std::move(face_b));
            if (relmap.resolve(fa) != relmap.resolve(fb))
                throw Error(ErrorKind::NotRepresentable,
                            "faces " + fa.to_string() + " and " + fb.to_string() +
                                " span the same vertex classes but are not identified");
        }
    }
    return IncidenceMatrix::from_supports(row_of.size(), supports);
}

IncidenceMatrix parse_incidence(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::Syntax, "line " + std::to_string(line_no) + ": " + what);
    };
    auto next_line = [&](std::string& out) {
        while (std::getline(in, raw))
        {
            ++line_no;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            if (raw.find_first_not_of(" \t\r") != std::string::npos)
            {
                out = raw;
                return true;
            }
        }
        return false;
    };

    std::string line;
    if (!next_line(line))
        fail("missing 'incidence <n> <m>' header");
    std::istringstream header(line);
    std::string word;
    long long n = -1, m = -1;
    if (!(header >> word >> n >> m) || word != "incidence" || n < 0 || m < 0)
        fail("expected 'incidence <n> <m>'");
    if (header >> word)
        fail("trailing text after header");

    IncidenceMatrix matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
    for (long long r = 0; r < n; ++r)
    {
        if (!next_line(line))
            fail("expected " + std::to_string(n) + " rows, found " + std::to_string(r));
        std::istringstream ss(line);
        for (long long c = 0; c < m; ++c)
        {
            if (!(ss >> word) || (word != "0" && word != "1"))
                fail("expected " + std::to_string(m) + " entries of 0 or 1");
            matrix.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), word == "1");
        }
        if (ss >> word)
            fail("row has more than " + std::to_string(m) + " entries");
    }
    if (next_line(line))
        fail("unexpected content after matrix rows");
    return matrix;
}

IncidenceMatrix parse_incidence(const std::string& text)
{
    std::istringstream in(text);
    return parse_incidence(in);
}

std::string serialize_incidence(const IncidenceMatrix& m)
{
    std::string out = "incidence " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t r = 0; r < m.rows(); ++r)
    {
        for (std::size_t c = 0; c < m.cols(); ++c)
        {
            if (c > 0)
                out += ' ';
            out += m.at(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

} // namespace tgen
