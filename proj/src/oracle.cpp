#include "tgen/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tgen/error.hpp"

namespace tgen::oracle
{

namespace
{

std::vector<Simplex> all_subsets(const std::vector<Vertex>& vertices)
{
    std::vector<Simplex> out;
    const std::size_t n = vertices.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask)
    {
        std::vector<Vertex> face;
        for (std::size_t i = 0; i < n; ++i)
        {
            if (mask & (std::size_t{1} << i))
                face.push_back(vertices[i]);
        }
        out.emplace_back(std::move(face));
    }
    return out;
}

FullComplex collect(const std::vector<std::vector<Vertex>>& tops)
{
    std::size_t budget = 0;
    for (const auto& t : tops)
    {
        if (t.size() >= 17)
            throw Error(ErrorKind::OracleTooLarge, "oracle refuses simplices of dimension >= 16");
        budget += (std::size_t{1} << t.size()) - 1;
        if (budget > max_faces)
            throw Error(ErrorKind::OracleTooLarge,
                        "oracle refuses complexes with more than " + std::to_string(max_faces) + " faces");
    }

    std::vector<std::set<Simplex>> by_dim;
    for (const auto& t : tops)
    {
        for (auto& face : all_subsets(t))
        {
            if (face.dimension() >= by_dim.size())
                by_dim.resize(face.dimension() + 1);
            by_dim[face.dimension()].insert(std::move(face));
        }
    }
    FullComplex out;
    for (auto& s : by_dim)
        out.faces.emplace_back(s.begin(), s.end());
    return out;
}

std::size_t index_of(const std::vector<Simplex>& sorted, const Simplex& s)
{
    auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
    if (it == sorted.end() || !(*it == s))
        throw Error(ErrorKind::Validation, s.to_string() + " is not a face of the complex");
    return static_cast<std::size_t>(it - sorted.begin());
}

} // namespace

std::size_t FullComplex::total() const
{
    std::size_t n = 0;
    for (const auto& f : faces)
        n += f.size();
    return n;
}

FullComplex naive_complex(const GeneratingSet& g)
{
    std::vector<std::vector<Vertex>> tops;
    Vertex next = 0;
    for (const auto& e : g.shape().entries())
    {
        for (std::uint64_t n = 0; n < e.count; ++n)
        {
            std::vector<Vertex> top;
            for (std::uint32_t i = 0; i <= e.dim; ++i)
                top.push_back(next++);
            tops.push_back(std::move(top));
        }
    }
    return collect(tops);
}

FullComplex complex_from_supports(const std::vector<std::vector<Vertex>>& supports)
{
    return collect(supports);
}

RelationMap naive_closure(const GeneratingSet& g)
{
    const FullComplex complex = naive_complex(g);
    const auto& faces = complex.faces;

    // class_of[k][i]: class label of faces[k][i]; labels start unique.
    std::vector<std::vector<std::size_t>> class_of(faces.size());
    for (std::size_t k = 0; k < faces.size(); ++k)
    {
        class_of[k].resize(faces[k].size());
        for (std::size_t i = 0; i < faces[k].size(); ++i)
            class_of[k][i] = i;
    }

    auto merge = [&](std::size_t k, std::size_t a, std::size_t b) {
        const std::size_t from = class_of[k][b];
        const std::size_t to = class_of[k][a];
        if (from == to)
            return false;
        for (auto& c : class_of[k])
        {
            if (c == from)
                c = to;
        }
        return true;
    };

    for (const auto& r : g.relations())
    {
        const std::size_t k = r.dimension();
        const std::size_t first = index_of(faces[k], r.members().front());
        for (const auto& member : r.members())
            merge(k, first, index_of(faces[k], member));
    }

    bool changed = true;
    while (changed)
    {
        changed = false;
        for (std::size_t k = 1; k < faces.size(); ++k)
        {
            for (std::size_t a = 0; a < faces[k].size(); ++a)
            {
                for (std::size_t b = a + 1; b < faces[k].size(); ++b)
                {
                    if (class_of[k][a] != class_of[k][b])
                        continue;
                    for (std::size_t t = 0; t <= k; ++t)
                    {
                        const auto fa = index_of(faces[k - 1], faces[k][a].without(t));
                        const auto fb = index_of(faces[k - 1], faces[k][b].without(t));
                        changed = merge(k - 1, fa, fb) || changed;
                    }
                }
            }
        }
    }

    std::map<Simplex, Simplex> table;
    for (std::size_t k = 0; k < faces.size(); ++k)
    {
        std::map<std::size_t, std::size_t> least;
        for (std::size_t i = 0; i < faces[k].size(); ++i)
            least.emplace(class_of[k][i], i);
        for (std::size_t i = 0; i < faces[k].size(); ++i)
        {
            const std::size_t rep = least.at(class_of[k][i]);
            if (rep != i)
                table.emplace(faces[k][i], faces[k][rep]);
        }
    }
    return RelationMap(std::move(table));
}

std::vector<BoundaryMatrix> naive_boundaries(const FullComplex& complex)
{
    const auto& faces = complex.faces;
    std::vector<BoundaryMatrix> out;
    for (std::size_t k = 0; k < faces.size(); ++k)
    {
        if (k == 0)
        {
            out.emplace_back(0, faces[0].size());
            continue;
        }
        BoundaryMatrix m(faces[k - 1].size(), faces[k].size());
        for (std::size_t c = 0; c < faces[k].size(); ++c)
        {
            for (std::size_t i = 0; i <= k; ++i)
                m.add(index_of(faces[k - 1], faces[k][c].without(i)), c, i % 2 == 0 ? 1 : -1);
        }
        out.push_back(std::move(m));
    }
    return out;
}

BoundaryComplex naive_boundaries(const GeneratingSet& g)
{
    BoundaryComplex out;
    out.genset = g;
    const FullComplex complex = naive_complex(g);
    out.relmap = naive_closure(g);
    const auto full = naive_boundaries(complex);
    const auto& faces = complex.faces;

    // Representatives keep their relative order from the sorted face lists.
    std::vector<std::vector<std::ptrdiff_t>> rep_index(faces.size());
    std::vector<std::size_t> rep_count(faces.size(), 0);
    for (std::size_t k = 0; k < faces.size(); ++k)
    {
        rep_index[k].assign(faces[k].size(), -1);
        for (std::size_t i = 0; i < faces[k].size(); ++i)
        {
            if (out.relmap.resolve(faces[k][i]) == faces[k][i])
                rep_index[k][i] = static_cast<std::ptrdiff_t>(rep_count[k]++);
        }
    }

    for (std::size_t k = 0; k < full.size(); ++k)
    {
        BoundaryMatrix q(k == 0 ? 0 : rep_count[k - 1], rep_count[k]);
        for (const auto& [key, value] : full[k].entries())
        {
            const auto col = rep_index[k][key.second];
            if (col < 0)
                continue;
            const Simplex row_rep = out.relmap.resolve(faces[k - 1][key.first]);
            const auto row = rep_index[k - 1][index_of(faces[k - 1], row_rep)];
            q.add(static_cast<std::size_t>(row), static_cast<std::size_t>(col), value);
        }
        out.matrices.push_back(std::move(q));
    }
    return out;
}

} // namespace tgen::oracle
