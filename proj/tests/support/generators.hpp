#ifndef TGEN_TESTS_GENERATORS_HPP
#define TGEN_TESTS_GENERATORS_HPP

// Hand-rolled random generators for property tests.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "tgen/genset.hpp"
#include "tgen/incidence.hpp"

namespace tgen::testing
{

inline ShapeList random_shape(std::mt19937_64& rng, int max_simplices, int max_dim)
{
    std::uniform_int_distribution<int> how_many(1, max_simplices);
    std::uniform_int_distribution<int> dim(0, max_dim);
    std::map<std::uint32_t, std::uint64_t> tally;
    const int n = how_many(rng);
    for (int i = 0; i < n; ++i)
        ++tally[static_cast<std::uint32_t>(dim(rng))];
    std::vector<ShapeEntry> entries;
    for (auto [d, c] : tally)
        entries.push_back({c, d});
    return ShapeList(std::move(entries));
}

/// Two distinct random faces of one random dimension, drawn from all faces
/// of the maximal simplices of `shape`, which needs at least two vertices.
inline Relation random_relation(std::mt19937_64& rng, const ShapeList& shape)
{
    const auto tops = materialize_maximal(shape);
    while (true)
    {
        std::uniform_int_distribution<std::uint32_t> pick_dim(0, shape.max_dim());
        const std::uint32_t k = pick_dim(rng);
        std::vector<Simplex> pool;
        for (const auto& t : tops)
        {
            auto faces = enumerate_faces(t, k);
            pool.insert(pool.end(), faces.begin(), faces.end());
        }
        if (pool.size() < 2)
            continue;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        const std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        while (b == a)
            b = pick(rng);
        return Relation(std::vector<Simplex>{pool[a], pool[b]});
    }
}

/// At most `max_simplices` maximal simplices of dimension <= `max_dim` and at
/// most `max_relations` random relations.
inline GeneratingSet random_genset(std::mt19937_64& rng, int max_simplices = 3, int max_dim = 4,
                                   int max_relations = 3)
{
    ShapeList shape = random_shape(rng, max_simplices, max_dim);
    std::uniform_int_distribution<int> how_many(0, max_relations);
    std::vector<Relation> relations;
    if (face_count(shape, 0) >= 2)
    {
        const int n = how_many(rng);
        for (int i = 0; i < n; ++i)
            relations.push_back(random_relation(rng, shape));
    }
    return GeneratingSet(std::move(shape), std::move(relations));
}

/// Random column supports over at most `max_rows` rows with no support
/// inside another and no unused rows; rows are relabelled densely.
inline std::vector<std::vector<std::size_t>> random_supports(std::mt19937_64& rng, std::size_t max_rows,
                                                             std::size_t max_cols, std::size_t min_size = 2,
                                                             std::size_t max_size = 5)
{
    std::uniform_int_distribution<std::size_t> rows_dist(min_size, max_rows);
    std::uniform_int_distribution<std::size_t> cols_dist(1, max_cols);
    const std::size_t rows = rows_dist(rng);
    const std::size_t cols = cols_dist(rng);
    std::vector<std::set<std::size_t>> picked;
    for (std::size_t attempt = 0; attempt < cols * 4 && picked.size() < cols; ++attempt)
    {
        std::uniform_int_distribution<std::size_t> size_dist(min_size, std::min(max_size, rows));
        const std::size_t size = size_dist(rng);
        std::vector<std::size_t> all(rows);
        for (std::size_t i = 0; i < rows; ++i)
            all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        std::set<std::size_t> s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
        bool ok = true;
        for (const auto& other : picked)
        {
            if (std::includes(other.begin(), other.end(), s.begin(), s.end()) ||
                std::includes(s.begin(), s.end(), other.begin(), other.end()))
            {
                ok = false;
                break;
            }
        }
        if (ok)
            picked.push_back(std::move(s));
    }
    std::set<std::size_t> used;
    for (const auto& s : picked)
        used.insert(s.begin(), s.end());
    std::map<std::size_t, std::size_t> relabel;
    for (auto r : used)
        relabel.emplace(r, relabel.size());
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : picked)
    {
        std::vector<std::size_t> col;
        for (auto r : s)
            col.push_back(relabel.at(r));
        out.push_back(std::move(col));
    }
    return out;
}

inline std::size_t rows_used(const std::vector<std::vector<std::size_t>>& supports)
{
    std::size_t n = 0;
    for (const auto& s : supports)
        for (auto r : s)
            n = std::max(n, r + 1);
    return n;
}

} // namespace tgen::testing

#endif
