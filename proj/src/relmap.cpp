#include "tgen/relmap.hpp"

#include <utility>

#include "tgen/error.hpp"

namespace tgen
{

namespace
{

/// Union-find over simplices where every root is the minimum of its class.
class ClassForest
{
public:
    explicit ClassForest(const std::map<Simplex, Simplex>& seed) : parent_(seed) {}

    Simplex find(const Simplex& a)
    {
        auto it = parent_.find(a);
        if (it == parent_.end())
            return a;
        Simplex root = find(it->second);
        it->second = root;
        return root;
    }

    /// Returns false when the two were already in one class.
    bool unite(const Simplex& a, const Simplex& b)
    {
        Simplex ra = find(a);
        Simplex rb = find(b);
        if (ra == rb)
            return false;
        if (rb < ra)
            std::swap(ra, rb);
        parent_.insert_or_assign(std::move(rb), std::move(ra));
        return true;
    }

    /// Joins a and b and propagates positional face identifications.  Faces
    /// of an already-joined pair are already joined, so they are skipped.
    void relate(const Simplex& a, const Simplex& b)
    {
        std::vector<std::pair<Simplex, Simplex>> work{{a, b}};
        while (!work.empty())
        {
            auto [x, y] = std::move(work.back());
            work.pop_back();
            if (!unite(x, y) || x.dimension() == 0)
                continue;
            for (std::size_t t = 0; t < x.size(); ++t)
                work.emplace_back(x.without(t), y.without(t));
        }
    }

    std::map<Simplex, Simplex> finish()
    {
        std::map<Simplex, Simplex> table;
        for (auto& [key, target] : parent_)
        {
            Simplex root = find(key);
            if (!(root == key))
                table.emplace(key, std::move(root));
        }
        return table;
    }

private:
    std::map<Simplex, Simplex> parent_;
};

void relate_members(ClassForest& forest, const Relation& r)
{
    const auto& m = r.members();
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        forest.relate(m[i], m[i + 1]);
}

} // namespace

RelationMap::RelationMap(std::map<Simplex, Simplex> table)
{
    for (auto& [key, target] : table)
    {
        if (key == target)
            continue;
        if (key.dimension() != target.dimension())
            throw Error(ErrorKind::Validation, "representative of " + key.to_string() +
                                                   " has a different dimension");
        if (!(target < key))
            throw Error(ErrorKind::Validation,
                        "representative " + target.to_string() + " is not below " + key.to_string());
        if (auto it = table.find(target); it != table.end() && !(it->second == target))
            throw Error(ErrorKind::Validation,
                        "representative " + target.to_string() + " is itself mapped");
        table_.emplace(key, target);
    }
}

Simplex RelationMap::resolve(const Simplex& a) const
{
    auto it = table_.find(a);
    return it == table_.end() ? a : it->second;
}

std::map<Simplex, std::vector<Simplex>> RelationMap::classes() const
{
    std::map<Simplex, std::vector<Simplex>> out;
    for (const auto& [key, rep] : table_)
    {
        auto& members = out[rep];
        if (members.empty())
            members.push_back(rep);
        members.push_back(key);
    }
    return out;
}

std::vector<Relation> induced_subrelations(const Relation& r)
{
    std::vector<Relation> out;
    if (r.dimension() == 0)
        return out;
    const auto& m = r.members();
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
    {
        for (std::size_t t = 0; t < m[i].size(); ++t)
        {
            Simplex a = m[i].without(t);
            Simplex b = m[i + 1].without(t);
            if (a == b)
                continue;
            out.emplace_back(std::vector<Simplex>{std::move(a), std::move(b)});
        }
    }
    return out;
}

RelationMap apply_relation(const RelationMap& map, const Relation& r)
{
    ClassForest forest(map.table());
    relate_members(forest, r);
    RelationMap out;
    out.table_ = forest.finish();
    return out;
}

RelationMap closure_from_relations(const GeneratingSet& g)
{
    ClassForest forest({});
    for (const auto& r : g.relations())
        relate_members(forest, r);
    RelationMap out;
    out.table_ = forest.finish();
    return out;
}

} // namespace tgen
