#ifndef TGEN_RELMAP_HPP
#define TGEN_RELMAP_HPP

#include <map>
#include <vector>

#include "tgen/genset.hpp"
#include "tgen/simplex.hpp"

namespace tgen
{

/**
 * Maps each related simplex to the least member of its equivalence class.
 *
 * Only non-representatives are stored; a simplex absent from the table is
 * its own representative.  A finished map is fully compressed, so resolve()
 * is a single lookup and is idempotent.
 */
class RelationMap
{
public:
    RelationMap() = default;

    /// Adopts a finished table.  Self entries are dropped; throws
    /// Error(Validation) if an entry is not compressed (its target is itself
    /// a key), raises the key or changes dimension.
    explicit RelationMap(std::map<Simplex, Simplex> table);

    Simplex resolve(const Simplex& a) const;
    bool is_representative(const Simplex& a) const { return table_.find(a) == table_.end(); }

    const std::map<Simplex, Simplex>& table() const noexcept { return table_; }
    bool empty() const noexcept { return table_.empty(); }

    /// Every class with two or more members, keyed by representative.
    std::map<Simplex, std::vector<Simplex>> classes() const;

    friend bool operator==(const RelationMap&, const RelationMap&) = default;

private:
    friend RelationMap apply_relation(const RelationMap&, const Relation&);
    friend RelationMap closure_from_relations(const GeneratingSet&);

    std::map<Simplex, Simplex> table_;
};

/// Codimension-1 relations implied by `r`: for each adjacent member pair
/// (a, b) and each position t, a - a[t] is paired with b - b[t].  Pairs whose
/// two faces coincide are skipped.
std::vector<Relation> induced_subrelations(const Relation& r);

/// Joins the classes of `r`'s members and, recursively, of every induced
/// face pair down to dimension 0.
RelationMap apply_relation(const RelationMap& map, const Relation& r);

/// The representative map of all relations of `g` and their induced faces.
RelationMap closure_from_relations(const GeneratingSet& g);

} // namespace tgen

#endif
