#include "tgen/boundary.hpp"

#include <istream>
#include <set>
#include <sstream>

#include "tgen/error.hpp"

namespace tgen
{

IndexMap::IndexMap(std::vector<std::vector<Simplex>> reps_by_dim) : reps_(std::move(reps_by_dim))
{
    lookup_.resize(reps_.size());
    for (std::size_t k = 0; k < reps_.size(); ++k)
    {
        for (std::size_t i = 0; i < reps_[k].size(); ++i)
        {
            const auto& s = reps_[k][i];
            if (s.dimension() != k)
                throw Error(ErrorKind::Validation, "simplex " + s.to_string() +
                                                       " filed under dimension " + std::to_string(k));
            if (i > 0 && !(reps_[k][i - 1] < s))
                throw Error(ErrorKind::Validation, "index entries must be strictly increasing");
            lookup_[k].emplace(s, i);
        }
    }
}

std::size_t IndexMap::pos(const Simplex& a) const
{
    const std::size_t k = a.dimension();
    if (k < lookup_.size())
    {
        if (auto it = lookup_[k].find(a); it != lookup_[k].end())
            return it->second;
    }
    throw Error(ErrorKind::IndexOutOfRange, a.to_string() + " is not an indexed representative");
}

bool IndexMap::contains(const Simplex& a) const
{
    const std::size_t k = a.dimension();
    return k < lookup_.size() && lookup_[k].count(a) > 0;
}

void BoundaryMatrix::check(std::size_t row, std::size_t col) const
{
    if (row >= rows_ || col >= cols_)
        throw Error(ErrorKind::IndexOutOfRange,
                    "entry (" + std::to_string(row) + ", " + std::to_string(col) +
                        ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

void BoundaryMatrix::add(std::size_t row, std::size_t col, std::int64_t value)
{
    check(row, col);
    if (value == 0)
        return;
    auto [it, inserted] = entries_.try_emplace({row, col}, value);
    if (!inserted)
    {
        it->second += value;
        if (it->second == 0)
            entries_.erase(it);
    }
}

void BoundaryMatrix::set(std::size_t row, std::size_t col, std::int64_t value)
{
    check(row, col);
    if (value == 0)
        entries_.erase({row, col});
    else
        entries_.insert_or_assign({row, col}, value);
}

std::int64_t BoundaryMatrix::at(std::size_t row, std::size_t col) const
{
    check(row, col);
    auto it = entries_.find({row, col});
    return it == entries_.end() ? 0 : it->second;
}

IndexMap build_index(const GeneratingSet& g, const RelationMap& m)
{
    if (g.shape().empty())
        return IndexMap();
    std::vector<std::set<Simplex>> reps(g.shape().max_dim() + 1);
    for (const auto& top : materialize_maximal(g.shape()))
    {
        for (std::size_t k = 0; k <= top.dimension(); ++k)
        {
            for (auto& face : enumerate_faces(top, k))
            {
                if (m.is_representative(face))
                    reps[k].insert(std::move(face));
            }
        }
    }
    std::vector<std::vector<Simplex>> sorted;
    sorted.reserve(reps.size());
    for (auto& r : reps)
        sorted.emplace_back(r.begin(), r.end());
    return IndexMap(std::move(sorted));
}

std::uint64_t pos_closed_form(const Simplex& a, const ShapeList& shape)
{
    const std::int64_t owner = owning_maximal(shape, a);
    if (owner < 0)
        throw Error(ErrorKind::NotSupported,
                    a.to_string() + " is not a face of a maximal simplex of the shape");

    // Locate the owning maximal simplex: its dimension, first label and
    // ordinal among maximal simplices of that dimension.
    std::uint64_t first_label = 0;
    std::uint64_t remaining = static_cast<std::uint64_t>(owner);
    std::uint32_t top_dim = 0;
    std::uint64_t ordinal = 0;
    for (const auto& e : shape.entries())
    {
        if (remaining < e.count)
        {
            top_dim = e.dim;
            ordinal = remaining;
            first_label += remaining * (e.dim + 1ULL);
            break;
        }
        remaining -= e.count;
        first_label += e.count * (e.dim + 1ULL);
    }

    const std::uint64_t d = a.dimension();
    std::uint64_t before = checked_add(face_count_through(shape, std::int64_t(top_dim) - 1, d),
                                       checked_mul(ordinal, binomial(top_dim + 1ULL, d + 1)));

    // Lexicographic rank of a among the (d+1)-subsets of the owner's labels.
    std::uint64_t previous = 0;
    for (std::uint64_t i = 0; i <= d; ++i)
    {
        const std::uint64_t local = a[i] - first_label;
        for (std::uint64_t v = (i == 0 ? 0 : previous + 1); v < local; ++v)
            before = checked_add(before, binomial(top_dim - v, d - i));
        previous = local;
    }
    return before;
}

void bcon(const Simplex& a, std::size_t p, BconContext& ctx)
{
    if (!ctx.relmap.is_representative(a) || a.dimension() == 0)
        return;

    auto [it, first_visit] = ctx.expanded.try_emplace(a, p);
    std::size_t stop = a.size();
    if (first_visit)
    {
        ++ctx.generations;
        auto& column = ctx.matrices[a.dimension()];
        const std::size_t col = ctx.index.pos(a);
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            const Simplex face = ctx.relmap.resolve(a.without(i));
            column.add(ctx.index.pos(face), col, (i % 2 == 0) ? 1 : -1);
        }
    }
    else
    {
        // Reached again: only positions below the earlier parameter are new.
        if (p >= it->second)
            return;
        stop = it->second;
        it->second = p;
    }

    for (std::size_t i = p; i < stop; ++i)
    {
        Simplex face = ctx.relmap.resolve(a.without(i));
        if (face.dimension() >= 1)
            bcon(face, i, ctx);
    }
}

BoundaryComplex build_all(const GeneratingSet& g, const BuildOptions& options)
{
    BoundaryComplex out;
    out.genset = g;
    out.relmap = closure_from_relations(g);
    if (g.shape().empty())
    {
        if (options.instrument)
            out.generations = 0;
        return out;
    }

    const IndexMap index = build_index(g, out.relmap);
    const std::size_t top = g.shape().max_dim();
    out.matrices.reserve(top + 1);
    out.matrices.emplace_back(0, index.count(0));
    for (std::size_t k = 1; k <= top; ++k)
        out.matrices.emplace_back(index.count(k - 1), index.count(k));

    BconContext ctx{out.relmap, index, out.matrices};
    for (const auto& simplex : materialize_maximal(g.shape()))
        bcon(simplex, 0, ctx);

    if (options.drop_top)
        out.matrices.pop_back();
    if (options.instrument)
        out.generations = ctx.generations;
    return out;
}

std::uint64_t generation_count(const BoundaryComplex& d)
{
    if (!d.generations)
        throw Error(ErrorKind::NotSupported, "complex was built without instrumentation");
    return *d.generations;
}

std::string write_boundary_text(const std::vector<BoundaryMatrix>& matrices)
{
    std::ostringstream out;
    for (std::size_t k = 0; k < matrices.size(); ++k)
    {
        const auto& m = matrices[k];
        out << "matrix " << k << ' ' << m.rows() << ' ' << m.cols() << '\n';
        for (const auto& [key, value] : m.entries())
            out << key.first << ' ' << key.second << ' ' << value << '\n';
    }
    return out.str();
}

std::vector<BoundaryMatrix> parse_boundary_text(std::istream& in)
{
    std::vector<BoundaryMatrix> out;
    std::set<BoundaryMatrix::Key> seen;
    std::string raw;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::Syntax, "line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, raw))
    {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ss(raw);
        std::string first;
        if (!(ss >> first))
            continue;
        if (first == "matrix")
        {
            std::size_t k = 0, rows = 0, cols = 0;
            if (!(ss >> k >> rows >> cols))
                fail("expected 'matrix k rows cols'");
            if (k != out.size())
                fail("expected matrix " + std::to_string(out.size()) + ", got " + std::to_string(k));
            out.emplace_back(rows, cols);
            seen.clear();
        }
        else
        {
            if (out.empty())
                fail("entry before any 'matrix' header");
            std::istringstream entry(raw);
            std::size_t row = 0, col = 0;
            std::int64_t value = 0;
            if (!(entry >> row >> col >> value))
                fail("expected 'row col value'");
            if (value == 0)
                fail("zero entries are not stored");
            if (!seen.insert({row, col}).second)
                fail("duplicate entry");
            try
            {
                out.back().set(row, col, value);
            }
            catch (const Error& e)
            {
                fail(e.what());
            }
        }
        std::string extra;
        if (ss >> extra && first == "matrix")
            fail("trailing text after matrix header");
    }
    return out;
}

std::vector<BoundaryMatrix> parse_boundary_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_boundary_text(in);
}

} // namespace tgen
