#include "tgen/genset.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <set>
#include <sstream>

#include "tgen/error.hpp"

namespace tgen
{

ShapeList::ShapeList(std::vector<ShapeEntry> entries) : entries_(std::move(entries))
{
    for (std::size_t i = 0; i < entries_.size(); ++i)
    {
        if (entries_[i].count == 0)
            throw Error(ErrorKind::Validation, "shape entry " + std::to_string(i) +
                                                   " has zero maximal simplices");
        if (i > 0 && entries_[i - 1].dim >= entries_[i].dim)
            throw Error(ErrorKind::Validation,
                        "shape dimensions must be strictly increasing (entry " +
                            std::to_string(i) + " has dim " + std::to_string(entries_[i].dim) +
                            " after dim " + std::to_string(entries_[i - 1].dim) + ")");
    }
}

ShapeList::ShapeList(std::initializer_list<ShapeEntry> entries)
    : ShapeList(std::vector<ShapeEntry>(entries))
{
}

Relation::Relation(std::vector<Simplex> members) : members_(std::move(members))
{
    if (members_.size() < 2)
        throw Error(ErrorKind::Validation, "a relation needs at least two members");
    for (std::size_t i = 1; i < members_.size(); ++i)
    {
        if (members_[i].dimension() != members_[0].dimension())
            throw Error(ErrorKind::ShapeMismatch,
                        "relation members have different dimensions: " +
                            members_[0].to_string() + " and " + members_[i].to_string());
    }
    std::set<Simplex> seen(members_.begin(), members_.end());
    if (seen.size() != members_.size())
        throw Error(ErrorKind::Validation, "relation members must be pairwise distinct");
}

Relation::Relation(std::initializer_list<Simplex> members)
    : Relation(std::vector<Simplex>(members))
{
}

GeneratingSet::GeneratingSet(ShapeList shape, std::vector<Relation> relations)
    : shape_(std::move(shape)), relations_(std::move(relations))
{
    const std::uint64_t vertex_total = face_count(shape_, 0);
    for (std::size_t r = 0; r < relations_.size(); ++r)
    {
        std::set<std::int64_t> owners;
        for (const auto& member : relations_[r].members())
        {
            if (member.back() >= vertex_total)
                throw Error(ErrorKind::Validation,
                            "relation " + std::to_string(r) + ": vertex " +
                                std::to_string(member.back()) + " exceeds vertex count " +
                                std::to_string(vertex_total));
            const auto owner = owning_maximal(shape_, member);
            if (owner < 0)
                throw Error(ErrorKind::Validation,
                            "relation " + std::to_string(r) + ": " + member.to_string() +
                                " is not a face of any maximal simplex");
            if (!owners.insert(owner).second)
                warnings_.push_back("relation " + std::to_string(r) +
                                    " identifies two faces of maximal simplex " +
                                    std::to_string(owner));
        }
    }
}

std::uint64_t face_count(const ShapeList& shape, std::uint64_t k)
{
    std::uint64_t total = 0;
    for (const auto& e : shape.entries())
        total = checked_add(total, checked_mul(e.count, binomial(e.dim + 1ULL, k + 1)));
    return total;
}

std::uint64_t face_count_through(const ShapeList& shape, std::int64_t m, std::uint64_t k)
{
    std::uint64_t total = 0;
    for (const auto& e : shape.entries())
    {
        if (static_cast<std::int64_t>(e.dim) > m)
            break;
        total = checked_add(total, checked_mul(e.count, binomial(e.dim + 1ULL, k + 1)));
    }
    return total;
}

std::vector<Simplex> materialize_maximal(const ShapeList& shape)
{
    std::vector<Simplex> out;
    Vertex c = 0;
    for (const auto& e : shape.entries())
    {
        for (std::uint64_t n = 0; n < e.count; ++n)
        {
            std::vector<Vertex> vs(e.dim + 1);
            for (std::uint32_t i = 0; i <= e.dim; ++i)
                vs[i] = c + i;
            out.emplace_back(std::move(vs));
            c += e.dim + 1;
        }
    }
    return out;
}

std::int64_t owning_maximal(const ShapeList& shape, const Simplex& a)
{
    std::uint64_t start = 0;
    std::uint64_t ordinal = 0;
    for (const auto& e : shape.entries())
    {
        const std::uint64_t width = e.dim + 1ULL;
        const std::uint64_t block = checked_mul(e.count, width);
        if (a.front() < start + block)
        {
            const std::uint64_t local = (a.front() - start) / width;
            const std::uint64_t last = start + local * width + e.dim;
            if (a.back() > last)
                return -1;
            return static_cast<std::int64_t>(ordinal + local);
        }
        start += block;
        ordinal += e.count;
    }
    return -1;
}

std::vector<Relation> couple_simps(const std::vector<Simplex>& a, const std::vector<Simplex>& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::ShapeMismatch, "couple_simps: lists have lengths " +
                                                  std::to_string(a.size()) + " and " +
                                                  std::to_string(b.size()));
    std::vector<Relation> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (a[i].dimension() != b[i].dimension())
            throw Error(ErrorKind::ShapeMismatch,
                        "couple_simps: entry " + std::to_string(i) + " pairs dimensions " +
                            std::to_string(a[i].dimension()) + " and " +
                            std::to_string(b[i].dimension()));
        out.emplace_back(std::vector<Simplex>{a[i], b[i]});
    }
    return out;
}

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what)
{
    throw Error(ErrorKind::Syntax, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_number(std::string_view token, std::size_t line)
{
    token = trim(token);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        syntax_error(line, "expected a natural number, got '" + std::string(token) + "'");
    return value;
}

Simplex parse_simplex(std::string_view text, std::size_t line)
{
    std::vector<Vertex> vs;
    while (true)
    {
        const auto comma = text.find(',');
        const auto value = parse_number(text.substr(0, comma), line);
        if (value > std::numeric_limits<Vertex>::max())
            syntax_error(line, "vertex label too large");
        vs.push_back(static_cast<Vertex>(value));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    try
    {
        return Simplex(std::move(vs));
    }
    catch (const Error& e)
    {
        syntax_error(line, e.what());
    }
}

} // namespace

GeneratingSet parse_genset(std::istream& in)
{
    std::vector<ShapeEntry> entries;
    std::vector<Relation> relations;
    bool seen_maximal = false;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw))
    {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            syntax_error(line_no, "expected 'maximal:' or 'relation:'");
        const auto key = trim(line.substr(0, colon));
        const auto body = trim(line.substr(colon + 1));

        if (key == "maximal")
        {
            if (seen_maximal)
                syntax_error(line_no, "duplicate 'maximal:' line");
            seen_maximal = true;
            std::istringstream ss{std::string(body)};
            std::vector<std::uint64_t> numbers;
            std::string token;
            while (ss >> token)
                numbers.push_back(parse_number(token, line_no));
            if (numbers.size() % 2 != 0)
                syntax_error(line_no, "'maximal:' expects count/dimension pairs");
            for (std::size_t i = 0; i < numbers.size(); i += 2)
            {
                if (numbers[i + 1] > std::numeric_limits<std::uint32_t>::max())
                    syntax_error(line_no, "dimension too large");
                entries.push_back({numbers[i], static_cast<std::uint32_t>(numbers[i + 1])});
            }
        }
        else if (key == "relation")
        {
            std::vector<Simplex> members;
            std::string_view rest = body;
            while (true)
            {
                const auto tilde = rest.find('~');
                members.push_back(parse_simplex(rest.substr(0, tilde), line_no));
                if (tilde == std::string_view::npos)
                    break;
                rest.remove_prefix(tilde + 1);
            }
            try
            {
                relations.emplace_back(std::move(members));
            }
            catch (const Error& e)
            {
                throw Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        else
        {
            syntax_error(line_no, "unknown key '" + std::string(key) + "'");
        }
    }
    return GeneratingSet(ShapeList(std::move(entries)), std::move(relations));
}

GeneratingSet parse_genset(const std::string& text)
{
    std::istringstream in(text);
    return parse_genset(in);
}

std::string serialize_genset(const GeneratingSet& g)
{
    std::string out = "maximal:";
    for (const auto& e : g.shape().entries())
        out += " " + std::to_string(e.count) + " " + std::to_string(e.dim);
    out += '\n';
    for (const auto& r : g.relations())
    {
        out += "relation: ";
        for (std::size_t i = 0; i < r.members().size(); ++i)
        {
            if (i > 0)
                out += " ~ ";
            out += r.members()[i].to_string();
        }
        out += '\n';
    }
    return out;
}

} // namespace tgen
