#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tgen/boundary.hpp"
#include "tgen/error.hpp"
#include "tgen/genset.hpp"
#include "tgen/homology.hpp"
#include "tgen/incidence.hpp"
#include "tgen/oracle.hpp"

namespace tgen::cli
{

namespace
{

struct RunConfig
{
    std::string input;
    std::string output;
    std::string from;
    std::string to;
    std::string matrices;
    bool drop_top = false;
    bool permissive = false;
    bool stats = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Syntax, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// "incidence" when the first meaningful line is an incidence header.
std::string sniff_format(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
    {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::string first;
        if (words >> first)
            return first == "incidence" ? "incidence" : "genset";
    }
    return "genset";
}

IncidenceMode mode_of(const RunConfig& cfg)
{
    return cfg.permissive ? IncidenceMode::Permissive : IncidenceMode::Strict;
}

GeneratingSet load_genset(const RunConfig& cfg, std::ostream& err)
{
    const std::string text = read_file(cfg.input);
    const std::string format = cfg.from.empty() ? sniff_format(text) : cfg.from;
    GeneratingSet g = format == "incidence" ? from_incidence(parse_incidence(text), mode_of(cfg))
                                            : parse_genset(text);
    for (const auto& w : g.warnings())
        err << "warning: " << w << '\n';
    return g;
}

class Output
{
public:
    Output(const std::string& path, std::ostream& fallback) : fallback_(fallback)
    {
        if (!path.empty())
        {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw Error(ErrorKind::Syntax, "cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const GeneratingSet g = load_genset(cfg, err);
    const BoundaryComplex d = build_all(g, {.drop_top = cfg.drop_top, .instrument = cfg.stats});
    Output sink(cfg.output, out);
    sink.stream() << write_boundary_text(d.matrices);
    if (cfg.stats)
        err << "generations: " << generation_count(d) << '\n';
    return Ok;
}

int cmd_betti(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const GeneratingSet g = load_genset(cfg, err);
    const BoundaryComplex d = build_all(g, {.drop_top = cfg.drop_top});
    const HomologyProfile h = betti_numbers(d);
    Output sink(cfg.output, out);
    auto& os = sink.stream();
    os << "betti:";
    for (auto b : h.betti)
        os << ' ' << b;
    os << '\n';
    for (std::size_t k = 0; k < h.torsion.size(); ++k)
    {
        if (h.torsion[k].empty())
            continue;
        os << "torsion[" << k << "]:";
        for (const auto& f : h.torsion[k])
            os << ' ' << f;
        os << '\n';
    }
    return Ok;
}

int cmd_convert(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const std::string text = read_file(cfg.input);
    const std::string from = cfg.from.empty() ? sniff_format(text) : cfg.from;
    std::string result;
    if (from == "incidence")
    {
        const IncidenceMatrix m = parse_incidence(text);
        result = cfg.to == "incidence" ? serialize_incidence(m)
                                       : serialize_genset(from_incidence(m, mode_of(cfg)));
    }
    else
    {
        const GeneratingSet g = parse_genset(text);
        for (const auto& w : g.warnings())
            err << "warning: " << w << '\n';
        result = cfg.to == "incidence" ? serialize_incidence(to_incidence(g)) : serialize_genset(g);
    }
    Output sink(cfg.output, out);
    sink.stream() << result;
    return Ok;
}

std::optional<std::string> first_matrix_difference(const std::vector<BoundaryMatrix>& fast,
                                                   const std::vector<BoundaryMatrix>& naive)
{
    if (fast.size() != naive.size())
        return "matrix count " + std::to_string(fast.size()) + " vs " + std::to_string(naive.size());
    for (std::size_t k = 0; k < fast.size(); ++k)
    {
        const auto& a = fast[k];
        const auto& b = naive[k];
        if (a.rows() != b.rows() || a.cols() != b.cols())
            return "D_" + std::to_string(k) + " is " + std::to_string(a.rows()) + "x" +
                   std::to_string(a.cols()) + ", oracle " + std::to_string(b.rows()) + "x" +
                   std::to_string(b.cols());
        std::map<BoundaryMatrix::Key, std::pair<std::int64_t, std::int64_t>> diff;
        for (const auto& [key, v] : a.entries())
            diff[key].first = v;
        for (const auto& [key, v] : b.entries())
            diff[key].second = v;
        for (const auto& [key, pair] : diff)
        {
            if (pair.first != pair.second)
                return "D_" + std::to_string(k) + "[" + std::to_string(key.first) + "," +
                       std::to_string(key.second) + "] = " + std::to_string(pair.first) + ", oracle " +
                       std::to_string(pair.second);
        }
    }
    return std::nullopt;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const GeneratingSet g = load_genset(cfg, err);
    BoundaryComplex fast = build_all(g, {.drop_top = cfg.drop_top, .instrument = true});
    const std::uint64_t generations = generation_count(fast);
    if (!cfg.matrices.empty())
        fast.matrices = parse_boundary_text(read_file(cfg.matrices));

    BoundaryComplex naive = oracle::naive_boundaries(g);
    if (cfg.drop_top && !naive.matrices.empty())
        naive.matrices.pop_back();

    Output sink(cfg.output, out);
    auto& os = sink.stream();
    bool all_ok = true;

    const ChainReport report = verify_chain_complex(fast.matrices);
    for (const auto& c : report.checks)
    {
        os << "chain-law " << (c.ok ? "pass " : "FAIL ") << c.describe() << '\n';
        all_ok = all_ok && c.ok;
    }
    if (report.checks.empty())
        os << "chain-law pass (no composable pairs)\n";

    const oracle::FullComplex complex = oracle::naive_complex(g);
    std::optional<std::string> closure_diff;
    for (const auto& faces : complex.faces)
    {
        for (const auto& f : faces)
        {
            const Simplex a = fast.relmap.resolve(f);
            const Simplex b = naive.relmap.resolve(f);
            if (!(a == b))
            {
                closure_diff = f.to_string() + " -> " + a.to_string() + ", oracle " + b.to_string();
                break;
            }
        }
        if (closure_diff)
            break;
    }
    os << "oracle-closure " << (closure_diff ? "FAIL " + *closure_diff : std::string("pass")) << '\n';
    all_ok = all_ok && !closure_diff;

    const auto matrix_diff = first_matrix_difference(fast.matrices, naive.matrices);
    os << "oracle-matrices "
       << (matrix_diff ? "FAIL " + *matrix_diff : std::string("pass (exact equality)")) << '\n';
    all_ok = all_ok && !matrix_diff;

    if (cfg.stats)
    {
        std::size_t naive_faces = 0;
        for (std::size_t k = 1; k < complex.faces.size(); ++k)
            naive_faces += complex.faces[k].size();
        os << "stats generations=" << generations << " naive-faces=" << naive_faces << '\n';
    }
    return all_ok ? Ok : CheckFailed;
}

int exit_code_for(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::NotRepresentable: return NotRepresentable;
    case ErrorKind::ChainLawViolation: return CheckFailed;
    default: return InputError;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Boundary matrices of simplicial and Delta-complexes from generating sets", "tgen"};
    app.require_subcommand(1);
    RunConfig cfg;

    const std::vector<std::string> formats{"genset", "incidence"};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "Input file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", cfg.output, "Write output to PATH instead of stdout");
    };
    auto add_from = [&](CLI::App* sub) {
        sub->add_option("--from", cfg.from, "Input format (default: detect)")
            ->check(CLI::IsMember(formats));
        sub->add_flag("--permissive", cfg.permissive, "Accept single-vertex incidence columns");
    };

    auto* build = app.add_subcommand("build", "Write minimal boundary matrices");
    add_common(build);
    add_from(build);
    build->add_flag("--drop-top", cfg.drop_top, "Omit the highest-dimensional matrix");
    build->add_flag("--stats", cfg.stats, "Report bcon generations on stderr");

    auto* betti = app.add_subcommand("betti", "Print Betti numbers and torsion");
    add_common(betti);
    add_from(betti);
    betti->add_flag("--drop-top", cfg.drop_top, "Omit the highest-dimensional matrix");

    auto* convert = app.add_subcommand("convert", "Convert between generating sets and incidence matrices");
    add_common(convert);
    add_from(convert);
    convert->add_option("--to", cfg.to, "Output format")->required()->check(CLI::IsMember(formats));

    auto* check = app.add_subcommand("check", "Verify against the brute-force oracle");
    add_common(check);
    add_from(check);
    check->add_flag("--drop-top", cfg.drop_top, "Omit the highest-dimensional matrix");
    check->add_flag("--stats", cfg.stats, "Print fast-path generations and naive face total");
    check->add_option("--matrices", cfg.matrices, "Check these boundary matrices instead of building")
        ->check(CLI::ExistingFile);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp& e)
    {
        out << app.help();
        return Ok;
    }
    catch (const CLI::ParseError& e)
    {
        err << "error: " << e.what() << '\n';
        return InputError;
    }

    try
    {
        if (*build)
            return cmd_build(cfg, out, err);
        if (*betti)
            return cmd_betti(cfg, out, err);
        if (*convert)
            return cmd_convert(cfg, out, err);
        return cmd_check(cfg, out, err);
    }
    catch (const Error& e)
    {
        err << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

} // namespace tgen::cli
