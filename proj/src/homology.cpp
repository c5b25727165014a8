#include "tgen/homology.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "tgen/error.hpp"

namespace tgen
{

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<long long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows)
    {
        if (row.size() != cols_)
            throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
        for (long long v : row)
            data_.emplace_back(v);
    }
}

DenseMatrix::DenseMatrix(const BoundaryMatrix& sparse) : DenseMatrix(sparse.rows(), sparse.cols())
{
    for (const auto& [key, value] : sparse.entries())
        (*this)(key.first, key.second) = value;
}

namespace
{

/// Smallest nonzero |a(i, j)| with i, j >= t, first in row-major order.
bool find_pivot(const DenseMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc)
{
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i)
    {
        for (std::size_t j = t; j < a.cols(); ++j)
        {
            const Integer& v = a(i, j);
            if (v == 0)
                continue;
            Integer mag = abs(v);
            if (!found || mag < best)
            {
                found = true;
                best = std::move(mag);
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

void swap_rows(DenseMatrix& a, std::size_t r1, std::size_t r2)
{
    if (r1 == r2)
        return;
    for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a(r1, j), a(r2, j));
}

void swap_cols(DenseMatrix& a, std::size_t c1, std::size_t c2)
{
    if (c1 == c2)
        return;
    for (std::size_t i = 0; i < a.rows(); ++i)
        std::swap(a(i, c1), a(i, c2));
}

/// Moves the smallest nonzero of row t / column t (from index t on) to
/// (t, t).
void repivot_line(DenseMatrix& a, std::size_t t)
{
    std::size_t best_r = t, best_c = t;
    Integer best = abs(a(t, t));
    for (std::size_t i = t + 1; i < a.rows(); ++i)
    {
        if (a(i, t) != 0 && (best == 0 || abs(a(i, t)) < best))
        {
            best = abs(a(i, t));
            best_r = i;
            best_c = t;
        }
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j)
    {
        if (a(t, j) != 0 && (best == 0 || abs(a(t, j)) < best))
        {
            best = abs(a(t, j));
            best_r = t;
            best_c = j;
        }
    }
    swap_rows(a, t, best_r);
    swap_cols(a, t, best_c);
}

/// Clears row t and column t against the pivot; returns false if a nonzero
/// remainder was left behind.
bool eliminate(DenseMatrix& a, std::size_t t)
{
    bool clean = true;
    const Integer pivot = a(t, t);
    for (std::size_t i = t + 1; i < a.rows(); ++i)
    {
        if (a(i, t) == 0)
            continue;
        const Integer q = a(i, t) / pivot;
        for (std::size_t j = t; j < a.cols(); ++j)
            a(i, j) -= q * a(t, j);
        if (a(i, t) != 0)
            clean = false;
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j)
    {
        if (a(t, j) == 0)
            continue;
        const Integer q = a(t, j) / pivot;
        for (std::size_t i = t; i < a.rows(); ++i)
            a(i, j) -= q * a(i, t);
        if (a(t, j) != 0)
            clean = false;
    }
    return clean;
}

} // namespace

SnfResult smith_normal_form(DenseMatrix a)
{
    SnfResult result;
    const std::size_t limit = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < limit; ++t)
    {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(a, t, pr, pc))
            break;
        swap_rows(a, t, pr);
        swap_cols(a, t, pc);

        while (true)
        {
            if (!eliminate(a, t))
            {
                repivot_line(a, t);
                continue;
            }
            // Row and column t are clear; enforce divisibility of the rest.
            bool divisible = true;
            for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
            {
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                {
                    if (a(i, j) % a(t, t) != 0)
                    {
                        for (std::size_t c = t; c < a.cols(); ++c)
                            a(t, c) += a(i, c);
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible)
                break;
        }
        result.invariant_factors.push_back(abs(a(t, t)));
    }
    result.rank = result.invariant_factors.size();
    return result;
}

SnfResult smith_normal_form(const BoundaryMatrix& a)
{
    return smith_normal_form(DenseMatrix(a));
}

std::vector<Integer> primary_decomposition(std::span<const Integer> factors)
{
    std::vector<Integer> out;
    for (Integer n : factors)
    {
        if (n < 0)
            n = -n;
        for (Integer p = 2; p * p <= n; ++p)
        {
            if (n % p != 0)
                continue;
            Integer power = 1;
            while (n % p == 0)
            {
                n /= p;
                power *= p;
            }
            out.push_back(power);
        }
        if (n > 1)
            out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ChainCheck::describe() const
{
    if (ok)
        return "k=" + std::to_string(k) + ": ok";
    if (structural)
        return "k=" + std::to_string(k) + ": D_" + std::to_string(k - 1) + " columns do not match D_" +
               std::to_string(k) + " rows";
    return "k=" + std::to_string(k) + ": (D_" + std::to_string(k - 1) + " * D_" + std::to_string(k) +
           ")[" + std::to_string(row) + "," + std::to_string(col) + "] = " + std::to_string(value);
}

bool ChainReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const ChainCheck& c) { return c.ok; });
}

std::optional<ChainCheck> ChainReport::first_failure() const
{
    for (const auto& c : checks)
    {
        if (!c.ok)
            return c;
    }
    return std::nullopt;
}

ChainReport verify_chain_complex(std::span<const BoundaryMatrix> matrices)
{
    ChainReport report;
    for (std::size_t k = 1; k < matrices.size(); ++k)
    {
        const auto& lower = matrices[k - 1];
        const auto& upper = matrices[k];
        ChainCheck check;
        check.k = k;
        if (lower.cols() != upper.rows())
        {
            check.ok = false;
            check.structural = true;
            report.checks.push_back(check);
            continue;
        }

        std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> lower_cols(lower.cols());
        for (const auto& [key, value] : lower.entries())
            lower_cols[key.second].emplace_back(key.first, value);

        std::map<BoundaryMatrix::Key, std::int64_t> product;
        for (const auto& [key, value] : upper.entries())
        {
            for (const auto& [row, lv] : lower_cols[key.first])
                product[{row, key.second}] += lv * value;
        }
        for (const auto& [key, value] : product)
        {
            if (value != 0)
            {
                check.ok = false;
                check.row = key.first;
                check.col = key.second;
                check.value = value;
                break;
            }
        }
        report.checks.push_back(check);
    }
    return report;
}

ChainReport verify_chain_complex(const BoundaryComplex& d)
{
    return verify_chain_complex(d.matrices);
}

HomologyProfile betti_numbers(std::span<const BoundaryMatrix> matrices)
{
    const ChainReport report = verify_chain_complex(matrices);
    if (auto failure = report.first_failure())
        throw Error(ErrorKind::ChainLawViolation, "chain complex law violated at " + failure->describe());

    const std::size_t n = matrices.size();
    std::vector<SnfResult> snf(n);
    for (std::size_t k = 1; k < n; ++k)
        snf[k] = smith_normal_form(matrices[k]);

    HomologyProfile profile;
    profile.betti.resize(n);
    profile.torsion.resize(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        const std::size_t rank_here = snf[k].rank;
        const std::size_t rank_above = k + 1 < n ? snf[k + 1].rank : 0;
        profile.betti[k] = matrices[k].cols() - rank_here - rank_above;
        if (k + 1 < n)
        {
            for (const auto& f : snf[k + 1].invariant_factors)
            {
                if (f > 1)
                    profile.torsion[k].push_back(f);
            }
        }
    }
    return profile;
}

HomologyProfile betti_numbers(const BoundaryComplex& d)
{
    return betti_numbers(d.matrices);
}

long long euler_characteristic(std::span<const BoundaryMatrix> matrices)
{
    long long chi = 0;
    for (std::size_t k = 0; k < matrices.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(matrices[k].cols());
    return chi;
}

} // namespace tgen
