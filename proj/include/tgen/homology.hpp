#ifndef TGEN_HOMOLOGY_HPP
#define TGEN_HOMOLOGY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tgen/boundary.hpp"

namespace tgen
{

using Integer = boost::multiprecision::cpp_int;

/// Row-major dense integer matrix used for reduction.
class DenseMatrix
{
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    DenseMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    explicit DenseMatrix(const BoundaryMatrix& sparse);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

struct SnfResult
{
    /// Positive, each dividing the next.
    std::vector<Integer> invariant_factors;
    std::size_t rank = 0;
};

/// Integer Smith normal form by unimodular row and column operations,
/// pivoting on the smallest nonzero magnitude (ties broken by row, then
/// column).
SnfResult smith_normal_form(DenseMatrix a);
SnfResult smith_normal_form(const BoundaryMatrix& a);

struct HomologyProfile
{
    std::vector<std::size_t> betti;
    /// torsion[k]: invariant factors > 1 of D_{k+1}, i.e. the torsion of H_k.
    std::vector<std::vector<Integer>> torsion;
};

/// Splits invariant factors into their prime-power components, sorted.
std::vector<Integer> primary_decomposition(std::span<const Integer> factors);

struct ChainCheck
{
    std::size_t k = 0;
    bool ok = true;
    /// Row/column counts of D_{k-1} and D_k disagree.
    bool structural = false;
    /// First nonzero of D_{k-1} * D_k in row-major order.
    std::size_t row = 0;
    std::size_t col = 0;
    std::int64_t value = 0;

    std::string describe() const;
};

struct ChainReport
{
    std::vector<ChainCheck> checks;

    bool ok() const;
    std::optional<ChainCheck> first_failure() const;
};

/// Checks D_{k-1} * D_k = 0 for every k >= 1.
ChainReport verify_chain_complex(std::span<const BoundaryMatrix> matrices);
ChainReport verify_chain_complex(const BoundaryComplex& d);

/// b_k = #k-representatives - rank D_k - rank D_{k+1}.  Throws
/// Error(ChainLawViolation) naming the first nonzero of D_{k-1} * D_k.
HomologyProfile betti_numbers(std::span<const BoundaryMatrix> matrices);
HomologyProfile betti_numbers(const BoundaryComplex& d);

/// Euler characteristic from per-dimension cell counts (matrix columns).
long long euler_characteristic(std::span<const BoundaryMatrix> matrices);

} // namespace tgen

#endif
