#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "support/generators.hpp"
#include "support/matrix_oracles.hpp"
#include "tgen/error.hpp"
#include "tgen/homology.hpp"
#include "tgen/oracle.hpp"

using namespace tgen;
using namespace tgen::testing;

namespace
{

BoundaryMatrix sparse(std::size_t rows, std::size_t cols, std::vector<std::int64_t> values)
{
    BoundaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, values[r * cols + c]);
    return m;
}

} // namespace

TEST_CASE("smith_normal_form examples")
{
    CHECK(smith_normal_form(DenseMatrix{{1, 0}, {0, 1}}).invariant_factors == std::vector<Integer>{1, 1});
    const SnfResult r = smith_normal_form(DenseMatrix{{2, 4}, {6, 8}});
    CHECK(r.invariant_factors == std::vector<Integer>{2, 4});
    CHECK(r.rank == 2);
    CHECK(smith_normal_form(DenseMatrix(3, 2)).invariant_factors.empty());
    CHECK(smith_normal_form(DenseMatrix()).rank == 0);
    CHECK(smith_normal_form(DenseMatrix{{6, 0, 0, 0, 0}, {0, 10, 0, 0, 0}, {0, 0, 15, 0, 0}, {0, 0, 0, 0, 0}})
              .invariant_factors == std::vector<Integer>{1, 30, 30});
}

TEST_CASE("smith_normal_form agrees with determinantal divisors")
{
    for (const auto& m : fixed_matrices())
    {
        const auto expected = factors_from_minors(m);
        const SnfResult r = smith_normal_form(m);
        CHECK(r.invariant_factors == expected);
        CHECK(r.rank == bareiss_rank(m));
        CHECK(divisibility_chain(r.invariant_factors));
    }
}

TEST_CASE("smith_normal_form is invariant under unimodular scrambles")
{
    std::mt19937_64 rng(314);
    for (const auto& m : fixed_matrices())
    {
        const auto expected = smith_normal_form(m).invariant_factors;
        for (int trial = 0; trial < 50; ++trial)
        {
            const DenseMatrix s = scramble(m, rng);
            CHECK(smith_normal_form(s).invariant_factors == expected);
        }
    }
}

TEST_CASE("smith_normal_form rank matches Bareiss on random matrices")
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> dim(1, 12);
    std::uniform_int_distribution<int> val(-3, 3);
    std::bernoulli_distribution sparse_entry(0.6);
    for (int trial = 0; trial < 60; ++trial)
    {
        DenseMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = sparse_entry(rng) ? 0 : val(rng);
        const SnfResult r = smith_normal_form(m);
        CHECK(r.rank == bareiss_rank(m));
        CHECK(r.rank <= std::min(m.rows(), m.cols()));
        CHECK(divisibility_chain(r.invariant_factors));
    }
}

TEST_CASE("primary_decomposition")
{
    const std::vector<Integer> f{2, 12, 360};
    CHECK(primary_decomposition(f) == std::vector<Integer>{2, 3, 4, 5, 8, 9});
}

TEST_CASE("betti_numbers")
{
    SUBCASE("single vertex")
    {
        const auto h = betti_numbers(build_all(GeneratingSet(ShapeList{{1, 0}}, {})));
        CHECK(h.betti == std::vector<std::size_t>{1});
    }

    SUBCASE("torus")
    {
        const GeneratingSet t(ShapeList{{2, 2}}, {Relation{Simplex{0, 1}, Simplex{4, 5}},
                                                  Relation{Simplex{0, 2}, Simplex{3, 5}},
                                                  Relation{Simplex{1, 2}, Simplex{3, 4}}});
        const auto h = betti_numbers(build_all(t));
        CHECK(h.betti == std::vector<std::size_t>{1, 2, 1});
        for (const auto& t : h.torsion)
            CHECK(t.empty());
    }

    SUBCASE("boundary of the 8-simplex is a 7-sphere")
    {
        const auto h = betti_numbers(build_all(GeneratingSet(ShapeList{{1, 8}}, {}), {.drop_top = true}));
        CHECK(h.betti == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0, 1});
    }

    SUBCASE("disjoint relation-free simplices are contractible pieces")
    {
        const auto h = betti_numbers(build_all(GeneratingSet(ShapeList{{2, 0}, {1, 2}, {3, 4}}, {})));
        CHECK(h.betti == std::vector<std::size_t>{6, 0, 0, 0, 0});
    }

    SUBCASE("torsion from a degree-two attaching map")
    {
        const std::vector<BoundaryMatrix> cw{BoundaryMatrix(0, 1), BoundaryMatrix(1, 1), sparse(1, 1, {2})};
        const auto h = betti_numbers(cw);
        CHECK(h.betti == std::vector<std::size_t>{1, 0, 0});
        CHECK(h.torsion[1] == std::vector<Integer>{2});
    }

    SUBCASE("chain law violation is reported")
    {
        std::vector<BoundaryMatrix> bad = build_all(GeneratingSet(ShapeList{{1, 2}}, {})).matrices;
        bad[2].set(0, 0, 5);
        try
        {
            betti_numbers(bad);
            FAIL("expected ChainLawViolation");
        }
        catch (const Error& e)
        {
            CHECK(e.kind() == ErrorKind::ChainLawViolation);
            CHECK(std::string(e.what()).find("k=2") != std::string::npos);
        }
    }
}

TEST_CASE("verify_chain_complex")
{
    const BoundaryComplex torus = build_all(GeneratingSet(
        ShapeList{{2, 2}}, {Relation{Simplex{0, 1}, Simplex{4, 5}}, Relation{Simplex{0, 2}, Simplex{3, 5}},
                            Relation{Simplex{1, 2}, Simplex{3, 4}}}));
    const ChainReport ok = verify_chain_complex(torus);
    CHECK(ok.ok());
    CHECK(ok.checks.size() == 2);

    const std::vector<BoundaryMatrix> single{BoundaryMatrix(0, 4)};
    CHECK(verify_chain_complex(single).ok());
    CHECK(verify_chain_complex(single).checks.empty());

    // Corrupt one entry of D_2 of the triangle.
    std::vector<BoundaryMatrix> bad = build_all(GeneratingSet(ShapeList{{1, 2}}, {})).matrices;
    bad[2].set(1, 0, 1);
    const ChainReport report = verify_chain_complex(bad);
    CHECK_FALSE(report.ok());
    const auto failure = report.first_failure();
    REQUIRE(failure);
    CHECK(failure->k == 2);
    CHECK_FALSE(failure->structural);
    // (D_1 * D_2)[0,0] = -1*1 + -1*1 + 0 = -2 once {0,2} enters with +1.
    CHECK(failure->row == 0);
    CHECK(failure->col == 0);
    CHECK(failure->value == -2);

    std::vector<BoundaryMatrix> mismatched{BoundaryMatrix(0, 2), BoundaryMatrix(3, 1)};
    const ChainReport structural = verify_chain_complex(mismatched);
    REQUIRE(structural.first_failure());
    CHECK(structural.first_failure()->structural);
}

TEST_CASE("homology properties on random generating sets")
{
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 150; ++trial)
    {
        const GeneratingSet g = testing::random_genset(rng);
        CAPTURE(serialize_genset(g));
        const BoundaryComplex d = build_all(g);
        const HomologyProfile h = betti_numbers(d);

        long long chi = 0;
        for (std::size_t k = 0; k < h.betti.size(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(h.betti[k]);
        CHECK(chi == euler_characteristic(d.matrices));

        for (std::size_t k = 1; k < d.matrices.size(); ++k)
            CHECK(smith_normal_form(d.matrices[k]).rank == bareiss_rank(DenseMatrix(d.matrices[k])));

        if (g.relations().empty())
        {
            std::size_t pieces = 0;
            for (const auto& e : g.shape().entries())
                pieces += e.count;
            CHECK(h.betti[0] == pieces);
            for (std::size_t k = 1; k < h.betti.size(); ++k)
                CHECK(h.betti[k] == 0);
        }
    }
}
