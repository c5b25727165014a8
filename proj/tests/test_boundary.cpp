#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "tgen/boundary.hpp"
#include "tgen/error.hpp"
#include "tgen/homology.hpp"
#include "tgen/oracle.hpp"

using namespace tgen;

namespace
{

GeneratingSet torus()
{
    return GeneratingSet(ShapeList{{2, 2}}, {Relation{Simplex{0, 1}, Simplex{4, 5}},
                                             Relation{Simplex{0, 2}, Simplex{3, 5}},
                                             Relation{Simplex{1, 2}, Simplex{3, 4}}});
}

BoundaryMatrix dense(std::size_t rows, std::size_t cols, std::vector<std::int64_t> values)
{
    BoundaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, values[r * cols + c]);
    return m;
}

std::uint64_t faces_of_dim_at_least_one(std::uint64_t d)
{
    std::uint64_t total = 0;
    for (std::uint64_t k = 1; k <= d; ++k)
        total += binomial(d + 1, k + 1);
    return total;
}

} // namespace

TEST_CASE("BoundaryMatrix accumulates and drops zeros")
{
    BoundaryMatrix m(2, 2);
    m.add(0, 1, 1);
    m.add(0, 1, 1);
    CHECK(m.at(0, 1) == 2);
    m.add(0, 1, -2);
    CHECK(m.entries().empty());
    CHECK_THROWS_AS(m.add(2, 0, 1), Error);
}

TEST_CASE("build_index")
{
    const GeneratingSet t = torus();
    const IndexMap idx = build_index(t, closure_from_relations(t));
    CHECK(idx.count(0) == 1);
    CHECK(idx.representatives(1) == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(idx.pos(Simplex{0, 2}) == 1);
    CHECK(idx.representatives(2) == std::vector<Simplex>{{0, 1, 2}, {3, 4, 5}});
    CHECK_THROWS_AS(idx.pos(Simplex{3, 4}), Error);

    const GeneratingSet tri(ShapeList{{1, 2}}, {});
    CHECK(build_index(tri, RelationMap()).pos(Simplex{1}) == 1);

    const GeneratingSet s8(ShapeList{{1, 8}}, {});
    CHECK(build_index(s8, RelationMap()).count(7) == 9);
}

TEST_CASE("pos_closed_form")
{
    CHECK(pos_closed_form(Simplex{3, 4, 5}, ShapeList{{2, 2}}) == 1);
    CHECK(pos_closed_form(Simplex{0, 1, 2}, ShapeList{{2, 2}}) == 0);
    CHECK_THROWS_AS(pos_closed_form(Simplex{2, 3}, ShapeList{{2, 2}}), Error);
    CHECK_THROWS_AS(pos_closed_form(Simplex{9}, ShapeList{{2, 2}}), Error);

    SUBCASE("agrees with the lookup table on every face of {(1,3)}")
    {
        const GeneratingSet g(ShapeList{{1, 3}}, {});
        const IndexMap idx = build_index(g, RelationMap());
        for (std::size_t k = 0; k <= 3; ++k)
            for (const auto& s : idx.representatives(k))
                CHECK(pos_closed_form(s, g.shape()) == idx.pos(s));
    }

    SUBCASE("agrees with the lookup table on random relation-free shapes")
    {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 40; ++trial)
        {
            const GeneratingSet g(testing::random_shape(rng, 4, 5), {});
            const IndexMap idx = build_index(g, RelationMap());
            for (std::size_t k = 0; k < idx.dimensions(); ++k)
                for (const auto& s : idx.representatives(k))
                    CHECK(pos_closed_form(s, g.shape()) == idx.pos(s));
        }
    }
}

TEST_CASE("bcon")
{
    SUBCASE("single triangle column")
    {
        const GeneratingSet g(ShapeList{{1, 2}}, {});
        const RelationMap m;
        const IndexMap idx = build_index(g, m);
        std::vector<BoundaryMatrix> mats{BoundaryMatrix(0, 3), BoundaryMatrix(3, 3), BoundaryMatrix(3, 1)};
        BconContext ctx{m, idx, mats};
        bcon(Simplex{0, 1, 2}, 0, ctx);
        CHECK(mats[2] == dense(3, 1, {1, -1, 1}));
        CHECK(ctx.generations == 4);
    }

    SUBCASE("non-representative is ignored")
    {
        const GeneratingSet t = torus();
        const RelationMap m = closure_from_relations(t);
        const IndexMap idx = build_index(t, m);
        std::vector<BoundaryMatrix> mats{BoundaryMatrix(0, 1), BoundaryMatrix(1, 3), BoundaryMatrix(3, 2)};
        const auto before = mats;
        BconContext ctx{m, idx, mats};
        bcon(Simplex{3, 4}, 0, ctx);
        CHECK(mats == before);
        CHECK(ctx.generations == 0);
    }
}

TEST_CASE("build_all")
{
    SUBCASE("torus")
    {
        const BoundaryComplex d = build_all(torus(), {.instrument = true});
        REQUIRE(d.matrices.size() == 3);
        CHECK(d.matrices[0] == BoundaryMatrix(0, 1));
        CHECK(d.matrices[1] == BoundaryMatrix(1, 3));
        CHECK(d.matrices[2] == dense(3, 2, {1, 1, -1, -1, 1, 1}));
        CHECK(verify_chain_complex(d).ok());
        CHECK(generation_count(d) == 5);
        CHECK(generation_count(d) <= generation_count(build_all(GeneratingSet(ShapeList{{2, 2}}, {}),
                                                                {.instrument = true})));
    }

    SUBCASE("single triangle")
    {
        const BoundaryComplex d = build_all(GeneratingSet(ShapeList{{1, 2}}, {}));
        REQUIRE(d.matrices.size() == 3);
        CHECK(d.matrices[1] == dense(3, 3, {-1, -1, 0, 1, 0, -1, 0, 1, 1}));
        CHECK(d.matrices[2] == dense(3, 1, {1, -1, 1}));
        CHECK_THROWS_AS(generation_count(d), Error);
    }

    SUBCASE("empty generating set")
    {
        const BoundaryComplex d = build_all(GeneratingSet(), {.instrument = true});
        CHECK(d.matrices.empty());
        CHECK(generation_count(d) == 0);
    }

    SUBCASE("drop_top removes the last matrix")
    {
        const BoundaryComplex d = build_all(GeneratingSet(ShapeList{{1, 8}}, {}), {.drop_top = true});
        CHECK(d.matrices.size() == 8);
        CHECK(d.matrices.back().cols() == 9);
    }

    SUBCASE("regression: face 0 of the top simplex must be generated")
    {
        // A literal `i > p` recursion guard never visits {1,2} here.
        const BoundaryComplex d = build_all(GeneratingSet(ShapeList{{1, 2}}, {}));
        const BoundaryComplex naive = oracle::naive_boundaries(GeneratingSet(ShapeList{{1, 2}}, {}));
        CHECK(d.matrices == naive.matrices);
        CHECK(d.matrices[1].at(2, 2) == 1);
    }
}

TEST_CASE("single generation without relations")
{
    for (std::uint32_t d = 1; d <= 10; ++d)
    {
        const BoundaryComplex c = build_all(GeneratingSet(ShapeList{{1, d}}, {}), {.instrument = true});
        CHECK(generation_count(c) == faces_of_dim_at_least_one(d));
    }
    const BoundaryComplex mixed =
        build_all(GeneratingSet(ShapeList{{2, 1}, {1, 3}, {3, 4}}, {}), {.instrument = true});
    CHECK(generation_count(mixed) == 2 * 1 + 11 + 3 * 26);
}

TEST_CASE("properties on random generating sets")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial)
    {
        const GeneratingSet g = testing::random_genset(rng);
        CAPTURE(serialize_genset(g));
        const BoundaryComplex d = build_all(g, {.instrument = true});

        CHECK(verify_chain_complex(d).ok());
        CHECK(d.matrices == oracle::naive_boundaries(g).matrices);

        for (std::size_t k = 1; k < d.matrices.size(); ++k)
        {
            std::vector<std::size_t> per_col(d.matrices[k].cols(), 0);
            for (const auto& [key, value] : d.matrices[k].entries())
            {
                ++per_col[key.second];
                CHECK(std::abs(value) <= static_cast<std::int64_t>(k + 1));
            }
            for (auto n : per_col)
                CHECK(n <= k + 1);
        }

        // Every representative of dimension >= 1 is generated exactly once.
        std::uint64_t reps = 0;
        for (std::size_t k = 1; k < d.matrices.size(); ++k)
            reps += d.matrices[k].cols();
        CHECK(generation_count(d) == reps);

        // Adding a relation never increases the work.
        if (face_count(g.shape(), 0) < 2)
            continue;
        auto more = g.relations();
        more.push_back(testing::random_relation(rng, g.shape()));
        const GeneratingSet bigger(g.shape(), more);
        CHECK(generation_count(build_all(bigger, {.instrument = true})) <= generation_count(d));
    }
}

TEST_CASE("boundary text format")
{
    const BoundaryComplex d = build_all(torus());
    const std::string text = write_boundary_text(d.matrices);
    CHECK(text == "matrix 0 0 1\n"
                  "matrix 1 1 3\n"
                  "matrix 2 3 2\n"
                  "0 0 1\n0 1 1\n1 0 -1\n1 1 -1\n2 0 1\n2 1 1\n");
    CHECK(parse_boundary_text(text) == d.matrices);
    CHECK(write_boundary_text({}).empty());

    CHECK_THROWS_AS(parse_boundary_text("0 0 1\n"), Error);
    CHECK_THROWS_AS(parse_boundary_text("matrix 1 1 1\n"), Error);
    CHECK_THROWS_AS(parse_boundary_text("matrix 0 1 1\n0 0 0\n"), Error);
    CHECK_THROWS_AS(parse_boundary_text("matrix 0 1 1\n0 0 1\n0 0 2\n"), Error);
    CHECK_THROWS_AS(parse_boundary_text("matrix 0 1 1\n3 0 1\n"), Error);
}
