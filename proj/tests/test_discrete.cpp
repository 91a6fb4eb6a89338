#include <doctest.h>

#include "nakarep/errors.hpp"
#include "nakarep/quiver.hpp"
#include "support.hpp"

using namespace nakarep;
using support::iv;
using support::q;

namespace {

const KupischSeries k332{{3, 3, 2}};

}  // namespace

TEST_CASE("series validation") {
    CHECK(validate_series(k332).empty());
    CHECK_FALSE(validate_series({{1, 3}}).empty());
    CHECK(validate_series({{2, 2, 2, 2}}).empty());
    CHECK(validate_series({{3, 2, 1}}).empty());
    CHECK_FALSE(validate_series({{2, 0}}).empty());
    CHECK_FALSE(validate_series({{}}).empty());
    CHECK(k332.str() == "3,3,2");
}

TEST_CASE("associated Kupisch profile") {
    const auto p = associated_kupisch(k332);
    CHECK(equals(p.successor, PiecewiseMap::periodic({{q(0), FracLinear::constant(1)}, {q(1, 3), FracLinear::constant(q(4, 3))}})));
    const auto one = associated_kupisch({{1}});
    CHECK(kappa_at(one, q(1, 2)) == q(1, 2));
    CHECK(kappa_at(one, 0) == 1);
    CHECK_THROWS_AS(associated_kupisch({{1, 3}}), InvalidSeries);
}

TEST_CASE("associated profiles have no separation points") {
    support::Rng rng(43);
    for (int i = 0; i < 50; ++i) {
        const auto p = associated_kupisch(support::random_series(rng, 5, 5));
        CHECK(validate_profile(p).empty());
        CHECK(separation_points(p).points.empty());
    }
}

TEST_CASE("embedding") {
    CHECK(embed_module(k332, {1, 1}) == iv("(1/3,2/3]"));
    CHECK(embed_module(k332, {0, 3}) == iv("(0,1]"));
    CHECK(embed_module(k332, {2, 2}) == iv("(2/3,4/3]"));
    CHECK(embed_module(k332, {2, 2}) == projective_at(associated_kupisch(k332), q(2, 3), EndpointKind::Open));
    CHECK_THROWS_AS(embed_module(k332, {2, 3}), InvalidModule);
    CHECK_THROWS_AS(embed_module(k332, {3, 1}), InvalidModule);
    CHECK_THROWS_AS(embed_module(k332, {0, 0}), InvalidModule);
}

TEST_CASE("extraction") {
    CHECK(extract_module(k332, iv("(1/3,1]")) == DiscreteModule{1, 2});
    CHECK_THROWS_AS(extract_module(k332, iv("(0,7/6]")), NotGridAligned);
    CHECK_THROWS_AS(extract_module(k332, iv("[0,1/3]")), NotGridAligned);
    CHECK_THROWS_AS(extract_module(k332, iv("(2/3,5/3]")), IncompatibleModule);
    CHECK(extract_module(k332, iv("(4/3,2]")) == DiscreteModule{1, 2});
    support::Rng rng(47);
    for (int i = 0; i < 50; ++i) {
        const auto s = support::random_series(rng, 5, 5);
        for (const auto& m : support::all_modules(s)) CHECK(extract_module(s, embed_module(s, m)) == m);
    }
}

TEST_CASE("discrete hom dimensions") {
    CHECK(discrete_hom_dim(k332, {0, 3}, {0, 1}) == 1);
    CHECK(discrete_hom_dim(k332, {0, 1}, {0, 3}) == 0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(discrete_hom_dim(k332, {i, 1}, {i, 1}) == 1);
    CHECK(discrete_hom_dim(k332, {2, 1}, {0, 3}) == 1);
}

TEST_CASE("algebra dimension") {
    CHECK(algebra_dim_check(k332) == 8);
    CHECK(algebra_dim_check({{1}}) == 1);
    CHECK(algebra_dim_check({{2, 2}}) == 4);
}

TEST_CASE("quiver linear algebra") {
    CHECK(rank({{1, 2}, {2, 4}}) == 1);
    CHECK(rank({{1, 0}, {0, 1}}) == 2);
    CHECK(rank({}) == 0);
    // A2: k -> k (identity) and k -> 0
    const std::vector<QuiverArrow> a2{{0, 1}};
    const QuiverRep p1{{1, 1}, {{{Rational(1)}}}};
    const QuiverRep s1{{1, 0}, {Matrix{}}};
    const QuiverRep s2{{0, 1}, {Matrix{{}}}};
    CHECK(hom_dimension(a2, p1, s1) == 1);
    CHECK(hom_dimension(a2, s1, p1) == 0);
    CHECK(hom_dimension(a2, s2, p1) == 1);
    CHECK(hom_dimension(a2, p1, p1) == 1);
}
