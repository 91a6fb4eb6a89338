#include <doctest.h>

#include "nakarep/errors.hpp"
#include "support.hpp"

#include <algorithm>

using namespace nakarep;
using support::iv;
using support::q;

namespace {

bool in(const Interval& u, const Rational& x) { return u.contains(x); }

// Direct check on a grid: U ∩ V is nonempty, every point of V below U ∩ V
// lies in U (a quotient of M_V) and every point of U above U ∩ V lies in V
// (a submodule of M_U).
std::optional<Interval> grid_left_intersect(const Interval& u, const Interval& v) {
    std::vector<Rational> ends{u.lo(), u.hi(), v.lo(), v.hi()};
    std::sort(ends.begin(), ends.end());
    std::vector<Rational> pts{ends.front() - 1, ends.back() + 1};
    for (std::size_t i = 0; i < ends.size(); ++i) {
        pts.push_back(ends[i]);
        if (i + 1 < ends.size()) pts.push_back((ends[i] + ends[i + 1]) / 2);
    }
    std::vector<Rational> common;
    for (const auto& x : pts)
        if (in(u, x) && in(v, x)) common.push_back(x);
    if (common.empty()) return std::nullopt;
    for (const auto& x : common)
        for (const auto& y : pts) {
            if (y < x && in(v, y) && !in(u, y)) return std::nullopt;
            if (x < y && in(u, y) && !in(v, y)) return std::nullopt;
        }
    const auto lo_kind = in(u, v.lo()) && in(v, v.lo()) ? EndpointKind::Closed : EndpointKind::Open;
    const auto hi_kind = in(u, u.hi()) && in(v, u.hi()) ? EndpointKind::Closed : EndpointKind::Open;
    return Interval::make(v.lo(), lo_kind, u.hi(), hi_kind);
}

}  // namespace

TEST_CASE("interval construction") {
    CHECK_THROWS_AS(Interval::open(1, 1), DomainError);
    CHECK_THROWS_AS(Interval::closed(2, 1), DomainError);
    CHECK_FALSE(Interval::make(q(1), EndpointKind::Closed, q(1), EndpointKind::Open).has_value());
    CHECK(Interval::point(q(1, 2)).length() == 0);
    CHECK(iv("( 1/3 ,1 ]") == Interval::open_closed(q(1, 3), 1));
    CHECK(iv("[0,2]").str() == "[0/1, 2/1]");
}

TEST_CASE("left intersection") {
    CHECK(left_intersect(iv("[0,2]"), iv("[1,3]")) == iv("[1,2]"));
    CHECK_FALSE(left_intersect(iv("[1,3]"), iv("[0,2]")).has_value());
    for (const char* u : {"[0,1]", "(0,1]", "[0,1)", "(0,1)", "[1/2,1/2]"}) CHECK(left_intersect(iv(u), iv(u)) == iv(u));
    CHECK(left_intersect(iv("[0,1]"), iv("(0,2]")) == iv("(0,1]"));
    CHECK_FALSE(left_intersect(iv("(0,1]"), iv("[0,2]")).has_value());
    CHECK_FALSE(left_intersect(iv("[0,1)"), iv("[1,2]")).has_value());
    CHECK(left_intersect(iv("[0,1]"), iv("[1,2]")) == iv("[1,1]"));
}

TEST_CASE("left intersection agrees with the grid definition") {
    support::Rng rng(17);
    std::uniform_int_distribution<int> coin(0, 1);
    auto random_interval = [&] {
        for (;;) {
            const Rational a = support::random_rational(rng, q(0), q(3), 4), b = support::random_rational(rng, q(0), q(3), 4);
            const auto u = Interval::make(std::min(a, b), coin(rng) ? EndpointKind::Closed : EndpointKind::Open, std::max(a, b),
                                          coin(rng) ? EndpointKind::Closed : EndpointKind::Open);
            if (u) return *u;
        }
    };
    for (int i = 0; i < 2000; ++i) {
        const Interval u = random_interval(), v = random_interval();
        const auto got = left_intersect(u, v), want = grid_left_intersect(u, v);
        INFO(u.str(), " ", v.str(), " got ", got ? got->str() : "-", " want ", want ? want->str() : "-");
        CHECK(got == want);
    }
}

TEST_CASE("translate") {
    CHECK(translate(iv("[0,1/2]"), 1) == iv("[1,3/2]"));
    CHECK(translate(iv("(1/3,1]"), -1) == iv("(-2/3,0]"));
    CHECK(translate(translate(iv("(1/3,5/2)"), 7), -7) == iv("(1/3,5/2)"));
}

TEST_CASE("containment") {
    CHECK(contains(iv("[0,1]"), iv("(0,1)")));
    CHECK_FALSE(contains(iv("(0,1]"), iv("[0,1]")));
    CHECK(contains(iv("[0,1]"), iv("[0,1]")));
    CHECK(contains(Domain::half_line(0), iv("[0,5]")));
    CHECK_FALSE(contains(Domain::unit(), iv("[0,1]")));
}

TEST_CASE("canonical lift") {
    CHECK(canonical_lift(iv("[5/4,7/4]")).interval == iv("[1/4,3/4]"));
    CHECK(canonical_lift(iv("(0,3/2]")).interval == iv("(0,3/2]"));
    CHECK(canonical_lift(iv("[-1/3,0)")).interval == iv("[2/3,1)"));
}

TEST_CASE("interval ordering is total on endpoint data") {
    CHECK(iv("[0,1]") < iv("(0,1]"));
    CHECK(iv("[0,1]") < iv("[0,1)"));
    CHECK(iv("[0,1)") < iv("[0,2]"));
}
