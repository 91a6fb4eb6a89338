#pragma once

// Shared test support: seeded generators for profiles, homeomorphisms and
// intervals, plus brute-force oracles that never call the code under test.

#include "nakarep/discrete.hpp"
#include "nakarep/interval.hpp"
#include "nakarep/kupisch.hpp"
#include "nakarep/repcat.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace support {

using namespace nakarep;

using Rng = std::mt19937_64;

inline Rational q(long p, long d = 1) { return Rational(p, d); }
inline Interval iv(const char* text);

// Uniform rational in [lo, hi) with denominator max_den.
Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, long max_den = 12);

KupischProfile circle_profile(std::vector<Piece> pieces);
KupischProfile line_profile(Domain d, std::vector<Piece> pieces);
// kappa_n on the circle: K(t) = (k+1)/(2n) + t/2 on [k/n, (k+1)/n).
KupischProfile kappa_n(long n);
// Circle profile with constant kappa.
KupischProfile constant_kappa(const Rational& c);
// Staircase truncated to n = 4..12 with filler K(t) = t + 1/2 below 1/13.
KupischProfile findim();

// Random piecewise-affine circle profile (may have separation points).
KupischProfile random_circle_profile(Rng& rng);
// Circle profile with at least two separation points.
KupischProfile random_split_circle_profile(Rng& rng);
// Random piecewise-affine profile on [0, +inf).
KupischProfile random_half_line_profile(Rng& rng);
// Random piecewise-affine degree-one lift.
PiecewiseMap random_circle_homeo(Rng& rng);
// Random piecewise-affine homeomorphism of [0, +inf).
PiecewiseMap random_half_line_homeo(Rng& rng);
// Random interval passing is_compatible for the profile.
Interval random_compatible_interval(Rng& rng, const KupischProfile& p);

KupischSeries random_series(Rng& rng, std::size_t max_n, std::size_t max_len);
std::vector<DiscreteModule> all_modules(const KupischSeries& s);

// dim Hom(M_source, M_target) of interval modules, by restricting both to a
// finite sample of the line (every endpoint and a point in each gap) and
// solving the commutativity equations on the resulting A_m quiver.
std::size_t brute_hom_line(const Interval& source, const Interval& target);
// Same for string modules, sampling the circle and using the cyclic quiver
// whose representation at a point has one basis vector per lift inside U.
std::size_t brute_hom_circle(const Interval& source, const Interval& target);

// Projective dimension over the Nakayama algebra via Omega(top i, length m) =
// (top i+m, length l_i - m); nullopt when the syzygies cycle.
std::optional<std::size_t> nakayama_pd(const KupischSeries& s, DiscreteModule m);

}  // namespace support

#include "nakarep/io.hpp"

inline nakarep::Interval support::iv(const char* text) { return nakarep::parse_interval(text); }
