#pragma once

// Text formats: interval literals, profile and homeomorphism files, Kupisch
// series and module literals.
//
//   space circle                 | space line [0/1, +inf)  [periodic]
//   piece [0/1, 1/3) affine 1/1 1/1        K(t) = m t + q
//   piece [1/3, 1/1) mobius 1 1 0 1        K(t) = (a t + b)/(c t + d)
//
//   homeo [0, +inf) -> [0, 1/2)  | homeo circle
//   piece ...

#include "nakarep/discrete.hpp"
#include "nakarep/errors.hpp"
#include "nakarep/interval.hpp"
#include "nakarep/kupisch.hpp"

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace nakarep {

struct ParseError : Error {
    ParseError(const std::string& what, std::string source = {}, std::size_t line = 0);
    std::string source;
    std::size_t line;
};

Interval parse_interval(std::string_view text);
Domain parse_domain(std::string_view text);
// "line" or "circle"
Space parse_space(std::string_view text);
KupischSeries parse_series(std::string_view text);
DiscreteModule parse_module(std::string_view text);

// `source` names the input in error messages.
KupischProfile read_profile(std::istream& in, const std::string& source = "<input>");
KupischProfile read_profile_file(const std::string& path);
PiecewiseMap read_homeo(std::istream& in, const std::string& source = "<input>");
PiecewiseMap read_homeo_file(const std::string& path);

std::string write_profile(const KupischProfile& profile);
std::string write_homeo(const PiecewiseMap& f);
std::string write_formula(const FracLinear& f);

// CSV rows t,K(t),kappa(t) at equally spaced sample points (one period when
// periodic; `span` wide for unbounded line domains).
// The exact sample points behind export_plot.
std::vector<Rational> plot_samples(const KupischProfile& profile, std::size_t samples, const Rational& span = 1);
std::string export_plot(const KupischProfile& profile, std::size_t samples, int digits, const Rational& span = 1);

}  // namespace nakarep
