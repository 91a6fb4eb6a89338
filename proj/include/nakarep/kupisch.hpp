#pragma once

// Kupisch profiles: a space (a line interval or the circle) together with the
// successor map K(t) = kappa(t) + t. Validation, orbits, separation points,
// orthogonal components, push-forwards and conjugacy checks.

#include "nakarep/pwmap.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nakarep {

class Space {
public:
    enum class Kind { Line, Circle };

    static Space line(Domain d) { return Space(Kind::Line, std::move(d)); }
    static Space circle() { return Space(Kind::Circle, Domain::unit()); }

    Kind kind() const { return kind_; }
    bool is_circle() const { return kind_ == Kind::Circle; }
    // Line: the domain; Circle: the fundamental domain [0, 1).
    const Domain& domain() const { return domain_; }
    std::string str() const;

    friend bool operator==(const Space&, const Space&) = default;

private:
    Space(Kind k, Domain d) : kind_(k), domain_(std::move(d)) {}
    Kind kind_;
    Domain domain_;
};

struct KupischProfile {
    Space space;
    // Periodic on the circle; may also be periodic on the whole line.
    PiecewiseMap successor;

    // Whether successor values repeat with period 1 (circle, or periodic line).
    bool periodic() const { return successor.is_periodic(); }
};

struct Violation {
    std::optional<std::size_t> piece;
    std::string condition;
    std::string str() const;
};

std::vector<Violation> validate_profile(const KupischProfile& profile);

// kappa(t) = K(t) - t. Throws DomainError outside the domain.
Rational kappa_at(const KupischProfile& profile, const Rational& t);

// [t, K(t), ..., K^n(t)]
std::vector<Rational> orbit(const KupischProfile& profile, const Rational& t, std::size_t n);

struct SeparationSet {
    std::vector<Rational> points;
    // Points are representatives in [0,1) of a 1-periodic set.
    bool periodic = false;
    bool contains(const Rational& c) const;
};

SeparationSet separation_points(const KupischProfile& profile);

// min{s in S : s > c}, or the domain's supremum (+inf) when there is none.
ExtendedBound next_separation(const KupischProfile& profile, const Rational& c);

enum class ComponentShape { HalfLineLike, LineLike, CircleWhole };

std::string to_string(ComponentShape s);

struct ComponentDescriptor {
    std::size_t index;
    ExtendedBound left;
    bool left_closed;
    ExtendedBound right;
    ComponentShape shape;
    std::string str() const;
};

// Components of one period when the profile is periodic.
std::vector<ComponentDescriptor> components(const KupischProfile& profile);

// Successor conjugated by f: K' = f o K o f^{-1}. Line profiles need f defined
// on the profile's domain; circle profiles need a periodic degree-1 lift.
KupischProfile push_forward(const KupischProfile& profile, const PiecewiseMap& f);

bool verify_conjugacy(const PiecewiseMap& f, const KupischProfile& source, const KupischProfile& target);

// Equivalent profile on [0, inf) (left-closed domains) or on the whole line
// (open domains), with the fractional-linear homeomorphism used.
std::pair<KupischProfile, PiecewiseMap> normalize_profile(const KupischProfile& profile);

// Strict positivity of (A t^2 + B t + C) on an interval with the given ends.
// Exposed for testing.
bool quadratic_positive_on(const Rational& A, const Rational& B, const Rational& C, const ExtendedBound& lo, bool lo_closed,
                           const ExtendedBound& hi, bool hi_closed);

}  // namespace nakarep
