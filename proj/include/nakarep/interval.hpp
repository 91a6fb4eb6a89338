#pragma once

// Bounded intervals with open/closed endpoints: the supports of interval
// modules on the line and (through lifts) of string modules on the circle.

#include "nakarep/pwmap.hpp"
#include "nakarep/rational.hpp"

#include <compare>
#include <optional>
#include <string>

namespace nakarep {

enum class EndpointKind { Closed, Open };

inline EndpointKind flip(EndpointKind k) { return k == EndpointKind::Closed ? EndpointKind::Open : EndpointKind::Closed; }

class Interval {
public:
    // Throws DomainError for empty intervals.
    Interval(Rational lo, EndpointKind lo_kind, Rational hi, EndpointKind hi_kind);
    // Absent when the bounds describe the empty set.
    static std::optional<Interval> make(Rational lo, EndpointKind lo_kind, Rational hi, EndpointKind hi_kind);

    static Interval closed(Rational lo, Rational hi) { return {std::move(lo), EndpointKind::Closed, std::move(hi), EndpointKind::Closed}; }
    static Interval open(Rational lo, Rational hi) { return {std::move(lo), EndpointKind::Open, std::move(hi), EndpointKind::Open}; }
    // (lo, hi]
    static Interval open_closed(Rational lo, Rational hi) { return {std::move(lo), EndpointKind::Open, std::move(hi), EndpointKind::Closed}; }
    // [lo, hi)
    static Interval closed_open(Rational lo, Rational hi) { return {std::move(lo), EndpointKind::Closed, std::move(hi), EndpointKind::Open}; }
    static Interval point(const Rational& x) { return closed(x, x); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    EndpointKind lo_kind() const { return lo_kind_; }
    EndpointKind hi_kind() const { return hi_kind_; }
    Rational length() const { return hi_ - lo_; }

    bool contains(const Rational& x) const;

    // "[1/1, 2/1]"
    std::string str() const;

    friend bool operator==(const Interval&, const Interval&) = default;
    // Order by (lo, lo_kind, hi, hi_kind) with Closed before Open.
    friend std::strong_ordering operator<=>(const Interval& a, const Interval& b);

private:
    Rational lo_;
    EndpointKind lo_kind_;
    Rational hi_;
    EndpointKind hi_kind_;
};

// Integer translate of a circle string's support with 0 <= lo < 1.
struct StringLift {
    Interval interval;
    friend bool operator==(const StringLift&, const StringLift&) = default;
};

// U ∩_L V: the intersection, when V overhangs U only to the right and U
// overhangs V only to the left; absent otherwise. Detects Hom(M_V, M_U) != 0.
std::optional<Interval> left_intersect(const Interval& u, const Interval& v);

Interval translate(const Interval& u, const mpz_class& shift);
inline Interval translate(const Interval& u, long shift) { return translate(u, mpz_class(shift)); }

// Every point of v lies in u.
bool contains(const Interval& u, const Interval& v);
// Every point of u lies in the domain.
bool contains(const Domain& d, const Interval& u);

StringLift canonical_lift(const Interval& u);

}  // namespace nakarep
