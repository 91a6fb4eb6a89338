#include "nakarep/interval.hpp"

#include "nakarep/errors.hpp"

namespace nakarep {

namespace {

bool nonempty(const Rational& lo, EndpointKind lk, const Rational& hi, EndpointKind hk) {
    return lo < hi || (lo == hi && lk == EndpointKind::Closed && hk == EndpointKind::Closed);
}

std::strong_ordering kind_order(EndpointKind a, EndpointKind b) { return static_cast<int>(a) <=> static_cast<int>(b); }

}  // namespace

Interval::Interval(Rational lo, EndpointKind lo_kind, Rational hi, EndpointKind hi_kind)
    : lo_(std::move(lo)), lo_kind_(lo_kind), hi_(std::move(hi)), hi_kind_(hi_kind) {
    if (!nonempty(lo_, lo_kind_, hi_, hi_kind_)) throw DomainError("empty interval " + str());
}

std::optional<Interval> Interval::make(Rational lo, EndpointKind lo_kind, Rational hi, EndpointKind hi_kind) {
    if (!nonempty(lo, lo_kind, hi, hi_kind)) return std::nullopt;
    return Interval(std::move(lo), lo_kind, std::move(hi), hi_kind);
}

bool Interval::contains(const Rational& x) const {
    const bool above = lo_kind_ == EndpointKind::Closed ? lo_ <= x : lo_ < x;
    const bool below = hi_kind_ == EndpointKind::Closed ? x <= hi_ : x < hi_;
    return above && below;
}

std::string Interval::str() const {
    return std::string(lo_kind_ == EndpointKind::Closed ? "[" : "(") + lo_.str() + ", " + hi_.str() +
           (hi_kind_ == EndpointKind::Closed ? "]" : ")");
}

std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
    if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
    if (auto c = kind_order(a.lo_kind_, b.lo_kind_); c != 0) return c;
    if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
    return kind_order(a.hi_kind_, b.hi_kind_);
}

namespace {

// The lower end of v lies inside the ray {x : x >= lo(u)} (kinds respected).
bool lower_within(const Interval& u, const Interval& v) {
    if (u.lo() != v.lo()) return u.lo() < v.lo();
    return u.lo_kind() == EndpointKind::Closed || v.lo_kind() == EndpointKind::Open;
}

// The upper end of u lies inside the ray {x : x <= hi(v)}.
bool upper_within(const Interval& u, const Interval& v) {
    if (u.hi() != v.hi()) return u.hi() < v.hi();
    return v.hi_kind() == EndpointKind::Closed || u.hi_kind() == EndpointKind::Open;
}

EndpointKind meet(EndpointKind a, EndpointKind b) {
    return a == EndpointKind::Open || b == EndpointKind::Open ? EndpointKind::Open : EndpointKind::Closed;
}

}  // namespace

std::optional<Interval> left_intersect(const Interval& u, const Interval& v) {
    // Points of V \ U all exceed U  <=>  V sits in U's upward ray.
    // Points of U \ V all precede V <=>  U sits in V's downward ray.
    if (!lower_within(u, v) || !upper_within(u, v)) return std::nullopt;
    const EndpointKind lk = u.lo() == v.lo() ? meet(u.lo_kind(), v.lo_kind()) : v.lo_kind();
    const EndpointKind hk = u.hi() == v.hi() ? meet(u.hi_kind(), v.hi_kind()) : u.hi_kind();
    return Interval::make(v.lo(), lk, u.hi(), hk);
}

Interval translate(const Interval& u, const mpz_class& shift) {
    const Rational s(shift);
    return Interval(u.lo() + s, u.lo_kind(), u.hi() + s, u.hi_kind());
}

bool contains(const Interval& u, const Interval& v) {
    return lower_within(u, v) && upper_within(v, u);
}

bool contains(const Domain& d, const Interval& u) {
    const ExtendedBound lo(u.lo()), hi(u.hi());
    const bool lo_ok = d.lo < lo || (d.lo == lo && (d.lo_closed || u.lo_kind() == EndpointKind::Open));
    const bool hi_ok = hi < d.hi || (hi == d.hi && (d.hi_closed || u.hi_kind() == EndpointKind::Open));
    return lo_ok && hi_ok;
}

StringLift canonical_lift(const Interval& u) { return {translate(u, -u.lo().floor())}; }

}  // namespace nakarep
