#include "nakarep/kupisch.hpp"

#include "nakarep/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nakarep {

std::string Space::str() const { return is_circle() ? "circle" : "line " + domain_.str(); }

std::string Violation::str() const {
    return piece ? "piece " + std::to_string(*piece) + ": " + condition : condition;
}

bool quadratic_positive_on(const Rational& A, const Rational& B, const Rational& C, const ExtendedBound& lo, bool lo_closed,
                           const ExtendedBound& hi, bool hi_closed) {
    const auto q = [&](const Rational& t) { return (A * t + B) * t + C; };
    if (A.is_zero() && B.is_zero()) return C.sign() > 0;

    const auto end_ok = [&](const ExtendedBound& x, bool closed, bool upper) {
        if (x.is_finite()) {
            const int s = q(x.value()).sign();
            return closed ? s > 0 : s >= 0;
        }
        if (A.sign() != 0) return A.sign() > 0;
        return upper ? B.sign() > 0 : B.sign() < 0;
    };

    if (A.sign() > 0) {
        const Rational vertex = -B / (A * 2);
        if (lo < vertex && ExtendedBound(vertex) < hi) return q(vertex).sign() > 0;
    }
    return end_ok(lo, lo_closed, false) && end_ok(hi, hi_closed, true);
}

namespace {

// kappa = K(t) - t > 0 on piece i of the successor map.
bool kappa_positive_on_piece(const PiecewiseMap& k, std::size_t i) {
    const auto& piece = k.pieces()[i];
    const FracLinear& f = piece.formula;
    const ExtendedBound lo = piece.start;
    const ExtendedBound hi = k.piece_end(i);
    const bool lo_closed = i == 0 ? k.domain().lo_closed : true;
    const bool hi_closed = i + 1 == k.pieces().size() ? k.domain().hi_closed : false;
    if (f.is_affine()) return quadratic_positive_on(0, f.a() - 1, f.b(), lo, lo_closed, hi, hi_closed);
    // (a t + b)/(t + d) - t = (-t^2 + (a - d) t + b)/(t + d); the pole lies outside the open piece.
    const int den_sign = ExtendedBound(*f.pole()) <= lo ? 1 : -1;
    const Rational s(den_sign);
    return quadratic_positive_on(-s, (f.a() - f.d()) * s, f.b() * s, lo, lo_closed, hi, hi_closed);
}

void require_in_domain(const KupischProfile& p, const Rational& t) {
    if (!p.space.is_circle() && !p.space.domain().contains(t))
        throw DomainError(t.str() + " lies outside " + p.space.domain().str());
}

}  // namespace

std::vector<Violation> validate_profile(const KupischProfile& profile) {
    std::vector<Violation> out;
    const Space& space = profile.space;
    const PiecewiseMap& k = profile.successor;

    if (space.is_circle()) {
        if (!k.is_periodic()) out.push_back({std::nullopt, "circle successor must be periodic (K(t+1) = K(t) + 1)"});
    } else {
        const Domain& d = space.domain();
        if (d.hi_closed) out.push_back({std::nullopt, "right-closed domain inadmissible: [t, K(t)] leaves " + d.str()});
        if (k.is_periodic()) {
            if (!(d == Domain::real_line())) out.push_back({std::nullopt, "periodic successor requires the whole line"});
        } else if (!(k.domain() == d)) {
            out.push_back({std::nullopt, "successor domain " + k.domain().str() + " differs from " + d.str()});
        }
    }

    for (std::size_t i = 0; i < k.pieces().size(); ++i)
        if (!kappa_positive_on_piece(k, i)) out.push_back({i, "kappa<=0 (K(t) <= t somewhere on the piece)"});

    // K is non-decreasing by construction of PiecewiseMap.

    if (!space.is_circle() && !k.is_periodic() && space.domain().hi.is_finite() && !space.domain().hi_closed) {
        const ExtendedBound sup = k.upper_limit();
        const ExtendedBound& hi = space.domain().hi;
        const bool ok = sup < hi || (sup == hi && !k.pieces().back().formula.is_constant());
        if (!ok)
            out.push_back({k.pieces().size() - 1, "[t, K(t)] leaves the domain: sup K = " + sup.str() + " >= " + hi.str()});
    }
    return out;
}

Rational kappa_at(const KupischProfile& profile, const Rational& t) {
    require_in_domain(profile, t);
    return profile.successor.eval(t) - t;
}

std::vector<Rational> orbit(const KupischProfile& profile, const Rational& t, std::size_t n) {
    require_in_domain(profile, t);
    std::vector<Rational> out{t};
    out.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) out.push_back(profile.successor.eval(out.back()));
    return out;
}

bool SeparationSet::contains(const Rational& c) const {
    const Rational r = periodic ? c.frac() : c;
    return std::binary_search(points.begin(), points.end(), r);
}

SeparationSet separation_points(const KupischProfile& profile) {
    const PiecewiseMap& k = profile.successor;
    SeparationSet out;
    out.periodic = k.is_periodic();
    const auto pieces = k.pieces();
    for (std::size_t i = k.is_periodic() ? 0 : 1; i < pieces.size(); ++i) {
        const Rational& c = pieces[i].start.value();
        if (k.left_limit(c) != c) continue;
        // Condition K(t) < c for t < c fails exactly when K is constantly c just left of c.
        const FracLinear& left = i == 0 ? pieces.back().formula : pieces[i - 1].formula;
        if (left.is_constant()) continue;
        out.points.push_back(c);
    }
    return out;
}

ExtendedBound next_separation(const KupischProfile& profile, const Rational& c) {
    require_in_domain(profile, c);
    const SeparationSet s = separation_points(profile);
    std::optional<Rational> best;
    for (const auto& p : s.points) {
        Rational v = p;
        if (s.periodic) {
            v = p + Rational(c.floor());
            if (v <= c) v += 1;
        }
        if (v > c && (!best || v < *best)) best = v;
    }
    if (best) return *best;
    return profile.periodic() ? ExtendedBound::pos_inf() : profile.space.domain().hi;
}

std::string to_string(ComponentShape s) {
    switch (s) {
        case ComponentShape::HalfLineLike: return "HalfLineLike";
        case ComponentShape::LineLike: return "LineLike";
        case ComponentShape::CircleWhole: return "CircleWhole";
    }
    return "?";
}

std::string ComponentDescriptor::str() const {
    return std::to_string(index) + ": " + (left_closed ? "[" : "(") + left.str() + ", " + right.str() + ") " + to_string(shape);
}

std::vector<ComponentDescriptor> components(const KupischProfile& profile) {
    const SeparationSet s = separation_points(profile);
    const auto& pts = s.points;
    std::vector<ComponentDescriptor> out;

    if (profile.space.is_circle() && pts.size() <= 1) {
        const Rational start = pts.empty() ? Rational(0) : pts.front();
        out.push_back({0, start, true, start + 1, ComponentShape::CircleWhole});
        return out;
    }
    if (s.periodic) {
        if (pts.empty()) {
            out.push_back({0, ExtendedBound::neg_inf(), false, ExtendedBound::pos_inf(), ComponentShape::LineLike});
            return out;
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Rational right = i + 1 < pts.size() ? pts[i + 1] : pts.front() + 1;
            out.push_back({i, pts[i], true, right, ComponentShape::HalfLineLike});
        }
        return out;
    }

    const Domain& d = profile.space.domain();
    const ComponentShape head = d.lo_closed ? ComponentShape::HalfLineLike : ComponentShape::LineLike;
    ExtendedBound left = d.lo;
    bool left_closed = d.lo_closed;
    for (const auto& c : pts) {
        out.push_back({out.size(), left, left_closed, c, out.empty() ? head : ComponentShape::HalfLineLike});
        left = c;
        left_closed = true;
    }
    out.push_back({out.size(), left, left_closed, d.hi, out.empty() ? head : ComponentShape::HalfLineLike});
    return out;
}

KupischProfile push_forward(const KupischProfile& profile, const PiecewiseMap& f) {
    const PiecewiseMap& k = profile.successor;
    Space target = profile.space;
    if (profile.space.is_circle()) {
        if (!f.is_periodic()) throw DegreeError("circle push-forward needs a periodic degree-1 lift");
    } else if (k.is_periodic()) {
        if (!f.is_periodic()) throw DomainError("a periodic successor can only be pushed along a periodic lift");
    } else {
        if (f.is_periodic() || !(f.domain() == profile.space.domain()))
            throw DomainError("homeomorphism domain " + f.domain().str() + " differs from " + profile.space.domain().str());
    }
    const PiecewiseMap inverse = invert(f);
    if (!profile.space.is_circle() && !k.is_periodic()) target = Space::line(inverse.domain());
    KupischProfile out{target, compose(f, compose(k, inverse))};
    const auto violations = validate_profile(out);
    if (!violations.empty()) throw DomainError("push-forward is not a Kupisch profile: " + violations.front().str());
    return out;
}

bool verify_conjugacy(const PiecewiseMap& f, const KupischProfile& source, const KupischProfile& target) {
    const KupischProfile pushed = push_forward(source, f);
    return pushed.space == target.space && equals(pushed.successor, target.successor);
}

std::pair<KupischProfile, PiecewiseMap> normalize_profile(const KupischProfile& profile) {
    if (profile.space.is_circle()) throw DomainError("normalization applies to line profiles only");
    const Domain& d = profile.space.domain();
    if (d.hi_closed) throw DomainError("right-closed domain " + d.str() + " carries no Kupisch profile");

    const auto finish = [&](PiecewiseMap f) {
        KupischProfile pushed = push_forward(profile, f);
        return std::pair{std::move(pushed), std::move(f)};
    };
    if (profile.periodic() || d == Domain::real_line()) return finish(PiecewiseMap::identity(d));

    if (d.lo_closed) {
        const Rational& a = d.lo.value();
        if (!d.hi.is_finite()) return finish(PiecewiseMap::single(d, FracLinear::shift(-a)));
        // [a, b) -> [0, inf): t -> (t - a)/(b - t)
        const Rational& b = d.hi.value();
        return finish(PiecewiseMap::single(d, FracLinear(1, -a, -1, b)));
    }

    // Open lower end: two increasing fractional-linear pieces meeting at m, onto the whole line.
    Rational m;
    std::optional<FracLinear> left, right;
    if (d.lo.is_finite() && d.hi.is_finite()) {
        const Rational &a = d.lo.value(), &b = d.hi.value();
        m = (a + b) / 2;
        left = FracLinear(1, -m, 1, -a);
        right = FracLinear(1, -m, -1, b);
    } else if (d.lo.is_finite()) {
        const Rational& a = d.lo.value();
        m = a + 1;
        left = FracLinear(1, -m, 1, -a);
        right = FracLinear::shift(-m);
    } else {
        const Rational& b = d.hi.value();
        m = b - 1;
        left = FracLinear::shift(-m);
        right = FracLinear(1, -m, -1, b);
    }
    return finish(PiecewiseMap(d, {Piece{d.lo, *left}, Piece{m, *right}}));
}

}  // namespace nakarep
