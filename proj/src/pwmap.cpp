#include "nakarep/pwmap.hpp"

#include "nakarep/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nakarep {

Domain::Domain(ExtendedBound lo_, bool lo_closed_, ExtendedBound hi_, bool hi_closed_)
    : lo(std::move(lo_)), lo_closed(lo_closed_), hi(std::move(hi_)), hi_closed(hi_closed_) {
    if (!lo.is_finite()) lo_closed = false;
    if (!hi.is_finite()) hi_closed = false;
    if (lo.is_pos_inf() || hi.is_neg_inf() || !(lo < hi))
        throw DomainError("empty or degenerate domain " + str());
}

bool Domain::contains(const Rational& t) const {
    const ExtendedBound x(t);
    const bool above = lo_closed ? lo <= x : lo < x;
    const bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
}

std::string Domain::str() const {
    return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() + (hi_closed ? "]" : ")");
}

FracLinear::FracLinear(Rational a, Rational b, Rational c, Rational d) {
    if (c.is_zero() && d.is_zero()) throw InvalidMap("degenerate fractional-linear map (c = d = 0)");
    const Rational det = a * d - b * c;
    if (det.sign() < 0) throw InvalidMap("decreasing fractional-linear map (negative determinant)");
    if (det.is_zero()) {
        const Rational v = c.is_zero() ? b / d : a / c;
        a_ = 0, b_ = v, c_ = 0, d_ = 1;
    } else if (c.is_zero()) {
        a_ = a / d, b_ = b / d, c_ = 0, d_ = 1;
    } else {
        a_ = a / c, b_ = b / c, c_ = 1, d_ = d / c;
    }
}

std::optional<Rational> FracLinear::pole() const {
    if (c_.is_zero()) return std::nullopt;
    return -d_;
}

Rational FracLinear::operator()(const Rational& t) const {
    const Rational den = c_ * t + d_;
    if (den.is_zero()) throw DomainError("evaluation at the pole " + t.str() + " of " + str());
    return (a_ * t + b_) / den;
}

ExtendedBound FracLinear::limit_pos_inf() const {
    if (!c_.is_zero()) return a_;
    if (a_.is_zero()) return b_;
    return ExtendedBound::pos_inf();
}

ExtendedBound FracLinear::limit_neg_inf() const {
    if (!c_.is_zero()) return a_;
    if (a_.is_zero()) return b_;
    return ExtendedBound::neg_inf();
}

FracLinear FracLinear::after(const FracLinear& in) const {
    return {a_ * in.a_ + b_ * in.c_, a_ * in.b_ + b_ * in.d_, c_ * in.a_ + d_ * in.c_, c_ * in.b_ + d_ * in.d_};
}

FracLinear FracLinear::inverse() const {
    if (is_constant()) throw NotBijective("constant formula " + str() + " has no inverse");
    return {d_, -b_, -c_, a_};
}

FracLinear FracLinear::conjugated_by_shift(const Rational& s) const {
    return shift(s).after(*this).after(shift(-s));
}

std::string FracLinear::str() const {
    std::ostringstream os;
    if (is_affine())
        os << a_ << "*t + " << b_;
    else
        os << "(" << a_ << "*t + " << b_ << ")/(t + " << d_ << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

PiecewiseMap::PiecewiseMap(Domain domain, std::vector<Piece> pieces)
    : PiecewiseMap(std::move(domain), std::move(pieces), false) {}

PiecewiseMap::PiecewiseMap(Domain domain, std::vector<Piece> pieces, bool periodic)
    : domain_(std::move(domain)), pieces_(std::move(pieces)), periodic_(periodic) {
    validate_and_canonicalize();
}

ExtendedBound limit_at(const FracLinear& f, const ExtendedBound& x, bool from_left) {
    if (x.is_pos_inf()) return f.limit_pos_inf();
    if (x.is_neg_inf()) return f.limit_neg_inf();
    if (f.pole() == x.value()) return from_left ? ExtendedBound::pos_inf() : ExtendedBound::neg_inf();
    return f(x.value());
}

PiecewiseMap PiecewiseMap::periodic(std::vector<Piece> pieces) {
    return PiecewiseMap(Domain::unit(), std::move(pieces), true);
}

PiecewiseMap PiecewiseMap::single(Domain domain, FracLinear formula) {
    ExtendedBound start = domain.lo;
    return PiecewiseMap(std::move(domain), {Piece{std::move(start), std::move(formula)}});
}

void PiecewiseMap::validate_and_canonicalize() {
    if (pieces_.empty()) throw InvalidMap("piecewise map without pieces");
    if (periodic_ && !(domain_ == Domain::unit())) throw InvalidMap("periodic maps must be given on [0, 1)");
    if (!(pieces_.front().start == domain_.lo))
        throw InvalidMap("first piece starts at " + pieces_.front().start.str() + ", domain starts at " + domain_.lo.str());
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        const auto& s = pieces_[i].start;
        if (!s.is_finite()) throw InvalidMap("interior breakpoint must be finite");
        if (!(pieces_[i - 1].start < s)) throw InvalidMap("piece starts are not strictly increasing at " + s.str());
    }
    if (!(pieces_.back().start < domain_.hi)) throw InvalidMap("last piece starts outside the domain");

    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto pole = pieces_[i].formula.pole();
        if (!pole) continue;
        const ExtendedBound p(*pole);
        // A pole at an open end of a non-periodic domain sends that end to infinity.
        const bool at_open_end = !periodic_ && ((i + 1 == pieces_.size() && p == domain_.hi && !domain_.hi_closed) ||
                                                (i == 0 && p == domain_.lo && !domain_.lo_closed));
        if (!at_open_end && pieces_[i].start <= p && p <= piece_end(i))
            throw InvalidMap("pole " + pole->str() + " lies in the closure of piece " + std::to_string(i));
    }

    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        const Rational& u = pieces_[i].start.value();
        if (pieces_[i - 1].formula(u) > pieces_[i].formula(u))
            throw InvalidMap("map decreases across the breakpoint " + u.str());
    }
    if (periodic_ && pieces_.back().formula(Rational(1)) > pieces_.front().formula(Rational(0)) + 1)
        throw InvalidMap("periodic map decreases across the breakpoint 0");

    std::vector<Piece> merged;
    merged.reserve(pieces_.size());
    for (auto& p : pieces_) {
        if (!merged.empty() && merged.back().formula == p.formula) continue;
        merged.push_back(std::move(p));
    }
    pieces_ = std::move(merged);
}

ExtendedBound PiecewiseMap::piece_end(std::size_t i) const {
    return i + 1 < pieces_.size() ? pieces_[i + 1].start : domain_.hi;
}

std::size_t PiecewiseMap::piece_index(const Rational& t) const {
    const ExtendedBound x(t);
    const auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                                     [](const ExtendedBound& v, const Piece& p) { return v < p.start; });
    return it == pieces_.begin() ? 0 : static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

std::vector<Rational> PiecewiseMap::breakpoints() const {
    std::vector<Rational> out;
    for (std::size_t i = periodic_ ? 0 : 1; i < pieces_.size(); ++i) out.push_back(pieces_[i].start.value());
    return out;
}

Rational PiecewiseMap::eval(const Rational& t) const {
    if (periodic_) {
        const Rational k(t.floor());
        const Rational r = t - k;
        return pieces_[piece_index(r)].formula(r) + k;
    }
    if (!domain_.contains(t)) throw DomainError(t.str() + " lies outside the domain " + domain_.str());
    return pieces_[piece_index(t)].formula(t);
}

Rational PiecewiseMap::left_limit(const Rational& t) const {
    if (periodic_) {
        const Rational k(t.floor());
        const Rational r = t - k;
        if (r.is_zero()) return pieces_.back().formula(Rational(1)) + k - 1;
        std::size_t i = piece_index(r);
        if (pieces_[i].start == ExtendedBound(r)) --i;
        return pieces_[i].formula(r) + k;
    }
    const ExtendedBound x(t);
    if (!(domain_.lo < x) || domain_.hi < x)
        throw DomainError("no left limit at " + t.str() + " for domain " + domain_.str());
    std::size_t i = piece_index(t);
    if (i > 0 && pieces_[i].start == x) --i;
    return pieces_[i].formula(t);
}

ExtendedBound PiecewiseMap::lower_limit() const {
    if (periodic_) return ExtendedBound::neg_inf();
    return limit_at(pieces_.front().formula, domain_.lo, false);
}

ExtendedBound PiecewiseMap::upper_limit() const {
    if (periodic_) return ExtendedBound::pos_inf();
    return limit_at(pieces_.back().formula, domain_.hi, true);
}

PiecewiseMap PiecewiseMap::restrict_to(const Domain& sub) const {
    std::vector<Piece> all;
    if (periodic_) {
        if (!sub.is_bounded()) throw DomainError("periodic maps restrict only to bounded domains");
        const mpz_class first = sub.lo.value().floor();
        const mpz_class last = sub.hi.value().floor();
        for (mpz_class k = first; k <= last; ++k)
            for (const auto& p : pieces_)
                all.push_back({Rational(p.start.value() + Rational(k)), p.formula.conjugated_by_shift(Rational(k))});
    } else {
        const bool lo_ok = domain_.lo < sub.lo || (domain_.lo == sub.lo && (domain_.lo_closed || !sub.lo_closed));
        const bool hi_ok = sub.hi < domain_.hi || (domain_.hi == sub.hi && (domain_.hi_closed || !sub.hi_closed));
        if (!lo_ok || !hi_ok) throw DomainError(sub.str() + " is not contained in " + domain_.str());
        all = pieces_;
    }
    std::vector<Piece> out;
    std::size_t head = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i].start <= sub.lo) head = i;
    out.push_back({sub.lo, all[head].formula});
    for (std::size_t i = head + 1; i < all.size(); ++i)
        if (sub.lo < all[i].start && all[i].start < sub.hi) out.push_back(all[i]);
    return PiecewiseMap(sub, std::move(out));
}

std::string PiecewiseMap::str() const {
    std::ostringstream os;
    os << (periodic_ ? "periodic " : "") << "map on " << domain_.str() << ":";
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        os << " [" << pieces_[i].start << ", " << piece_end(i) << ") -> " << pieces_[i].formula.str() << ";";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Formula of f governing values at and immediately right of y.
FracLinear formula_right_of(const PiecewiseMap& f, const ExtendedBound& y) {
    if (f.is_periodic()) {
        const Rational& v = y.value();
        const Rational k(v.floor());
        return f.pieces()[f.piece_index(v - k)].formula.conjugated_by_shift(k);
    }
    if (!y.is_finite()) return f.pieces().front().formula;
    return f.pieces()[f.piece_index(y.value())].formula;
}

// Breakpoints of f strictly inside (ylo, yhi), ascending.
std::vector<Rational> breakpoints_between(const PiecewiseMap& f, const ExtendedBound& ylo, const ExtendedBound& yhi) {
    std::vector<Rational> out;
    if (f.is_periodic()) {
        const auto base = f.breakpoints();
        for (mpz_class k = ylo.value().floor(); k <= yhi.value().floor(); ++k)
            for (const auto& b : base) {
                const Rational v = b + Rational(k);
                if (ylo < v && ExtendedBound(v) < yhi) out.push_back(v);
            }
    } else {
        for (const auto& b : f.breakpoints())
            if (ylo < b && ExtendedBound(b) < yhi) out.push_back(b);
    }
    return out;
}

// Whether the map attains its lower (upper) limit: closed end, or constant end piece.
bool attains_lower(const PiecewiseMap& g) {
    return g.domain().lo_closed || g.pieces().front().formula.is_constant();
}
bool attains_upper(const PiecewiseMap& g) {
    return g.domain().hi_closed || g.pieces().back().formula.is_constant();
}

void require_range_within(const PiecewiseMap& g, const Domain& target) {
    const ExtendedBound inf = g.lower_limit();
    const ExtendedBound sup = g.upper_limit();
    bool ok_lo = target.lo < inf || (target.lo == inf && (target.lo_closed || !attains_lower(g)));
    bool ok_hi = sup < target.hi || (sup == target.hi && (target.hi_closed || !attains_upper(g)));
    if (!target.lo.is_finite()) ok_lo = true;
    if (!target.hi.is_finite()) ok_hi = true;
    if (!ok_lo || !ok_hi)
        throw DomainError("range [" + inf.str() + ", " + sup.str() + "] is not contained in " + target.str());
}

}  // namespace

PiecewiseMap compose(const PiecewiseMap& f, const PiecewiseMap& g) {
    if (f.is_periodic() != g.is_periodic()) throw DomainError("cannot compose periodic and non-periodic maps");
    if (!g.is_periodic()) require_range_within(g, f.domain());

    std::vector<Piece> out;
    const auto pieces = g.pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const FracLinear& inner = pieces[i].formula;
        const ExtendedBound& s = pieces[i].start;
        if (inner.is_constant()) {
            out.push_back({s, formula_right_of(f, inner.b()).after(inner)});
            continue;
        }
        const ExtendedBound e = g.piece_end(i);
        const ExtendedBound ylo = limit_at(inner, s, false);
        const ExtendedBound yhi = limit_at(inner, e, true);
        const FracLinear back = inner.inverse();
        ExtendedBound cur_start = s;
        ExtendedBound cur_y = ylo;
        for (const auto& b : breakpoints_between(f, ylo, yhi)) {
            out.push_back({cur_start, formula_right_of(f, cur_y).after(inner)});
            cur_start = back(b);
            cur_y = b;
        }
        out.push_back({cur_start, formula_right_of(f, cur_y).after(inner)});
    }
    if (g.is_periodic()) return PiecewiseMap::periodic(std::move(out));
    return PiecewiseMap(g.domain(), std::move(out));
}

namespace {

void require_strict_continuous(const PiecewiseMap& f) {
    const auto pieces = f.pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (pieces[i].formula.is_constant())
            throw NotBijective("piece " + std::to_string(i) + " is constant");
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        const Rational& u = pieces[i].start.value();
        if (pieces[i - 1].formula(u) != pieces[i].formula(u)) throw NotBijective("jump at " + u.str() + " leaves a gap in the range");
    }
    if (f.is_periodic() && pieces.back().formula(Rational(1)) != pieces.front().formula(Rational(0)) + 1)
        throw NotBijective("lift is discontinuous across 0");
}

}  // namespace

Domain image_domain(const PiecewiseMap& f) {
    if (f.is_periodic()) return Domain::real_line();
    const ExtendedBound lo = f.lower_limit();
    const ExtendedBound hi = f.upper_limit();
    return Domain(lo, f.domain().lo_closed && lo.is_finite(), hi, f.domain().hi_closed && hi.is_finite());
}

PiecewiseMap invert(const PiecewiseMap& f) {
    require_strict_continuous(f);
    const auto pieces = f.pieces();
    if (!f.is_periodic()) {
        Domain range = image_domain(f);
        std::vector<Piece> out;
        out.push_back({range.lo, pieces.front().formula.inverse()});
        for (std::size_t i = 1; i < pieces.size(); ++i)
            out.push_back({pieces[i].formula(pieces[i].start.value()), pieces[i].formula.inverse()});
        return PiecewiseMap(std::move(range), std::move(out));
    }

    // Inverse pieces over [F(0), F(0)+1), folded back into [0, 1).
    std::vector<Rational> ys;
    for (const auto& p : pieces) ys.push_back(p.formula(p.start.value()));
    ys.push_back(ys.front() + 1);
    std::vector<Piece> out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const FracLinear inv = pieces[i].formula.inverse();
        Rational u = ys[i];
        while (u < ys[i + 1]) {
            const Rational k(u.floor());
            const Rational w = std::min(ys[i + 1], k + 1);
            out.push_back({u - k, inv.conjugated_by_shift(-k)});
            u = w;
        }
    }
    std::sort(out.begin(), out.end(), [](const Piece& a, const Piece& b) { return a.start < b.start; });
    return PiecewiseMap::periodic(std::move(out));
}

bool equals(const PiecewiseMap& f, const PiecewiseMap& g) {
    if (f.is_periodic() != g.is_periodic() || !(f.domain() == g.domain())) return false;
    const auto a = f.pieces();
    const auto b = g.pieces();
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace nakarep
