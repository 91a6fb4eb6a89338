#include "nakarep/repcat.hpp"

#include "nakarep/errors.hpp"

#include <algorithm>
#include <map>

namespace nakarep {

std::string Verdict::str() const {
    switch (kind) {
        case VerdictKind::Finite: return "Finite(" + std::to_string(value) + ")";
        case VerdictKind::InfinitePeriodic: return "InfinitePeriodic(" + std::to_string(value) + ")";
        case VerdictKind::ExceededCap: return "ExceededCap(" + std::to_string(value) + ")";
    }
    return "?";
}

namespace {

void require_support_in_domain(const KupischProfile& p, const Interval& u) {
    if (!p.space.is_circle() && !contains(p.space.domain(), u))
        throw DomainError(u.str() + " leaves the domain " + p.space.domain().str());
}

bool lo_in_domain(const KupischProfile& p, const Interval& u) {
    return p.space.is_circle() || p.space.domain().contains(u.lo());
}

}  // namespace

bool is_compatible(const KupischProfile& profile, const Interval& u) {
    require_support_in_domain(profile, u);
    // K is non-decreasing, so t = lo(U) is the best witness for U ⊆ [t, K(t)].
    if (!lo_in_domain(profile, u)) return false;
    return contains(Interval::closed(u.lo(), profile.successor.eval(u.lo())), u);
}

bool is_compatible(const KupischProfile& profile, const ModuleExpr& m) {
    return std::all_of(m.summands.begin(), m.summands.end(), [&](const Interval& u) { return is_compatible(profile, u); });
}

Interval projective_at(const KupischProfile& profile, const Rational& t, EndpointKind left_kind) {
    if (!profile.space.is_circle() && !profile.space.domain().contains(t))
        throw DomainError(t.str() + " lies outside " + profile.space.domain().str());
    return Interval(t, left_kind, profile.successor.eval(t), EndpointKind::Closed);
}

bool is_projective(const KupischProfile& profile, const Interval& u) {
    require_support_in_domain(profile, u);
    if (!lo_in_domain(profile, u)) return false;
    return u.hi_kind() == EndpointKind::Closed && u.hi() == profile.successor.eval(u.lo());
}

std::size_t hom_dim(const Space& space, const Interval& source, const Interval& target) {
    if (!space.is_circle()) return left_intersect(target, source) ? 1 : 0;
    // Translates meeting the target satisfy lo(T) - hi(S) <= i <= hi(T) - lo(S).
    const mpz_class base = (target.lo() - source.lo()).floor();
    const mpz_class radius = (source.length() + target.length()).ceil() + 1;
    std::size_t count = 0;
    for (mpz_class i = base - radius; i <= base + radius; ++i)
        if (left_intersect(target, translate(source, i))) ++count;
    return count;
}

std::size_t hom_dim(const ModuleExpr& source, const ModuleExpr& target) {
    if (!(source.space == target.space)) throw DomainError("modules live over different spaces");
    std::size_t total = 0;
    for (const auto& s : source.summands)
        for (const auto& t : target.summands) total += hom_dim(source.space, s, t);
    return total;
}

std::size_t end_dim(const Space& space, const Interval& u) { return hom_dim(space, u, u); }

bool is_brick(const Space& space, const Interval& u) {
    if (!space.is_circle()) return true;
    const bool closed = u.lo_kind() == EndpointKind::Closed && u.hi_kind() == EndpointKind::Closed;
    return closed ? u.length() < 1 : u.length() <= 1;
}

MorphismAnalysis morphism_analyze(const ScalarMorphism& m) {
    if (m.coefficient.is_zero()) throw InvalidMorphism("zero coefficient");
    const Interval target = translate(m.target, m.shift);
    const auto image = left_intersect(target, m.source);
    if (!image)
        throw InvalidMorphism("no nonzero morphism " + m.source.str() + " -> " + target.str());
    MorphismAnalysis out;
    out.image = image;
    out.kernel = Interval::make(image->hi(), flip(image->hi_kind()), m.source.hi(), m.source.hi_kind());
    out.cokernel = Interval::make(target.lo(), target.lo_kind(), image->lo(), flip(image->lo_kind()));
    return out;
}

ProjectiveCover projective_cover(const KupischProfile& profile, const Interval& u) {
    if (!is_compatible(profile, u)) throw IncompatibleModule(u.str() + " is not compatible with the profile");
    Interval cover = projective_at(profile, u.lo(), u.lo_kind());
    // Kernel of the canonical epimorphism cover -> U.
    auto kernel = morphism_analyze({cover, u, 0, 1}).kernel;
    return {std::move(cover), std::move(kernel)};
}

ResolutionReport projective_resolution(const KupischProfile& profile, const Interval& u, std::size_t cap) {
    if (!is_compatible(profile, u)) throw IncompatibleModule(u.str() + " is not compatible with the profile");
    ResolutionReport report{{}, {}, {VerdictKind::ExceededCap, cap}};
    const bool periodic = profile.periodic();
    std::map<Interval, std::size_t> seen;  // canonical lift -> position (0 = the module itself)
    if (periodic) seen.emplace(canonical_lift(u).interval, 0);

    Interval current = u;
    for (std::size_t step = 0; step < cap; ++step) {
        auto [cover, syzygy] = projective_cover(profile, current);
        report.covers.push_back(cover);
        if (!syzygy) {
            report.verdict = {VerdictKind::Finite, step};
            return report;
        }
        report.syzygies.push_back(*syzygy);
        if (periodic) {
            const std::size_t position = report.syzygies.size();
            const auto [it, inserted] = seen.emplace(canonical_lift(*syzygy).interval, position);
            if (!inserted) {
                report.verdict = {VerdictKind::InfinitePeriodic, position - it->second};
                return report;
            }
        }
        current = *syzygy;
    }
    return report;
}

namespace {

Rational image_of_lower(const PiecewiseMap& f, const Interval& u) {
    if (f.is_periodic() || f.domain().contains(u.lo())) return f.eval(u.lo());
    const ExtendedBound lim = f.lower_limit();
    if (ExtendedBound(u.lo()) == f.domain().lo && lim.is_finite()) return lim.value();
    throw DomainError(u.str() + " is not inside the domain " + f.domain().str());
}

Rational image_of_upper(const PiecewiseMap& f, const Interval& u) {
    if (f.is_periodic() || f.domain().contains(u.hi())) return f.eval(u.hi());
    const ExtendedBound lim = f.upper_limit();
    if (ExtendedBound(u.hi()) == f.domain().hi && lim.is_finite()) return lim.value();
    throw DomainError(u.str() + " is not inside the domain " + f.domain().str());
}

}  // namespace

Interval map_module(const PiecewiseMap& f, const Interval& u) {
    if (!f.is_periodic() && !contains(f.domain(), u))
        throw DomainError(u.str() + " is not inside the domain " + f.domain().str());
    return Interval(image_of_lower(f, u), u.lo_kind(), image_of_upper(f, u), u.hi_kind());
}

ComponentLocation component_of(const KupischProfile& profile, const Interval& u) {
    if (!is_compatible(profile, u)) throw IncompatibleModule(u.str() + " is not compatible with the profile");
    const auto comps = components(profile);
    for (const auto& c : comps) {
        long shift = 0;
        if (profile.periodic() && c.left.is_finite()) shift = Rational(u.lo() - c.left.value()).floor().get_si();
        const Rational k(shift);
        const ExtendedBound lo(u.lo());
        const ExtendedBound left = c.left.is_finite() ? ExtendedBound(c.left.value() + k) : c.left;
        const ExtendedBound right = c.right.is_finite() ? ExtendedBound(c.right.value() + k) : c.right;
        const bool after_left = left < lo || (left == lo && (c.left_closed || u.lo_kind() == EndpointKind::Open));
        if (!after_left || !(lo < right)) continue;
        const bool before_right = ExtendedBound(u.hi()) < right;
        if (!before_right) throw DomainError(u.str() + " straddles a separation point");
        return {c.index, shift};
    }
    throw DomainError(u.str() + " lies in no component");
}

}  // namespace nakarep
