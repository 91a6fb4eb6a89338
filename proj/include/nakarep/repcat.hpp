#pragma once

// Representation calculus over a Kupisch profile: compatibility, Hom
// dimensions, kernels/images/cokernels of scalar morphisms, projective covers
// and resolutions, and the object map M_U -> M_f(U) of a push-forward.

#include "nakarep/interval.hpp"
#include "nakarep/kupisch.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nakarep {

inline constexpr std::size_t kDefaultResolutionCap = 512;

// A finite direct sum of interval (line) or string (circle) modules.
struct ModuleExpr {
    Space space;
    std::vector<Interval> summands;
};

// A nonzero morphism M_source -> M_{target + shift} given by one scalar.
struct ScalarMorphism {
    Interval source;
    Interval target;
    long shift = 0;
    Rational coefficient = 1;
};

struct MorphismAnalysis {
    std::optional<Interval> image;
    std::optional<Interval> kernel;
    std::optional<Interval> cokernel;
};

enum class VerdictKind { Finite, InfinitePeriodic, ExceededCap };

struct Verdict {
    VerdictKind kind;
    // projective dimension, recurrence period, or the cap
    std::size_t value;
    std::string str() const;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct ResolutionReport {
    std::vector<Interval> covers;
    std::vector<Interval> syzygies;
    Verdict verdict;
};

struct ProjectiveCover {
    Interval cover;
    std::optional<Interval> syzygy;
};

struct ComponentLocation {
    std::size_t index;
    // Integer translate of the representative component (periodic profiles).
    long shift = 0;
    friend bool operator==(const ComponentLocation&, const ComponentLocation&) = default;
};

bool is_compatible(const KupischProfile& profile, const Interval& u);
bool is_compatible(const KupischProfile& profile, const ModuleExpr& m);

// [t, K(t)] or (t, K(t)]
Interval projective_at(const KupischProfile& profile, const Rational& t, EndpointKind left_kind);
bool is_projective(const KupischProfile& profile, const Interval& u);

// dim Hom(M_source, M_target)
std::size_t hom_dim(const Space& space, const Interval& source, const Interval& target);
std::size_t hom_dim(const ModuleExpr& source, const ModuleExpr& target);
std::size_t end_dim(const Space& space, const Interval& u);
bool is_brick(const Space& space, const Interval& u);

// Throws InvalidMorphism when no nonzero scalar morphism exists.
MorphismAnalysis morphism_analyze(const ScalarMorphism& m);

// Throws IncompatibleModule.
ProjectiveCover projective_cover(const KupischProfile& profile, const Interval& u);
ResolutionReport projective_resolution(const KupischProfile& profile, const Interval& u,
                                       std::size_t cap = kDefaultResolutionCap);

Interval map_module(const PiecewiseMap& f, const Interval& u);

ComponentLocation component_of(const KupischProfile& profile, const Interval& u);

}  // namespace nakarep
