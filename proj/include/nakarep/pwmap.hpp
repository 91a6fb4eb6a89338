#pragma once

// Increasing piecewise fractional-linear maps with rational data.
//
// A PiecewiseMap is a list of pieces [start_i, start_{i+1}) each carrying a
// formula t -> (a t + b)/(c t + d). Periodic maps live on [0,1) and extend by
// F(t+1) = F(t) + 1; they represent degree-1 lifts of circle maps and the
// successor maps of Kupisch functions.

#include "nakarep/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nakarep {

// Interval over the extended line; infinite ends are always open.
struct Domain {
    ExtendedBound lo;
    bool lo_closed;
    ExtendedBound hi;
    bool hi_closed;

    Domain(ExtendedBound lo, bool lo_closed, ExtendedBound hi, bool hi_closed);

    static Domain real_line() { return {ExtendedBound::neg_inf(), false, ExtendedBound::pos_inf(), false}; }
    static Domain half_line(const Rational& a) { return {a, true, ExtendedBound::pos_inf(), false}; }
    static Domain unit() { return {Rational(0), true, Rational(1), false}; }
    // [a, b)
    static Domain half_open(const Rational& a, const Rational& b) { return {a, true, b, false}; }

    bool contains(const Rational& t) const;
    bool is_bounded() const { return lo.is_finite() && hi.is_finite(); }
    std::string str() const;

    friend bool operator==(const Domain&, const Domain&) = default;
};

// t -> (a t + b) / (c t + d), normalized so that c = 0, d = 1 (affine) or c = 1.
// Constant maps (determinant zero) normalize to (0, v, 0, 1).
class FracLinear {
public:
    // Throws InvalidMap when the map is decreasing or degenerate.
    FracLinear(Rational a, Rational b, Rational c, Rational d);

    static FracLinear affine(const Rational& slope, const Rational& intercept) { return {slope, intercept, 0, 1}; }
    static FracLinear constant(const Rational& v) { return {0, v, 0, 1}; }
    static FracLinear identity() { return {1, 0, 0, 1}; }
    static FracLinear shift(const Rational& s) { return {1, s, 0, 1}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    Rational determinant() const { return a_ * d_ - b_ * c_; }
    bool is_affine() const { return c_.is_zero(); }
    bool is_constant() const { return determinant().is_zero(); }
    std::optional<Rational> pole() const;

    // Throws DomainError at the pole.
    Rational operator()(const Rational& t) const;
    // Limits at the infinities (finite a/c for proper Moebius maps).
    ExtendedBound limit_pos_inf() const;
    ExtendedBound limit_neg_inf() const;

    // (*this) o inner
    FracLinear after(const FracLinear& inner) const;
    // Throws NotBijective for constant maps.
    FracLinear inverse() const;
    // t -> f(t - s) + s, i.e. the formula transported by the shift t -> t + s.
    FracLinear conjugated_by_shift(const Rational& s) const;

    std::string str() const;

    friend bool operator==(const FracLinear&, const FracLinear&) = default;

private:
    Rational a_, b_, c_, d_;
};

// Limit of an increasing formula as t -> x from the left (or right); infinite at the pole.
ExtendedBound limit_at(const FracLinear& f, const ExtendedBound& x, bool from_left);

struct Piece {
    ExtendedBound start;
    FracLinear formula;

    friend bool operator==(const Piece&, const Piece&) = default;
};

class PiecewiseMap {
public:
    // Validates contiguity, pole placement and monotonicity, then merges
    // adjacent equal formulas. Throws InvalidMap.
    PiecewiseMap(Domain domain, std::vector<Piece> pieces);
    // Pieces on [0,1) with F(t+1) = F(t) + 1.
    static PiecewiseMap periodic(std::vector<Piece> pieces);
    static PiecewiseMap single(Domain domain, FracLinear formula);
    static PiecewiseMap identity(Domain domain) { return single(std::move(domain), FracLinear::identity()); }

    const Domain& domain() const { return domain_; }
    std::span<const Piece> pieces() const { return pieces_; }
    bool is_periodic() const { return periodic_; }

    // End of piece i (start of i+1 or the domain's upper end).
    ExtendedBound piece_end(std::size_t i) const;
    // Index of the piece containing t (t already reduced into [0,1) when periodic).
    std::size_t piece_index(const Rational& t) const;
    // Interior breakpoints (piece starts after the first); periodic maps include 0.
    std::vector<Rational> breakpoints() const;

    Rational eval(const Rational& t) const;
    Rational operator()(const Rational& t) const { return eval(t); }
    Rational left_limit(const Rational& t) const;
    // Limit toward the lower end of the domain (finite, or an infinity).
    ExtendedBound lower_limit() const;
    // Limit toward the upper end of the domain.
    ExtendedBound upper_limit() const;

    // Restriction to a sub-domain (bounded when the map is periodic).
    PiecewiseMap restrict_to(const Domain& sub) const;

    std::string str() const;

private:
    PiecewiseMap(Domain domain, std::vector<Piece> pieces, bool periodic);
    void validate_and_canonicalize();

    Domain domain_;
    std::vector<Piece> pieces_;
    bool periodic_ = false;
};

// f o g. Throws DomainError when g's range leaves f's domain or the periodicity differs.
PiecewiseMap compose(const PiecewiseMap& f, const PiecewiseMap& g);
// Throws NotBijective for constant pieces, jumps, or (periodic) a wrap discontinuity.
PiecewiseMap invert(const PiecewiseMap& f);
// Equality of canonical forms.
bool equals(const PiecewiseMap& f, const PiecewiseMap& g);

// Range of a continuous strictly increasing map, as a Domain.
Domain image_domain(const PiecewiseMap& f);

}  // namespace nakarep
