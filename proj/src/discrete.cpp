#include "nakarep/discrete.hpp"

#include "nakarep/errors.hpp"
#include "nakarep/quiver.hpp"
#include "nakarep/repcat.hpp"

#include <numeric>

namespace nakarep {

std::size_t KupischSeries::total() const { return std::accumulate(lengths.begin(), lengths.end(), std::size_t{0}); }

std::string KupischSeries::str() const {
    std::string out;
    for (std::size_t i = 0; i < lengths.size(); ++i) out += (i ? "," : "") + std::to_string(lengths[i]);
    return out;
}

std::vector<std::string> validate_series(const KupischSeries& series) {
    std::vector<std::string> out;
    const std::size_t n = series.n();
    if (n == 0) {
        out.emplace_back("empty series");
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (series.lengths[i] < 1) out.push_back("l_" + std::to_string(i) + " < 1");
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (series.lengths[j] + 1 < series.lengths[i])
            out.push_back("l_" + std::to_string(j) + " = " + std::to_string(series.lengths[j]) + " < l_" + std::to_string(i) +
                          " - 1 = " + std::to_string(series.lengths[i] - 1));
    }
    return out;
}

namespace {

void require_valid(const KupischSeries& series) {
    const auto v = validate_series(series);
    if (!v.empty()) throw InvalidSeries("invalid Kupisch series (" + series.str() + "): " + v.front());
}

void require_valid(const KupischSeries& series, const DiscreteModule& m) {
    require_valid(series);
    if (m.top >= series.n()) throw InvalidModule("top " + std::to_string(m.top) + " out of range");
    if (m.length < 1 || m.length > series.lengths[m.top])
        throw InvalidModule("length " + std::to_string(m.length) + " does not fit under P_" + std::to_string(m.top));
}

}  // namespace

KupischProfile associated_kupisch(const KupischSeries& series) {
    require_valid(series);
    const long n = static_cast<long>(series.n());
    std::vector<Piece> pieces;
    for (long i = 0; i < n; ++i)
        pieces.push_back({Rational(i, n), FracLinear::constant(Rational(i + static_cast<long>(series.lengths[i]), n))});
    return {Space::circle(), PiecewiseMap::periodic(std::move(pieces))};
}

Interval embed_module(const KupischSeries& series, const DiscreteModule& m) {
    require_valid(series, m);
    const long n = static_cast<long>(series.n());
    const long a = static_cast<long>(m.top);
    return Interval::open_closed(Rational(a, n), Rational(a + static_cast<long>(m.length), n));
}

DiscreteModule extract_module(const KupischSeries& series, const Interval& u) {
    require_valid(series);
    const Rational n(static_cast<long>(series.n()));
    const Interval lift = canonical_lift(u).interval;
    const Rational a = lift.lo() * n;
    const Rational b = lift.hi() * n;
    if (!a.is_integer() || !b.is_integer() || lift.lo_kind() != EndpointKind::Open || lift.hi_kind() != EndpointKind::Closed)
        throw NotGridAligned(u.str() + " is not of the form (a/n, b/n]");
    if (!is_compatible(associated_kupisch(series), lift)) throw IncompatibleModule(u.str() + " is not compatible");
    const std::size_t top = a.num().get_ui();
    const std::size_t length = mpz_class(b.num() - a.num()).get_ui();
    return {top, length};
}

namespace {

// String module over the cyclic quiver with n vertices: basis e_j at vertex (top + j) mod n.
QuiverRep string_rep(std::size_t n, const DiscreteModule& m) {
    QuiverRep rep;
    rep.dims.assign(n, 0);
    std::vector<std::vector<std::size_t>> basis(n);  // vertex -> list of j
    for (std::size_t j = 0; j < m.length; ++j) basis[(m.top + j) % n].push_back(j);
    for (std::size_t v = 0; v < n; ++v) rep.dims[v] = basis[v].size();
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t w = (v + 1) % n;
        Matrix a(rep.dims[w], std::vector<Rational>(rep.dims[v]));
        for (std::size_t q = 0; q < basis[v].size(); ++q)
            for (std::size_t p = 0; p < basis[w].size(); ++p)
                if (basis[w][p] == basis[v][q] + 1) a[p][q] = 1;
        rep.maps.push_back(std::move(a));
    }
    return rep;
}

}  // namespace

std::size_t discrete_hom_dim(const KupischSeries& series, const DiscreteModule& from, const DiscreteModule& to) {
    require_valid(series, from);
    require_valid(series, to);
    const std::size_t n = series.n();
    std::vector<QuiverArrow> arrows;
    for (std::size_t v = 0; v < n; ++v) arrows.push_back({v, (v + 1) % n});
    return hom_dimension(arrows, string_rep(n, from), string_rep(n, to));
}

std::size_t algebra_dim_check(const KupischSeries& series) {
    require_valid(series);
    std::vector<Interval> projectives;
    for (std::size_t i = 0; i < series.n(); ++i) projectives.push_back(embed_module(series, {i, series.lengths[i]}));
    const Space circle = Space::circle();
    std::size_t total = 0;
    for (const auto& p : projectives)
        for (const auto& q : projectives) total += hom_dim(circle, p, q);
    return total;
}

}  // namespace nakarep
