#include "support.hpp"

#include "nakarep/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace support {

Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, long max_den) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng);
    const Rational width = hi - lo;
    // numerators k with lo + k/den in [lo, hi)
    const Rational scaled = width * Rational(den);
    long top = static_cast<long>(scaled.ceil().get_si()) - 1;
    if (top < 0) top = 0;
    std::uniform_int_distribution<long> k_dist(0, top);
    return lo + Rational(k_dist(rng), den);
}

KupischProfile circle_profile(std::vector<Piece> pieces) { return {Space::circle(), PiecewiseMap::periodic(std::move(pieces))}; }

KupischProfile line_profile(Domain d, std::vector<Piece> pieces) {
    return {Space::line(d), PiecewiseMap(d, std::move(pieces))};
}

KupischProfile kappa_n(long n) {
    std::vector<Piece> pieces;
    for (long k = 0; k < n; ++k) pieces.push_back({q(k, n), FracLinear::affine(q(1, 2), q(k + 1, 2 * n))});
    return circle_profile(std::move(pieces));
}

KupischProfile constant_kappa(const Rational& c) { return circle_profile({{q(0), FracLinear::shift(c)}}); }

KupischProfile findim() {
    std::vector<Piece> pieces{{q(0), FracLinear::shift(q(1, 2))}};
    for (long n = 12; n >= 4; --n) pieces.push_back({q(1, n + 1), FracLinear::constant(q(1, n - 1) + 1)});
    pieces.push_back({q(1, 4), FracLinear::constant(q(3, 2))});
    return circle_profile(std::move(pieces));
}

namespace {

// Strictly increasing rationals in (lo, hi), count of them.
std::vector<Rational> sorted_points(Rng& rng, const Rational& lo, const Rational& hi, std::size_t count) {
    std::set<Rational> pts;
    for (int guard = 0; pts.size() < count && guard < 1000; ++guard) {
        const Rational x = random_rational(rng, lo, hi);
        if (lo < x) pts.insert(x);
    }
    return {pts.begin(), pts.end()};
}

// Affine formula through (x0, y0) and (x1, y1).
FracLinear through(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1) {
    const Rational m = (y1 - y0) / (x1 - x0);
    return FracLinear::affine(m, y0 - m * x0);
}

}  // namespace

KupischProfile random_circle_profile(Rng& rng) {
    std::uniform_int_distribution<int> count(0, 3);
    for (;;) {
        std::vector<Rational> xs{q(0)};
        for (const auto& x : sorted_points(rng, q(0), q(1), static_cast<std::size_t>(count(rng)))) xs.push_back(x);
        xs.push_back(q(1));
        const std::size_t m = xs.size() - 1;
        // v[j] = K(x_j); right limits L[j] on each piece
        std::vector<Rational> v(m + 1);
        v[0] = random_rational(rng, q(1, 12), q(2));
        bool ok = true;
        for (std::size_t j = 1; j < m; ++j) {
            const Rational floor_v = std::max(v[j - 1], xs[j] + q(1, 24));
            v[j] = floor_v + random_rational(rng, q(0), q(1, 2));
        }
        v[m] = v[0] + 1;
        if (m > 1 && v[m - 1] > v[m]) ok = false;
        if (!ok) continue;
        std::vector<Piece> pieces;
        for (std::size_t j = 0; j < m; ++j) {
            const Rational lo = std::max(v[j], xs[j + 1]);
            if (lo > v[j + 1]) {
                ok = false;
                break;
            }
            Rational right = lo + random_rational(rng, q(0), v[j + 1] - lo + q(1, 1000));
            if (right > v[j + 1]) right = v[j + 1];
            pieces.push_back({xs[j], through(xs[j], v[j], xs[j + 1], right)});
        }
        if (!ok) continue;
        KupischProfile p = circle_profile(std::move(pieces));
        if (validate_profile(p).empty()) return p;
    }
}

KupischProfile random_split_circle_profile(Rng& rng) {
    std::uniform_int_distribution<int> count(2, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;) {
        std::vector<Rational> cs{q(0)};
        for (const auto& x : sorted_points(rng, q(0), q(1), static_cast<std::size_t>(count(rng)) - 1)) cs.push_back(x);
        if (cs.size() < 2) continue;
        cs.push_back(q(1));
        std::vector<Piece> pieces;
        for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
            const Rational a = cs[i], b = cs[i + 1], len = b - a;
            // K maps [a, b) into (a, b) and tends to b at b.
            const Rational y0 = a + len * random_rational(rng, q(1, 8), q(7, 8));
            if (coin(rng)) {
                pieces.push_back({a, through(a, y0, b, b)});
            } else {
                const Rational mid = a + len / 2;
                const Rational y1 = std::max(y0, mid + len / 8) + (b - std::max(y0, mid + len / 8)) * q(1, 4);
                pieces.push_back({a, through(a, y0, mid, y1)});
                pieces.push_back({mid, through(mid, y1, b, b)});
            }
        }
        KupischProfile p = circle_profile(std::move(pieces));
        if (validate_profile(p).empty() && separation_points(p).points.size() >= 2) return p;
    }
}

KupischProfile random_half_line_profile(Rng& rng) {
    std::uniform_int_distribution<int> count(0, 3);
    for (;;) {
        std::vector<Rational> xs{q(0)};
        for (const auto& x : sorted_points(rng, q(0), q(3), static_cast<std::size_t>(count(rng)))) xs.push_back(x);
        std::vector<Piece> pieces;
        Rational v = xs[0] + random_rational(rng, q(1, 6), q(2));
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j + 1 == xs.size()) {
                const Rational slope = random_rational(rng, q(1), q(3));
                pieces.push_back({xs[j], through(xs[j], v, xs[j] + 1, v + slope)});
                break;
            }
            const Rational lo = std::max(v, xs[j + 1]);
            const Rational right = lo + random_rational(rng, q(0), q(1));
            pieces.push_back({xs[j], through(xs[j], v, xs[j + 1], right)});
            v = std::max(right, xs[j + 1] + q(1, 12)) + random_rational(rng, q(0), q(1, 2));
        }
        KupischProfile p = line_profile(Domain::half_line(0), std::move(pieces));
        if (validate_profile(p).empty()) return p;
    }
}

PiecewiseMap random_circle_homeo(Rng& rng) {
    std::uniform_int_distribution<int> count(0, 3);
    const std::size_t k = static_cast<std::size_t>(count(rng));
    std::vector<Rational> us{q(0)};
    for (const auto& x : sorted_points(rng, q(0), q(1), k)) us.push_back(x);
    const Rational c = random_rational(rng, q(0), q(1));
    std::vector<Rational> ws{c};
    for (const auto& w : sorted_points(rng, c, c + 1, us.size() - 1)) ws.push_back(w);
    us.resize(ws.size());
    us.push_back(q(1));
    ws.push_back(c + 1);
    std::vector<Piece> pieces;
    for (std::size_t j = 0; j + 1 < us.size(); ++j) pieces.push_back({us[j], through(us[j], ws[j], us[j + 1], ws[j + 1])});
    return PiecewiseMap::periodic(std::move(pieces));
}

PiecewiseMap random_half_line_homeo(Rng& rng) {
    std::uniform_int_distribution<int> count(0, 3);
    const auto xs_inner = sorted_points(rng, q(0), q(3), static_cast<std::size_t>(count(rng)));
    std::vector<Rational> xs{q(0)};
    xs.insert(xs.end(), xs_inner.begin(), xs_inner.end());
    std::vector<Piece> pieces;
    Rational y = 0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const Rational slope = random_rational(rng, q(1, 4), q(3));
        pieces.push_back({xs[j], FracLinear::affine(slope, y - slope * xs[j])});
        if (j + 1 < xs.size()) y += slope * (xs[j + 1] - xs[j]);
    }
    return PiecewiseMap(Domain::half_line(0), std::move(pieces));
}

Interval random_compatible_interval(Rng& rng, const KupischProfile& p) {
    std::uniform_int_distribution<int> coin(0, 1);
    const Rational range = p.space.is_circle() || p.periodic() ? q(1) : q(3);
    for (;;) {
        const Rational t = random_rational(rng, q(0), range, 24);
        const Rational k = p.successor.eval(t);
        const Rational hi = t + (k - t) * random_rational(rng, q(0), q(1) + q(1, 24), 24);
        const auto lo_kind = coin(rng) ? EndpointKind::Closed : EndpointKind::Open;
        const auto hi_kind = coin(rng) ? EndpointKind::Closed : EndpointKind::Open;
        const auto u = Interval::make(t, lo_kind, std::min(hi, k), hi_kind);
        if (u && is_compatible(p, *u)) return *u;
    }
}

KupischSeries random_series(Rng& rng, std::size_t max_n, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> n_dist(1, max_n), l_dist(1, max_len);
    for (;;) {
        KupischSeries s;
        const std::size_t n = n_dist(rng);
        for (std::size_t i = 0; i < n; ++i) s.lengths.push_back(l_dist(rng));
        if (validate_series(s).empty()) return s;
    }
}

std::vector<DiscreteModule> all_modules(const KupischSeries& s) {
    std::vector<DiscreteModule> out;
    for (std::size_t i = 0; i < s.n(); ++i)
        for (std::size_t m = 1; m <= s.lengths[i]; ++m) out.push_back({i, m});
    return out;
}

namespace {

// Points that cut the line into cells on which both modules are constant.
std::vector<Rational> cell_samples(std::vector<Rational> ends) {
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    std::vector<Rational> out{ends.front() - 1};
    for (std::size_t i = 0; i < ends.size(); ++i) {
        out.push_back(ends[i]);
        out.push_back(i + 1 < ends.size() ? (ends[i] + ends[i + 1]) / 2 : ends[i] + 1);
    }
    return out;
}

bool in(const Interval& u, const Rational& x) {
    const bool lo = u.lo_kind() == EndpointKind::Closed ? u.lo() <= x : u.lo() < x;
    const bool hi = u.hi_kind() == EndpointKind::Closed ? x <= u.hi() : x < u.hi();
    return lo && hi;
}

}  // namespace

std::size_t brute_hom_line(const Interval& source, const Interval& target) {
    const auto pts = cell_samples({source.lo(), source.hi(), target.lo(), target.hi()});
    std::vector<QuiverArrow> arrows;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) arrows.push_back({i, i + 1});
    auto rep = [&](const Interval& u) {
        QuiverRep r;
        for (const auto& x : pts) r.dims.push_back(in(u, x) ? 1 : 0);
        for (const auto& a : arrows) {
            Matrix m(r.dims[a.to], std::vector<Rational>(r.dims[a.from], Rational(1)));
            r.maps.push_back(m);
        }
        return r;
    };
    return hom_dimension(arrows, rep(source), rep(target));
}

std::size_t brute_hom_circle(const Interval& source, const Interval& target) {
    std::vector<Rational> ends;
    for (const auto* u : {&source, &target})
        for (const auto& x : {u->lo(), u->hi()}) ends.push_back(x.frac());
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    std::vector<Rational> pts;
    for (std::size_t i = 0; i < ends.size(); ++i) {
        pts.push_back(ends[i]);
        const Rational next = i + 1 < ends.size() ? ends[i + 1] : ends.front() + 1;
        pts.push_back((ends[i] + next) / 2);
    }
    for (auto& x : pts) x = x.frac();
    std::sort(pts.begin(), pts.end());
    const std::size_t m = pts.size();
    std::vector<QuiverArrow> arrows;
    for (std::size_t i = 0; i < m; ++i) arrows.push_back({i, (i + 1) % m});

    auto rep = [&](const Interval& u) {
        // lifts[i]: integers k with pts[i] + k in u, ascending
        std::vector<std::vector<long>> lifts(m);
        const long kmin = static_cast<long>(u.lo().floor().get_si()) - 1;
        const long kmax = static_cast<long>(u.hi().ceil().get_si()) + 1;
        for (std::size_t i = 0; i < m; ++i)
            for (long k = kmin; k <= kmax; ++k)
                if (in(u, pts[i] + Rational(k))) lifts[i].push_back(k);
        QuiverRep r;
        for (const auto& l : lifts) r.dims.push_back(l.size());
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t j = (i + 1) % m;
            const long carry = j == 0 ? 1 : 0;  // wrapping past 1 raises the lift
            Matrix mat(lifts[j].size(), std::vector<Rational>(lifts[i].size(), Rational(0)));
            // pts[i] + k moves up to pts[j] + k + carry
            for (std::size_t c = 0; c < lifts[i].size(); ++c)
                for (std::size_t rr = 0; rr < lifts[j].size(); ++rr)
                    if (lifts[j][rr] == lifts[i][c] + carry) mat[rr][c] = 1;
            r.maps.push_back(mat);
        }
        return r;
    };
    return hom_dimension(arrows, rep(source), rep(target));
}

std::optional<std::size_t> nakayama_pd(const KupischSeries& s, DiscreteModule m) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::size_t steps = 0;
    for (;;) {
        const std::size_t l = s.lengths[m.top];
        if (m.length == l) return steps;
        if (!seen.insert({m.top, m.length}).second) return std::nullopt;
        m = {(m.top + m.length) % s.n(), l - m.length};
        ++steps;
    }
}

}  // namespace support
