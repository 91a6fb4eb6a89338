#include "nakarep/io.hpp"

#include "nakarep/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace nakarep {

ParseError::ParseError(const std::string& what, std::string source_, std::size_t line_)
    : Error(source_.empty() ? what : source_ + ":" + std::to_string(line_) + ": " + what),
      source(std::move(source_)),
      line(line_) {}

namespace {

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

struct Bracketed {
    bool lo_closed;
    std::string lo;
    std::string hi;
    bool hi_closed;
};

Bracketed split_bracketed(std::string_view text) {
    const std::string s = strip(text);
    if (s.size() < 5) throw ParseError("malformed interval '" + std::string(text) + "'");
    const char open = s.front(), close = s.back();
    if ((open != '[' && open != '(') || (close != ']' && close != ')'))
        throw ParseError("interval must be bracketed: '" + std::string(text) + "'");
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw ParseError("interval needs exactly one comma: '" + std::string(text) + "'");
    return {open == '[', s.substr(1, comma - 1), s.substr(comma + 1, s.size() - comma - 2), close == ']'};
}

Rational rational_or_throw(std::string_view s) {
    try {
        return Rational::parse(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

ExtendedBound bound_or_throw(std::string_view s) {
    try {
        return ExtendedBound::parse(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

EndpointKind kind(bool closed) { return closed ? EndpointKind::Closed : EndpointKind::Open; }

std::size_t parse_count(std::string_view s) {
    const std::string t = strip(s);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("expected a non-negative integer, got '" + std::string(s) + "'");
    return std::stoul(t);
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Interval parse_interval(std::string_view text) {
    const Bracketed b = split_bracketed(text);
    auto u = Interval::make(rational_or_throw(b.lo), kind(b.lo_closed), rational_or_throw(b.hi), kind(b.hi_closed));
    if (!u) throw ParseError("empty interval '" + std::string(text) + "'");
    return *u;
}

Domain parse_domain(std::string_view text) {
    const Bracketed b = split_bracketed(text);
    const ExtendedBound lo = bound_or_throw(b.lo), hi = bound_or_throw(b.hi);
    if ((b.lo_closed && !lo.is_finite()) || (b.hi_closed && !hi.is_finite()))
        throw ParseError("infinite ends must be open: '" + std::string(text) + "'");
    try {
        return Domain(lo, b.lo_closed, hi, b.hi_closed);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

Space parse_space(std::string_view text) {
    const std::string s = strip(text);
    if (s == "circle") return Space::circle();
    if (s == "line") return Space::line(Domain::real_line());
    throw ParseError("space must be 'line' or 'circle', got '" + std::string(text) + "'");
}

KupischSeries parse_series(std::string_view text) {
    KupischSeries out;
    for (const auto& part : split(strip(text), ',')) out.lengths.push_back(parse_count(part));
    return out;
}

DiscreteModule parse_module(std::string_view text) {
    const auto parts = split(strip(text), ',');
    if (parts.size() != 2) throw ParseError("module literal is 'top,length', got '" + std::string(text) + "'");
    return {parse_count(parts[0]), parse_count(parts[1])};
}

namespace {

struct RawPiece {
    Bracketed span;
    FracLinear formula;
    std::size_t line;
};

struct Reader {
    std::istream& in;
    std::string source;
    std::size_t line_no = 0;

    // Next non-empty line with comments removed, split on whitespace outside brackets.
    bool next(std::vector<std::string>& tokens, std::string& raw) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            tokens.clear();
            std::string cur;
            int depth = 0;
            for (char c : line) {
                if (c == '[' || c == '(') ++depth;
                if (c == ']' || c == ')') --depth;
                if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
                    if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
                } else {
                    cur.push_back(c);
                }
            }
            if (!cur.empty()) tokens.push_back(std::move(cur));
            if (!tokens.empty()) {
                raw = line;
                return true;
            }
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, source, line_no); }
};

FracLinear parse_formula(Reader& r, const std::vector<std::string>& tokens) {
    const std::string& kind = tokens.at(2);
    std::vector<Rational> coeffs;
    try {
        for (std::size_t i = 3; i < tokens.size(); ++i) coeffs.push_back(Rational::parse(tokens[i]));
        if (kind == "affine" && coeffs.size() == 2) return FracLinear::affine(coeffs[0], coeffs[1]);
        if (kind == "mobius" && coeffs.size() == 4) return FracLinear(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
        if (kind == "const" && coeffs.size() == 1) return FracLinear::constant(coeffs[0]);
    } catch (const std::invalid_argument& e) {
        r.fail(e.what());
    } catch (const Error& e) {
        r.fail(e.what());
    }
    r.fail("expected 'affine m q', 'mobius a b c d' or 'const v'");
}

std::vector<RawPiece> read_pieces(Reader& r) {
    std::vector<RawPiece> out;
    std::vector<std::string> tokens;
    std::string raw;
    while (r.next(tokens, raw)) {
        if (tokens[0] != "piece" || tokens.size() < 3) r.fail("expected 'piece <interval> <formula>'");
        Bracketed span{};
        try {
            span = split_bracketed(tokens[1]);
        } catch (const ParseError& e) {
            r.fail(e.what());
        }
        out.push_back({span, parse_formula(r, tokens), r.line_no});
    }
    if (out.empty()) r.fail("no pieces");
    return out;
}

PiecewiseMap assemble(Reader& r, const Domain& domain, const std::vector<RawPiece>& raw, bool periodic) {
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        r.line_no = raw[i].line;
        ExtendedBound start = ExtendedBound::neg_inf(), end = ExtendedBound::pos_inf();
        try {
            start = ExtendedBound::parse(raw[i].span.lo);
            end = ExtendedBound::parse(raw[i].span.hi);
        } catch (const std::invalid_argument& e) {
            r.fail(e.what());
        }
        if (i == 0 && (!(start == domain.lo) || raw[i].span.lo_closed != domain.lo_closed))
            r.fail("first piece must start the domain " + domain.str());
        if (i > 0 && !raw[i].span.lo_closed) r.fail("pieces after the first are left-closed");
        const bool last = i + 1 == raw.size();
        if (last && (!(end == domain.hi) || raw[i].span.hi_closed != domain.hi_closed))
            r.fail("last piece must end the domain " + domain.str());
        if (!last) {
            if (raw[i].span.hi_closed) r.fail("pieces before the last are right-open");
            if (!(end == bound_or_throw(raw[i + 1].span.lo))) {
                r.line_no = raw[i + 1].line;
                r.fail("piece does not start where the previous one ends");
            }
        }
        pieces.push_back({start, raw[i].formula});
    }
    try {
        return periodic ? PiecewiseMap::periodic(std::move(pieces)) : PiecewiseMap(domain, std::move(pieces));
    } catch (const InvalidMap& e) {
        r.fail(e.what());
    }
}

}  // namespace

KupischProfile read_profile(std::istream& in, const std::string& source) {
    Reader r{in, source};
    std::vector<std::string> tokens;
    std::string raw;
    if (!r.next(tokens, raw) || tokens[0] != "space") r.fail("profile must start with 'space circle' or 'space line <domain>'");
    std::optional<Space> space;
    bool periodic = false;
    if (tokens.size() == 2 && tokens[1] == "circle") {
        space = Space::circle();
        periodic = true;
    } else if ((tokens.size() == 3 || tokens.size() == 4) && tokens[1] == "line") {
        try {
            space = Space::line(parse_domain(tokens[2]));
        } catch (const ParseError& e) {
            r.fail(e.what());
        }
        if (tokens.size() == 4) {
            if (tokens[3] != "periodic") r.fail("unknown space option '" + tokens[3] + "'");
            periodic = true;
        }
    } else {
        r.fail("malformed space line");
    }
    const auto pieces = read_pieces(r);
    return {*space, assemble(r, periodic ? Domain::unit() : space->domain(), pieces, periodic)};
}

PiecewiseMap read_homeo(std::istream& in, const std::string& source) {
    Reader r{in, source};
    std::vector<std::string> tokens;
    std::string raw;
    if (!r.next(tokens, raw) || tokens[0] != "homeo") r.fail("homeomorphism must start with 'homeo'");
    if (tokens.size() == 2 && tokens[1] == "circle") return assemble(r, Domain::unit(), read_pieces(r), true);
    if (tokens.size() != 4 || tokens[2] != "->") r.fail("expected 'homeo <domain> -> <domain>' or 'homeo circle'");
    Domain from = Domain::real_line(), to = Domain::real_line();
    try {
        from = parse_domain(tokens[1]);
        to = parse_domain(tokens[3]);
    } catch (const ParseError& e) {
        r.fail(e.what());
    }
    const std::size_t header = r.line_no;
    PiecewiseMap f = assemble(r, from, read_pieces(r), false);
    r.line_no = header;
    if (!(image_domain(f) == to)) r.fail("map sends " + from.str() + " onto " + image_domain(f).str() + ", not " + to.str());
    return f;
}

namespace {

template <typename Fn>
auto read_file(const std::string& path, Fn fn) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file", path, 0);
    return fn(in, path);
}

}  // namespace

KupischProfile read_profile_file(const std::string& path) {
    return read_file(path, [](std::istream& in, const std::string& p) { return read_profile(in, p); });
}

PiecewiseMap read_homeo_file(const std::string& path) {
    return read_file(path, [](std::istream& in, const std::string& p) { return read_homeo(in, p); });
}

std::string write_formula(const FracLinear& f) {
    if (f.is_affine()) return "affine " + f.a().str() + " " + f.b().str();
    return "mobius " + f.a().str() + " " + f.b().str() + " " + f.c().str() + " " + f.d().str();
}

namespace {

std::string write_pieces(const PiecewiseMap& f) {
    std::ostringstream os;
    const auto pieces = f.pieces();
    const Domain& d = f.domain();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const bool lo_closed = i == 0 ? d.lo_closed : true;
        const bool hi_closed = i + 1 == pieces.size() ? d.hi_closed : false;
        os << "piece " << (lo_closed ? "[" : "(") << pieces[i].start << ", " << f.piece_end(i) << (hi_closed ? "]" : ")") << " "
           << write_formula(pieces[i].formula) << "\n";
    }
    return os.str();
}

}  // namespace

std::string write_profile(const KupischProfile& profile) {
    std::string head;
    if (profile.space.is_circle())
        head = "space circle\n";
    else
        head = "space line " + profile.space.domain().str() + (profile.successor.is_periodic() ? " periodic" : "") + "\n";
    return head + write_pieces(profile.successor);
}

std::string write_homeo(const PiecewiseMap& f) {
    const std::string head = f.is_periodic() ? "homeo circle\n" : "homeo " + f.domain().str() + " -> " + image_domain(f).str() + "\n";
    return head + write_pieces(f);
}

std::vector<Rational> plot_samples(const KupischProfile& profile, std::size_t samples, const Rational& span) {
    if (samples < 2) throw DomainError("export-plot needs at least 2 samples");
    if (span.sign() <= 0) throw DomainError("plot span must be positive");
    Rational lo, width;
    bool offset = false;
    if (profile.periodic()) {
        lo = 0, width = 1;
    } else {
        const Domain& d = profile.space.domain();
        if (d.lo.is_finite()) {
            lo = d.lo.value();
            width = d.hi.is_finite() ? d.hi.value() - lo : span;
            offset = !d.lo_closed;
        } else {
            width = span;
            lo = d.hi.is_finite() ? d.hi.value() - span : -span / 2;
        }
    }
    const Rational step = width / Rational(static_cast<long>(samples));
    std::vector<Rational> out;
    for (std::size_t i = 0; i < samples; ++i) {
        Rational t = lo + step * Rational(static_cast<long>(i));
        if (offset) t += step / 2;
        out.push_back(t);
    }
    return out;
}

std::string export_plot(const KupischProfile& profile, std::size_t samples, int digits, const Rational& span) {
    std::ostringstream os;
    os << "t,K,kappa\n";
    for (const Rational& t : plot_samples(profile, samples, span)) {
        const Rational k = profile.successor.eval(t);
        os << t.decimal(digits) << "," << k.decimal(digits) << "," << (k - t).decimal(digits) << "\n";
    }
    return os.str();
}

}  // namespace nakarep
