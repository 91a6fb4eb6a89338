#include "nakarep/cli.hpp"

#include "nakarep/discrete.hpp"
#include "nakarep/errors.hpp"
#include "nakarep/io.hpp"
#include "nakarep/repcat.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace nakarep::cli {

namespace {

using nlohmann::json;

struct Outcome {
    json payload = json::object();
    std::string text;
    int code = Ok;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

json opt_interval(const std::optional<Interval>& u) { return u ? json(u->str()) : json(nullptr); }
std::string opt_text(const std::optional<Interval>& u) { return u ? u->str() : "0"; }

Outcome boolean(const std::string& key, bool v) { return {{{key, v}}, v ? "true" : "false"}; }

KupischProfile load_profile(const std::string& path) {
    KupischProfile p = read_profile_file(path);
    std::vector<std::string> msgs;
    for (const auto& v : validate_profile(p)) msgs.push_back(path + ": " + v.str());
    if (!msgs.empty()) throw ValidationError(join(msgs, "\n"));
    return p;
}

Rational parse_rational(const std::string& s) {
    try {
        return Rational::parse(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

KupischSeries load_series(const std::string& text) {
    KupischSeries s = parse_series(text);
    if (const auto problems = validate_series(s); !problems.empty()) throw ValidationError(join(problems, "\n"));
    return s;
}

json profile_json(const KupischProfile& p) {
    json pieces = json::array();
    const auto ps = p.successor.pieces();
    for (std::size_t i = 0; i < ps.size(); ++i)
        pieces.push_back({{"start", ps[i].start.str()},
                          {"end", p.successor.piece_end(i).str()},
                          {"a", ps[i].formula.a().str()},
                          {"b", ps[i].formula.b().str()},
                          {"c", ps[i].formula.c().str()},
                          {"d", ps[i].formula.d().str()}});
    return {{"space", p.space.str()}, {"periodic", p.periodic()}, {"pieces", pieces}, {"text", write_profile(p)}};
}

json homeo_json(const PiecewiseMap& f) { return {{"text", write_homeo(f)}}; }

std::string seps_text(const KupischProfile& p, const SeparationSet& s) {
    std::vector<std::string> parts;
    for (const auto& c : s.points) parts.push_back(c.str());
    std::string out = parts.empty() ? "none" : join(parts, ", ");
    return s.periodic && !p.space.is_circle() && !parts.empty() ? out + " (+Z)" : out;
}

json rationals(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

json intervals(const std::vector<Interval>& v) {
    json out = json::array();
    for (const auto& u : v) out.push_back(u.str());
    return out;
}

struct Args {
    std::vector<std::string> files;
    std::vector<std::string> literals;
    std::string a, b, c, d;
    long shift = 0;
    std::string coef = "1";
    std::optional<std::size_t> cap;
    std::size_t samples = 100;
    int digits = 6;
    std::string span = "1";
    bool open_left = false;
    std::size_t steps = 0;
};

struct Command {
    CommandInfo info;
    std::function<void(CLI::App&, Args&)> setup;
    std::function<Outcome(const Args&)> body;
};

std::size_t resolution_cap(const Args& a) {
    if (a.cap) return *a.cap;
    if (const char* env = std::getenv("NAKAREP_CAP")) {
        const std::string s = env;
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw ParseError("NAKAREP_CAP must be a non-negative integer, got '" + s + "'");
        return std::stoul(s);
    }
    return kDefaultResolutionCap;
}

void pos(CLI::App& app, const char* name, std::string& into, const char* help) { app.add_option(name, into, help)->required(); }

const std::vector<Command>& commands() {
    static const std::vector<Command> table = {
        {{"validate", {"validate_profile"}, "check a profile file against the Kupisch conditions"},
         [](CLI::App& app, Args& a) { pos(app, "profile", a.a, "profile file"); },
         [](const Args& a) {
             const KupischProfile p = read_profile_file(a.a);
             const auto violations = validate_profile(p);
             Outcome o;
             json list = json::array();
             std::vector<std::string> lines;
             for (const auto& v : violations) {
                 list.push_back({{"piece", v.piece ? json(*v.piece) : json(nullptr)}, {"condition", v.condition}});
                 lines.push_back(v.str());
             }
             o.payload = {{"valid", violations.empty()}, {"violations", list}};
             o.text = violations.empty() ? "valid" : join(lines, "\n");
             o.code = violations.empty() ? Ok : ValidationFailure;
             return o;
         }},
        {{"info", {"separation_points", "components"}, "summarize a profile: pieces, separation points, components"},
         [](CLI::App& app, Args& a) { pos(app, "profile", a.a, "profile file"); },
         [](const Args& a) {
             const KupischProfile p = load_profile(a.a);
             const SeparationSet s = separation_points(p);
             const auto comps = components(p);
             std::ostringstream os;
             os << "space: " << p.space.str() << (p.space.is_circle() || !p.periodic() ? "" : " (periodic)") << "\n";
             const auto ps = p.successor.pieces();
             os << "pieces: " << ps.size() << "\n";
             for (std::size_t i = 0; i < ps.size(); ++i)
                 os << "  [" << ps[i].start << ", " << p.successor.piece_end(i) << ")  K(t) = " << ps[i].formula.str() << "\n";
             os << "separation points: " << seps_text(p, s) << "\n";
             os << "components: " << comps.size();
             json j = profile_json(p);
             j["separation_points"] = rationals(s.points);
             j["components"] = comps.size();
             return Outcome{j, os.str()};
         }},
        {{"seps", {"separation_points"}, "separation points (one period when periodic)"},
         [](CLI::App& app, Args& a) { pos(app, "profile", a.a, "profile file"); },
         [](const Args& a) {
             const KupischProfile p = load_profile(a.a);
             const SeparationSet s = separation_points(p);
             return Outcome{{{"points", rationals(s.points)}, {"periodic", s.periodic}}, seps_text(p, s)};
         }},
        {{"components", {"components"}, "orthogonal components"},
         [](CLI::App& app, Args& a) { pos(app, "profile", a.a, "profile file"); },
         [](const Args& a) {
             json list = json::array();
             std::vector<std::string> lines;
             for (const auto& c : components(load_profile(a.a))) {
                 list.push_back({{"index", c.index},
                                 {"left", c.left.str()},
                                 {"left_closed", c.left_closed},
                                 {"right", c.right.str()},
                                 {"shape", to_string(c.shape)}});
                 lines.push_back(c.str());
             }
             return Outcome{{{"components", list}}, join(lines, "\n")};
         }},
        {{"hom", {"hom_dim"}, "dim Hom(M_source, M_target)"},
         [](CLI::App& app, Args& a) {
             pos(app, "space", a.a, "line or circle");
             pos(app, "source", a.b, "interval literal");
             pos(app, "target", a.c, "interval literal");
         },
         [](const Args& a) {
             const auto n = hom_dim(parse_space(a.a), parse_interval(a.b), parse_interval(a.c));
             return Outcome{{{"dim", n}}, std::to_string(n)};
         }},
        {{"end", {"end_dim"}, "dim End(M_U)"},
         [](CLI::App& app, Args& a) {
             pos(app, "space", a.a, "line or circle");
             pos(app, "interval", a.b, "interval literal");
         },
         [](const Args& a) {
             const auto n = end_dim(parse_space(a.a), parse_interval(a.b));
             return Outcome{{{"dim", n}}, std::to_string(n)};
         }},
        {{"brick", {"is_brick"}, "whether End(M_U) is one-dimensional"},
         [](CLI::App& app, Args& a) {
             pos(app, "space", a.a, "line or circle");
             pos(app, "interval", a.b, "interval literal");
         },
         [](const Args& a) { return boolean("brick", is_brick(parse_space(a.a), parse_interval(a.b))); }},
        {{"compat", {"is_compatible"}, "whether every summand is a representation of the profile"},
         [](CLI::App& app, Args& a) {
             pos(app, "profile", a.a, "profile file");
             // summand literals arrive as extra arguments
             app.allow_extras();
             app.footer("Arguments after the profile are interval literals, one per summand.");
         },
         [](const Args& a) {
             const KupischProfile p = load_profile(a.a);
             if (a.literals.empty()) throw ParseError("compat needs at least one interval literal");
             ModuleExpr m{p.space, {}};
             for (const auto& s : a.literals) m.summands.push_back(parse_interval(s));
             return boolean("compatible", is_compatible(p, m));
         }},
        {{"morphism", {"morphism_analyze"}, "image, kernel and cokernel of a scalar morphism"},
         [](CLI::App& app, Args& a) {
             pos(app, "source", a.a, "interval literal");
             pos(app, "target", a.b, "interval literal");
             app.add_option("--shift", a.shift, "integer translate of the target (circle)");
             app.add_option("--coef", a.coef, "nonzero scalar");
         },
         [](const Args& a) {
             const MorphismAnalysis r = morphism_analyze({parse_interval(a.a), parse_interval(a.b), a.shift, parse_rational(a.coef)});
             return Outcome{{{"image", opt_interval(r.image)}, {"kernel", opt_interval(r.kernel)}, {"cokernel", opt_interval(r.cokernel)}},
                            "image: " + opt_text(r.image) + "\nkernel: " + opt_text(r.kernel) + "\ncokernel: " + opt_text(r.cokernel)};
         }},
        {{"resolve", {"projective_resolution"}, "minimal projective resolution and its verdict"},
         [](CLI::App& app, Args& a) {
             pos(app, "profile", a.a, "profile file");
             pos(app, "interval", a.b, "interval literal");
             app.add_option("--cap", a.cap, "maximum number of syzygy steps (default NAKAREP_CAP or 512)");
         },
         [](const Args& a) {
             const ResolutionReport r = projective_resolution(load_profile(a.a), parse_interval(a.b), resolution_cap(a));
             std::ostringstream os;
             for (std::size_t i = 0; i < r.covers.size(); ++i) {
                 os << "P" << i << ": " << r.covers[i].str() << "\n";
                 if (i < r.syzygies.size()) os << "Omega" << i + 1 << ": " << r.syzygies[i].str() << "\n";
             }
             os << "verdict: " << r.verdict.str();
             return Outcome{{{"covers", intervals(r.covers)}, {"syzygies", intervals(r.syzygies)}, {"verdict", r.verdict.str()}}, os.str()};
         }},
        {{"pushforward", {"push_forward"}, "profile conjugated by a homeomorphism"},
         [](CLI::App& app, Args& a) {
             pos(app, "profile", a.a, "profile file");
             pos(app, "homeo", a.b, "homeomorphism file");
         },
         [](const Args& a) {
             const KupischProfile p = push_forward(load_profile(a.a), read_homeo_file(a.b));
             return Outcome{profile_json(p), write_profile(p)};
         }},
        {{"conjugate", {"verify_conjugacy"}, "whether f carries the source profile onto the target"},
         [](CLI::App& app, Args& a) {
             pos(app, "homeo", a.a, "homeomorphism file");
             pos(app, "source", a.b, "profile file");
             pos(app, "target", a.c, "profile file");
         },
         [](const Args& a) {
             return boolean("conjugate", verify_conjugacy(read_homeo_file(a.a), load_profile(a.b), load_profile(a.c)));
         }},
        {{"normalize", {"normalize_profile"}, "equivalent profile on [0, +inf) or the whole line"},
         [](CLI::App& app, Args& a) { pos(app, "profile", a.a, "profile file"); },
         [](const Args& a) {
             const auto [p, f] = normalize_profile(load_profile(a.a));
             json j = {{"profile", profile_json(p)}, {"homeo", homeo_json(f)}};
             return Outcome{j, write_profile(p) + "\n" + write_homeo(f)};
         }},
        {{"series-profile", {"associated_kupisch"}, "circle profile of a Kupisch series"},
         [](CLI::App& app, Args& a) { pos(app, "series", a.a, "series literal, e.g. 3,3,2"); },
         [](const Args& a) {
             const KupischProfile p = associated_kupisch(load_series(a.a));
             return Outcome{profile_json(p), write_profile(p)};
         }},
        {{"embed", {"embed_module"}, "string-module support of a discrete module"},
         [](CLI::App& app, Args& a) {
             pos(app, "series", a.a, "series literal");
             pos(app, "module", a.b, "module literal top,length");
         },
         [](const Args& a) {
             const Interval u = embed_module(load_series(a.a), parse_module(a.b));
             return Outcome{{{"interval", u.str()}}, u.str()};
         }},
        {{"extract", {"extract_module"}, "discrete module with a given support"},
         [](CLI::App& app, Args& a) {
             pos(app, "series", a.a, "series literal");
             pos(app, "interval", a.b, "interval literal");
         },
         [](const Args& a) {
             const DiscreteModule m = extract_module(load_series(a.a), parse_interval(a.b));
             return Outcome{{{"top", m.top}, {"length", m.length}}, std::to_string(m.top) + "," + std::to_string(m.length)};
         }},
        {{"algdim", {"algebra_dim_check"}, "sum of dim Hom(P_i, P_j) on the circle"},
         [](CLI::App& app, Args& a) { pos(app, "series", a.a, "series literal"); },
         [](const Args& a) {
             const KupischSeries s = load_series(a.a);
             const auto n = algebra_dim_check(s);
             return Outcome{{{"dim", n}, {"total", s.total()}}, std::to_string(n)};
         }},
        {{"export-plot", {"plot_samples", "export_plot"}, "CSV samples t,K(t),kappa(t)"},
         [](CLI::App& app, Args& a) {
             pos(app, "profile", a.a, "profile file");
             app.add_option("--samples", a.samples, "number of sample points (>= 2)");
             app.add_option("--digits", a.digits, "decimal digits in the CSV");
             app.add_option("--span", a.span, "sampled width for unbounded line domains");
         },
         [](const Args& a) {
             const KupischProfile p = load_profile(a.a);
             const std::string csv = export_plot(p, a.samples, a.digits, parse_rational(a.span));
             json rows = json::array();
             for (const Rational& t : plot_samples(p, a.samples, parse_rational(a.span))) {
                 const Rational k = p.successor.eval(t);
                 rows.push_back({{"t", t.str()}, {"K", k.str()}, {"kappa", (k - t).str()}});
             }
             return Outcome{{{"rows", rows}}, csv.substr(0, csv.size() - 1)};
         }},
        {{"check-series", {"validate_series"}, "validate a Kupisch series"},
         [](CLI::App& app, Args& a) { pos(app, "series", a.a, "series literal"); },
         [](const Args& a) {
             const auto problems = validate_series(parse_series(a.a));
             Outcome o{{{"valid", problems.empty()}, {"problems", problems}}, problems.empty() ? "valid" : join(problems, "\n")};
             o.code = problems.empty() ? Ok : ValidationFailure;
             return o;
         }},
        {{"kappa", {"kappa_at"}, "kappa(t) = K(t) - t"},
         [](CLI::App& app, Args& a) {
             pos(app, "profile", a.a, "profile file");
             pos(app, "t", a.b, "rational point");
         },
         [](const Args& a) {
             const Rational k = kappa_at(load_profile(a.a), parse_rational(a.b));
             return Outcome{{{"kappa", k.str()}}, k.str()};
         }},
        {{"orbit", {"orbit"}, "t, K(t), ..., K^n(t)"},
         [](CLI::App& app, Args& a) {
             pos(app, "profile", a.a, "profile file");
             pos(app, "t", a.b, "rational point");
             app.add_option("n", a.steps, "number of steps")->required();
         },
         [](const Args& a) {
             const auto pts = orbit(load_profile(a.a), parse_rational(a.b), a.steps);
             std::vector<std::string> parts;
             for (const auto& r : pts) parts.push_back(r.str());
             return Outcome{{{"orbit", rationals(pts)}}, join(parts, ", ")};
         }},
        {{"next-sep", {"next_separation"}, "least separation point above c"},
         [](CLI::App& app, Args& a) {
             pos(app, "profile", a.a, "profile file");
             pos(app, "c", a.b, "rational point");
         },
         [](const Args& a) {
             const ExtendedBound s = next_separation(load_profile(a.a), parse_rational(a.b));
             return Outcome{{{"next", s.str()}}, s.str()};
         }},
        {{"projective", {"projective_at"}, "indecomposable projective at t"},
         [](CLI::App& app, Args& a) {
             pos(app, "profile", a.a, "profile file");
             pos(app, "t", a.b, "rational point");
             app.add_flag("--open", a.open_left, "open left end (t, K(t)]");
         },
         [](const Args& a) {
             const Interval u = projective_at(load_profile(a.a), parse_rational(a.b), a.open_left ? EndpointKind::Open : EndpointKind::Closed);
             return Outcome{{{"interval", u.str()}}, u.str()};
         }},
        {{"is-projective", {"is_projective"}, "whether M_U is projective"},
         [](CLI::App& app, Args& a) {
             pos(app, "profile", a.a, "profile file");
             pos(app, "interval", a.b, "interval literal");
         },
         [](const Args& a) { return boolean("projective", is_projective(load_profile(a.a), parse_interval(a.b))); }},
        {{"cover", {"projective_cover"}, "projective cover and first syzygy"},
         [](CLI::App& app, Args& a) {
             pos(app, "profile", a.a, "profile file");
             pos(app, "interval", a.b, "interval literal");
         },
         [](const Args& a) {
             const ProjectiveCover c = projective_cover(load_profile(a.a), parse_interval(a.b));
             return Outcome{{{"cover", c.cover.str()}, {"syzygy", opt_interval(c.syzygy)}},
                            "cover: " + c.cover.str() + "\nsyzygy: " + opt_text(c.syzygy)};
         }},
        {{"component", {"component_of"}, "component containing M_U"},
         [](CLI::App& app, Args& a) {
             pos(app, "profile", a.a, "profile file");
             pos(app, "interval", a.b, "interval literal");
         },
         [](const Args& a) {
             const ComponentLocation c = component_of(load_profile(a.a), parse_interval(a.b));
             return Outcome{{{"index", c.index}, {"shift", c.shift}},
                            std::to_string(c.index) + (c.shift ? " (shift " + std::to_string(c.shift) + ")" : "")};
         }},
        {{"map", {"map_module"}, "support f(U) of the image of M_U"},
         [](CLI::App& app, Args& a) {
             pos(app, "homeo", a.a, "homeomorphism file");
             pos(app, "interval", a.b, "interval literal");
         },
         [](const Args& a) {
             const Interval u = map_module(read_homeo_file(a.a), parse_interval(a.b));
             return Outcome{{{"interval", u.str()}}, u.str()};
         }},
        {{"dhom", {"discrete_hom_dim"}, "dim Hom between discrete modules by linear algebra"},
         [](CLI::App& app, Args& a) {
             pos(app, "series", a.a, "series literal");
             pos(app, "from", a.b, "module literal");
             pos(app, "to", a.c, "module literal");
         },
         [](const Args& a) {
             const auto n = discrete_hom_dim(load_series(a.a), parse_module(a.b), parse_module(a.c));
             return Outcome{{{"dim", n}}, std::to_string(n)};
         }},
        {{"eval", {"eval", "left_limit"}, "f(t) and the left limit f(t-)"},
         [](CLI::App& app, Args& a) {
             pos(app, "homeo", a.a, "homeomorphism file");
             pos(app, "t", a.b, "rational point");
         },
         [](const Args& a) {
             const PiecewiseMap f = read_homeo_file(a.a);
             const Rational t = parse_rational(a.b);
             const Rational v = f.eval(t), l = f.left_limit(t);
             return Outcome{{{"value", v.str()}, {"left_limit", l.str()}}, v.str() + " (left limit " + l.str() + ")"};
         }},
        {{"compose", {"compose"}, "f o g"},
         [](CLI::App& app, Args& a) {
             pos(app, "f", a.a, "homeomorphism file");
             pos(app, "g", a.b, "homeomorphism file");
         },
         [](const Args& a) {
             const PiecewiseMap h = compose(read_homeo_file(a.a), read_homeo_file(a.b));
             return Outcome{homeo_json(h), write_homeo(h)};
         }},
        {{"invert", {"invert"}, "f^{-1}"},
         [](CLI::App& app, Args& a) { pos(app, "f", a.a, "homeomorphism file"); },
         [](const Args& a) {
             const PiecewiseMap h = invert(read_homeo_file(a.a));
             return Outcome{homeo_json(h), write_homeo(h)};
         }},
        {{"equals", {"equals"}, "equality of canonical forms"},
         [](CLI::App& app, Args& a) {
             pos(app, "f", a.a, "homeomorphism file");
             pos(app, "g", a.b, "homeomorphism file");
         },
         [](const Args& a) { return boolean("equal", equals(read_homeo_file(a.a), read_homeo_file(a.b))); }},
        {{"left-intersect", {"left_intersect"}, "U ∩_L V"},
         [](CLI::App& app, Args& a) {
             pos(app, "U", a.a, "interval literal");
             pos(app, "V", a.b, "interval literal");
         },
         [](const Args& a) {
             const auto w = left_intersect(parse_interval(a.a), parse_interval(a.b));
             return Outcome{{{"interval", opt_interval(w)}}, w ? w->str() : "empty"};
         }},
        {{"translate", {"translate"}, "U + k"},
         [](CLI::App& app, Args& a) {
             pos(app, "interval", a.a, "interval literal");
             app.add_option("k", a.shift, "integer shift")->required();
         },
         [](const Args& a) {
             const Interval u = translate(parse_interval(a.a), a.shift);
             return Outcome{{{"interval", u.str()}}, u.str()};
         }},
        {{"lift", {"canonical_lift"}, "translate of U with left end in [0, 1)"},
         [](CLI::App& app, Args& a) { pos(app, "interval", a.a, "interval literal"); },
         [](const Args& a) {
             const Interval u = canonical_lift(parse_interval(a.a)).interval;
             return Outcome{{{"interval", u.str()}}, u.str()};
         }},
        {{"contains", {"contains"}, "whether V is a subset of U"},
         [](CLI::App& app, Args& a) {
             pos(app, "U", a.a, "interval literal");
             pos(app, "V", a.b, "interval literal");
         },
         [](const Args& a) { return boolean("contains", contains(parse_interval(a.a), parse_interval(a.b))); }},
    };
    return table;
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
    static const std::vector<CommandInfo> infos = [] {
        std::vector<CommandInfo> out;
        for (const auto& c : commands()) out.push_back(c.info);
        return out;
    }();
    return infos;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with continuous Nakayama representations", "nakarep"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    Args parsed;
    const Command* chosen = nullptr;
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands()) {
        CLI::App* sub = app.add_subcommand(c.info.name, c.info.summary);
        c.setup(*sub, parsed);
        subs.emplace_back(sub, &c);
    }

    auto envelope = [&](const std::string& command, const json& payload, bool ok) {
        json j = {{"status", ok ? "ok" : "error"}, {"command", command}, {"payload", payload}};
        out << j.dump(2) << "\n";
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (as_json) envelope("", {{"kind", "usage"}, {"message", e.what()}}, false);
        return ParseFailure;
    }
    for (const auto& [sub, c] : subs)
        if (sub->parsed()) {
            chosen = c;
            parsed.literals = sub->remaining();
        }

    const std::string name = chosen->info.name;
    auto fail = [&](const char* kind, const std::string& message, int code) {
        err << "error: " << message << "\n";
        if (as_json) envelope(name, {{"kind", kind}, {"message", message}}, false);
        return code;
    };
    try {
        const Outcome o = chosen->body(parsed);
        if (as_json)
            envelope(name, o.payload, o.code == Ok);
        else
            out << o.text.substr(0, o.text.find_last_not_of('\n') + 1) << "\n";
        return o.code;
    } catch (const ParseError& e) {
        return fail("parse", e.what(), ParseFailure);
    } catch (const ValidationError& e) {
        return fail("validation", e.what(), ValidationFailure);
    } catch (const InvalidSeries& e) {
        return fail("validation", e.what(), ValidationFailure);
    } catch (const Error& e) {
        return fail("math", e.what(), MathFailure);
    }
}

}  // namespace nakarep::cli
