#pragma once

// Command dispatcher for the stabcone tool. Output goes to `out`, diagnostics to `err`.
// Exit status: 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cross_section.hpp"
#include "io.hpp"
#include "poset.hpp"
#include "quiver.hpp"
#include "representation.hpp"
#include "stability.hpp"
#include "word.hpp"

namespace stabcone::cli {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline BoundQuiver load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

inline Poset load_poset(const std::string& path) {
    const std::string text = read_file(path);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DomainError(std::string("poset file is not valid JSON: ") + e.what());
    }
    return io::read_poset(j);
}

// Comma or whitespace separated tokens.
inline std::vector<std::string> tokens(const std::string& s) {
    std::string t = s;
    for (auto& c : t)
        if (c == ',') c = ' ';
    return stabcone::detail::split_ws(t);
}

inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        const Integer num(s.substr(0, slash));
        if (slash == std::string::npos) return Rational(num);
        const Integer den(s.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw UsageError("not a rational number: '" + s + "'");
    }
}

inline RatVector parse_rational_vector(const std::string& s, std::size_t n) {
    RatVector v;
    for (const auto& t : tokens(s)) v.push_back(parse_rational(t));
    if (v.size() != n) throw UsageError("expected " + std::to_string(n) + " coordinates, got " + std::to_string(v.size()));
    return v;
}

inline IntVector parse_int_vector(const std::string& s, std::size_t n) {
    IntVector v;
    for (const auto& x : parse_rational_vector(s, n)) {
        if (denominator(x) != 1) throw UsageError("expected integer coordinates in '" + s + "'");
        v.push_back(numerator(x));
    }
    return v;
}

inline std::vector<IntVector> parse_basis(const std::string& s, std::size_t n) {
    std::vector<IntVector> out;
    std::size_t from = 0;
    while (from <= s.size()) {
        const auto to = s.find(';', from);
        out.push_back(parse_int_vector(s.substr(from, to == std::string::npos ? std::string::npos : to - from), n));
        if (to == std::string::npos) break;
        from = to + 1;
    }
    return out;
}

inline void write_row(std::ostream& out, const std::string& kind, const IntVector& v) {
    out << kind;
    for (const auto& x : v) out << "," << x;
    out << "\n";
}

inline void cone_csv(std::ostream& out, const RationalCone& cone) {
    const RationalCone c = convert(cone);
    out << "kind";
    for (std::size_t i = 1; i <= c.ambient_dim; ++i) out << ",x" << i;
    out << "\n";
    for (const auto& r : c.rays) write_row(out, "ray", r);
    for (const auto& r : c.lineality) write_row(out, "lineality", r);
    for (const auto& r : c.equalities) write_row(out, "equality", r);
    for (const auto& r : c.inequalities) write_row(out, "inequality", r);
}

inline void cross_section_csv(std::ostream& out, const CrossSection& s) {
    out << "kind";
    for (std::size_t i = 1; i <= s.basis.size(); ++i) out << ",c" << i;
    out << "\n";
    out << std::setprecision(12);
    for (const auto& p : s.points) {
        out << "point";
        for (const auto& c : p.coords) out << "," << to_double(c);
        out << "\n";
    }
    for (const auto& r : s.unbounded) write_row(out, "unbounded", r);
}

struct Options {
    std::string file, algebra, poset, word_string, word_band, method = "oracle", format = "json";
    std::string point, eps, slice, basis, level = "1";
    bool support = false, certify = false, cover = false;
    std::size_t cap = kDefaultPosetCap, k = 7, m = 0, r = 0;
};

inline void emit_cone(std::ostream& out, const BoundQuiver& q, const StabilityCone& c, const Options& o, Json extra = Json::object()) {
    if (o.format == "csv") {
        cone_csv(out, o.support ? c.support_cone : c.cone);
        return;
    }
    Json j = io::stability(q, c, o.support);
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    out << io::dump(j);
}

inline StabilityCone string_cone(const BoundQuiver& q, const StringWord& s, const std::string& method) {
    return method == "lift" ? lift_and_cut(q, s) : oracle_cone(q, s);
}

inline StabilityCone band_cone(const BoundQuiver& q, const BandWord& b, const std::string& method) {
    return method == "lift" ? lift_and_cut(q, b) : oracle_cone(q, b);
}

inline int dispatch(CLI::App& app, const Options& o, std::ostream& out) {
    if (app.got_subcommand("algebra-check")) {
        out << io::dump(io::diagnostics(check_special_biserial(load_algebra(o.file))));
        return 0;
    }
    if (app.got_subcommand("string-cone")) {
        const BoundQuiver q = load_algebra(o.algebra);
        const StringWord s = check_string(parse_walk(o.word_string, q), q);
        const StabilityCone c = string_cone(q, s, o.method);
        Json extra = Json::object();
        if (o.certify) {
            Json certs = Json::array();
            for (const auto& ray : c.support_cone.rays) certs.push_back(io::admissible(minimal_admissible_certify(q, s, ray)));
            extra["certificates"] = certs;
        }
        emit_cone(out, q, c, o, extra);
        return 0;
    }
    if (app.got_subcommand("band-cone")) {
        const BoundQuiver q = load_algebra(o.algebra);
        const BandWord b = check_band(parse_walk(o.word_band, q), q);
        const StabilityCone c = band_cone(q, b, o.method);
        Json extra = Json::object();
        if (o.cover) {
            const SimplicialCover cov = simplicial_cover(q, b);
            extra["cover"] = io::cover(cov, verify_cover(cov));
        }
        emit_cone(out, q, c, o, extra);
        return 0;
    }
    if (app.got_subcommand("faces")) {
        if (!o.word_string.empty() || !o.word_band.empty()) {
            const BoundQuiver q = load_algebra(o.algebra);
            const StabilityCone c = o.word_string.empty()
                                        ? oracle_cone(q, check_band(parse_walk(o.word_band, q), q))
                                        : oracle_cone(q, check_string(parse_walk(o.word_string, q), q));
            Json j = io::stability(q, c, true);
            j["lattice"] = io::lattice(face_lattice(c.support_cone));
            out << io::dump(j);
            return 0;
        }
        const Poset p = o.poset.empty() ? poset_from_quiver(load_algebra(o.algebra)) : load_poset(o.poset);
        out << io::dump(io::face_report(p, face_correspondence(p, o.cap), monotone_dual(p)));
        return 0;
    }
    if (app.got_subcommand("ccp")) {
        const Poset p = o.poset.empty() ? poset_from_quiver(load_algebra(o.algebra)) : load_poset(o.poset);
        Json parts = Json::array();
        for (const auto& part : enumerate_ccp(p, o.cap)) parts.push_back(io::partition(p, part));
        out << io::dump(Json{{"poset", io::poset(p)}, {"count", parts.size()}, {"partitions", parts}});
        return 0;
    }
    if (app.got_subcommand("converge")) {
        const BoundQuiver q = load_algebra(o.algebra);
        const BandWord b = check_band(parse_walk(o.word_band, q), q);
        const RatVector x = parse_rational_vector(o.point, q.num_vertices());
        std::vector<Rational> eps;
        if (o.eps.empty())
            eps = {Rational(1, 10), Rational(1, 100), Rational(1, 1000)};
        else
            for (const auto& t : tokens(o.eps)) eps.push_back(parse_rational(t));
        out << io::dump(io::family(q, approximate_family(q, b, x, eps, default_schedule(o.k))));
        return 0;
    }
    if (app.got_subcommand("cross-section")) {
        const BoundQuiver q = load_algebra(o.algebra);
        StabilityCone c;
        IntVector f;
        if (!o.word_band.empty()) {
            const BandWord b = check_band(parse_walk(o.word_band, q), q);
            c = o.r > 0 ? family_cone(q, b, o.m, o.r) : band_cone(q, b, o.method);
            if (o.slice.empty()) f = g_vector_oracle(q, b);
        } else {
            const StringWord s = check_string(parse_walk(o.word_string, q), q);
            c = string_cone(q, s, o.method);
            if (o.slice.empty()) {
                // default functional: the sum of the rays
                f = zero_vector(q.num_vertices());
                for (const auto& ray : convert(c.cone).rays) f = f + ray;
            }
        }
        if (!o.slice.empty()) f = parse_int_vector(o.slice, q.num_vertices());
        std::optional<std::vector<IntVector>> basis;
        const std::size_t n = o.support ? c.support.size() : q.num_vertices();
        if (!o.basis.empty()) basis = parse_basis(o.basis, n);
        const RationalCone& cone = o.support ? c.support_cone : c.cone;
        if (o.support) f = detail::restrict_vector(f, c.support);
        const CrossSection s = emit_cross_section(cone, f, basis, parse_rational(o.level));
        if (o.format == "csv")
            cross_section_csv(out, s);
        else
            out << io::dump(Json{{"module", Json{{"word", c.module.word}, {"kind", to_string(c.module.kind)}}},
                                 {"cross_section", io::cross_section(s)},
                                 {"level", io::rational(parse_rational(o.level))}});
        return 0;
    }
    throw UsageError("no command given");
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stability cones of string and band modules", "stabcone"};
    app.require_subcommand(1);
    Options o;
    const auto method = CLI::IsMember({"oracle", "lift"});
    const auto format = CLI::IsMember({"json", "csv"});

    auto* check = app.add_subcommand("algebra-check", "check the special biserial conditions");
    check->add_option("file", o.file, "algebra file")->required();

    auto* sc = app.add_subcommand("string-cone", "stability cone of a string module");
    sc->add_option("--algebra", o.algebra, "algebra file")->required();
    sc->add_option("--string", o.word_string, "walk")->required();
    sc->add_option("--method", o.method)->check(method);
    sc->add_flag("--support", o.support, "support coordinates only");
    sc->add_flag("--certify", o.certify, "admissible-sum certificate per ray");
    sc->add_option("--format", o.format)->check(format);

    auto* bc = app.add_subcommand("band-cone", "stability cone of a band module");
    bc->add_option("--algebra", o.algebra, "algebra file")->required();
    bc->add_option("--band", o.word_band, "cyclic walk")->required();
    bc->add_option("--method", o.method)->check(method);
    bc->add_flag("--support", o.support, "support coordinates only");
    bc->add_flag("--cover", o.cover, "simplicial cover through the g-vector");
    bc->add_option("--format", o.format)->check(format);

    auto* faces = app.add_subcommand("faces", "face lattice of an order cone or a module cone");
    auto* fp = faces->add_option("--poset", o.poset, "poset JSON file");
    auto* fa = faces->add_option("--algebra", o.algebra, "algebra file");
    fp->excludes(fa);
    faces->add_option("--string", o.word_string)->needs(fa);
    faces->add_option("--band", o.word_band)->needs(fa);
    faces->add_option("--cap", o.cap, "largest poset size");

    auto* ccp = app.add_subcommand("ccp", "connected compatible partitions");
    auto* cp = ccp->add_option("--poset", o.poset, "poset JSON file");
    auto* ca = ccp->add_option("--algebra", o.algebra, "acyclic algebra file");
    cp->excludes(ca);
    ccp->add_option("--cap", o.cap, "largest poset size");

    auto* conv = app.add_subcommand("converge", "approximate a band cone point by string cones");
    conv->add_option("--algebra", o.algebra)->required();
    conv->add_option("--band", o.word_band)->required();
    conv->add_option("--point", o.point, "coordinates, comma separated")->required();
    conv->add_option("--k", o.k, "schedule r = 2..2^k")->check(CLI::Range(1, 20));
    conv->add_option("--eps", o.eps, "thresholds, comma separated");

    auto* cs = app.add_subcommand("cross-section", "affine slice of a cone as a point table");
    cs->add_option("--algebra", o.algebra)->required();
    auto* csb = cs->add_option("--band", o.word_band);
    auto* css = cs->add_option("--string", o.word_string);
    csb->excludes(css);
    cs->add_option("--m", o.m, "prefix length of the family")->needs(csb);
    cs->add_option("--r", o.r, "band power of the family")->needs(csb);
    cs->add_option("--method", o.method)->check(method);
    cs->add_option("--slice", o.slice, "functional, comma separated");
    cs->add_option("--level", o.level, "value of the functional on the slice");
    cs->add_option("--basis", o.basis, "basis vectors separated by ';'");
    cs->add_flag("--support", o.support, "support coordinates only");
    cs->add_option("--format", o.format)->check(format);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (faces->parsed() && o.poset.empty() && o.algebra.empty()) throw UsageError("faces needs --poset or --algebra");
        if (ccp->parsed() && o.poset.empty() && o.algebra.empty()) throw UsageError("ccp needs --poset or --algebra");
        if (cs->parsed() && o.word_band.empty() && o.word_string.empty())
            throw UsageError("cross-section needs --band or --string");
        if (!o.word_string.empty() && !o.word_band.empty()) throw UsageError("give either --string or --band");
        if (cs->parsed() && o.r == 1) throw UsageError("--r must be at least 2");
        std::ostringstream buffer;
        const int status = dispatch(app, o, buffer);
        out << buffer.str();
        return status;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace stabcone::cli
