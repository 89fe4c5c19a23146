#pragma once

// JSON forms of the library's results. Object keys come out sorted; vectors hold
// integers only, rationals travel as numerators over a common denominator.

#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cone.hpp"
#include "cross_section.hpp"
#include "poset.hpp"
#include "quiver.hpp"
#include "stability.hpp"

namespace stabcone {

using Json = nlohmann::json;

namespace io {

// Integers outside the 64-bit range are written as decimal strings.
inline Json integer(const Integer& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return Json(x.convert_to<long long>());
    return Json(x.str());
}

inline Integer read_integer(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw DomainError("expected an integer");
}

inline Json vector(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(integer(x));
    return a;
}

inline Json vectors(const std::vector<IntVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(vector(v));
    return a;
}

inline std::vector<IntVector> read_vectors(const Json& j, std::size_t n) {
    if (!j.is_array()) throw DomainError("expected an array of vectors");
    std::vector<IntVector> out;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n) throw DomainError("vector of the wrong length");
        IntVector v;
        for (const auto& x : row) v.push_back(read_integer(x));
        out.push_back(std::move(v));
    }
    return out;
}

inline std::string rational(const Rational& r) {
    std::ostringstream s;
    s << numerator(r);
    if (denominator(r) != 1) s << "/" << denominator(r);
    return s.str();
}

inline Json rational_vector(const RatVector& v) {
    Integer den = 1;
    for (const auto& x : v) den = boost::multiprecision::lcm(den, denominator(x));
    Json nums = Json::array();
    for (const auto& x : v) nums.push_back(integer(numerator(x) * (den / denominator(x))));
    return Json{{"numerators", nums}, {"denominator", integer(den)}};
}

inline Json cone(const RationalCone& c) {
    const RationalCone s = convert(c);
    return Json{{"ambient_dim", s.ambient_dim},
                {"equalities", vectors(s.equalities)},
                {"inequalities", vectors(s.inequalities)},
                {"rays", vectors(s.rays)},
                {"lineality", vectors(s.lineality)}};
}

inline RationalCone read_cone(const Json& j) {
    for (const char* key : {"ambient_dim", "equalities", "inequalities", "rays", "lineality"})
        if (!j.contains(key)) throw DomainError(std::string("cone is missing '") + key + "'");
    const auto n = j.at("ambient_dim").get<std::size_t>();
    RationalCone c = RationalCone::from_generators(n, read_vectors(j.at("rays"), n), read_vectors(j.at("lineality"), n));
    const RationalCone h = RationalCone::from_halfspaces(n, read_vectors(j.at("equalities"), n), read_vectors(j.at("inequalities"), n));
    const RationalCone from_rays = convert(c);
    if (!(from_rays == convert(h))) throw DomainError("cone representations disagree");
    return from_rays;
}

inline Json names(const BoundQuiver& q, const std::vector<std::size_t>& vs) {
    Json a = Json::array();
    for (auto v : vs) a.push_back(q.vertex_name(v));
    return a;
}

inline Json diagnostics(const Diagnostics& d) {
    Json v = Json::array();
    for (const auto& x : d.violations) v.push_back(Json{{"rule", to_string(x.rule)}, {"witness", x.witness}});
    return Json{{"passed", d.passed}, {"violations", v}};
}

inline Json stability(const BoundQuiver& q, const StabilityCone& s, bool support_only = false) {
    Json dim = Json::array();
    for (auto x : s.dimension) dim.push_back(x);
    Json j{{"module", Json{{"word", s.module.word}, {"kind", to_string(s.module.kind)}}},
           {"dimension", dim},
           {"support", names(q, s.support)},
           {"support_cone", cone(s.support_cone)}};
    if (!support_only) j["cone"] = cone(s.cone);
    return j;
}

inline Json admissible(const AdmissibleSum& a) {
    Json coeffs = Json::array();
    for (const auto& c : a.coefficients) coeffs.push_back(rational(c));
    return Json{{"ray", vector(a.ray)},
                {"lifted", vector(a.lifted)},
                {"letters", a.letters},
                {"coefficients", coeffs},
                {"minimal", a.minimal}};
}

inline Json lattice(const FaceLattice& l) {
    Json faces = Json::array();
    std::vector<std::size_t> f;
    for (const auto& face : l.faces) {
        faces.push_back(Json{{"dim", face.dim}, {"ray_indices", face.ray_indices}});
        if (f.size() <= face.dim) f.resize(face.dim + 1, 0);
        ++f[face.dim];
    }
    return Json{{"faces", faces}, {"f_vector", f}, {"simplicial", l.simplicial}};
}

inline Json cover(const SimplicialCover& c, const CoverCheck& check) {
    Json pieces = Json::array();
    for (const auto& p : c.pieces)
        pieces.push_back(Json{{"omitted", Json::array({p.omitted.first, p.omitted.second})}, {"piece", cone(p.piece)}});
    return Json{{"lifted", c.lifted},
                {"band_cone", cone(c.band_cone)},
                {"g", vector(c.g)},
                {"pieces", pieces},
                {"check", Json{{"pieces_inside", check.pieces_inside},
                               {"g_in_every_piece", check.g_in_every_piece},
                               {"hull_equal", check.hull_equal},
                               {"samples", check.samples},
                               {"uncovered", check.uncovered}}}};
}

inline Json family(const BoundQuiver& q, const ApproxFamily& f) {
    Json steps = Json::array();
    for (const auto& st : f.steps)
        steps.push_back(Json{{"r", st.r},
                             {"rays", vectors(st.cone.support_cone.rays)},
                             {"contains_target", st.contains_target},
                             {"distance", st.distance}});
    Json wit = Json::array();
    for (const auto& w : f.witnesses) wit.push_back(Json{{"eps", rational(w.eps)}, {"r", w.r ? Json(*w.r) : Json(nullptr)}});
    return Json{{"rotation", format_walk(q, f.rotation.word())},
                {"prefix_length", f.prefix_length},
                {"omitted", Json::array({f.omitted.first, f.omitted.second})},
                {"target", rational_vector(f.target)},
                {"lifted", f.lifted},
                {"steps", steps},
                {"witnesses", wit}};
}

inline Json poset(const Poset& p) {
    Json cover = Json::array();
    for (auto [x, y] : p.cover()) cover.push_back(Json::array({p.elements()[x], p.elements()[y]}));
    return Json{{"elements", p.elements()}, {"cover", cover}};
}

inline Poset read_poset(const Json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("cover")) throw DomainError("poset needs 'elements' and 'cover'");
    std::vector<std::string> elements;
    for (const auto& e : j.at("elements")) {
        if (!e.is_string()) throw DomainError("poset elements must be strings");
        elements.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::size_t, std::size_t>> cover;
    for (const auto& c : j.at("cover")) {
        if (!c.is_array() || c.size() != 2) throw DomainError("cover entries are [lower, upper] pairs");
        auto find = [&](const Json& x) {
            const auto it = std::find(elements.begin(), elements.end(), x.get<std::string>());
            if (it == elements.end()) throw DomainError("cover relation refers to an unknown element");
            return static_cast<std::size_t>(it - elements.begin());
        };
        cover.push_back({find(c[0]), find(c[1])});
    }
    return Poset(std::move(elements), std::move(cover));
}

inline Json partition(const Poset& p, const Partition& part) {
    Json blocks = Json::array();
    for (const auto& b : part.blocks) {
        Json names = Json::array();
        for (auto x : b) names.push_back(p.elements()[x]);
        blocks.push_back(names);
    }
    Json order = Json::array();
    for (auto [a, b] : part.quotient_order) order.push_back(Json::array({a, b}));
    return Json{{"blocks", blocks}, {"quotient_order", order}};
}

inline Json face_report(const Poset& p, const FaceCorrespondence& r, const MonotoneDual& m) {
    Json table = Json::array();
    for (std::size_t i = 0; i < r.partition_list.size(); ++i) {
        Json row{{"partition", partition(p, r.partition_list[i])}};
        if (r.face_of[i]) {
            const auto& face = r.lattice.faces[*r.face_of[i]];
            row["face"] = Json{{"dim", face.dim}, {"ray_indices", face.ray_indices}};
        } else {
            row["face"] = nullptr;
        }
        table.push_back(row);
    }
    return Json{{"poset", poset(p)},
                {"cone", cone(order_cone(p))},
                {"counts", Json{{"faces", r.faces}, {"partitions", r.partitions}, {"rays", r.rays}, {"covers", r.covers}}},
                {"checks", Json{{"counts_match", r.counts_match},
                                {"bijective", r.bijective},
                                {"rays_match", r.rays_match},
                                {"refinement_matches", r.refinement_matches}}},
                {"monotone_dual", Json{{"equal", m.equal}, {"facets", m.facets}, {"dual", cone(m.dual)}}},
                {"table", table}};
}

inline Json cross_section(const CrossSection& s) {
    Json points = Json::array();
    for (const auto& p : s.points)
        points.push_back(Json{{"ray", vector(p.ray)}, {"point", rational_vector(p.point)}, {"coords", rational_vector(p.coords)}});
    return Json{{"functional", vector(s.functional)},
                {"basis", vectors(s.basis)},
                {"points", points},
                {"unbounded", vectors(s.unbounded)}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace io

} // namespace stabcone
