// Acceptance checks, one line per criterion. Usage: acceptance [N ...]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stabcone/poset.hpp"
#include "stabcone/representation.hpp"
#include "stabcone/stability.hpp"
#include "support.hpp"

using namespace stabcone;
namespace ts = testing_support;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

using Set = std::set<IntVector>;

StringWord str(const BoundQuiver& q, const std::string& w) { return check_string(parse_walk(w, q), q); }
BandWord band(const BoundQuiver& q, const std::string& w) { return check_band(parse_walk(w, q), q); }

std::string show(const IntVector& v) {
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << ")";
    return s.str();
}

std::string show(const Set& vs) {
    std::string s = "{";
    for (const auto& v : vs) s += (s.size() > 1 ? " " : "") + show(v);
    return s + "}";
}

IntVector e(std::size_t i) { return ts::e(4, i); }
IntVector ed(std::size_t i, std::size_t j) { return ts::ed(4, i, j); }

IntVector sum(std::initializer_list<IntVector> vs) {
    IntVector out = zero_vector(4);
    for (const auto& v : vs) out = out + v;
    return out;
}

// ---------------------------------------------------------------------------

Outcome diamond() {
    Outcome o;
    const auto q = parse_algebra(ts::kDiamond);
    const RationalCone c = thin_module_cone(q);
    const Set printed{ts::iv({1, -1, 0, 0}), ts::iv({1, 0, -1, 0}), ts::iv({0, 1, 0, -1}), ts::iv({0, 0, 1, -1})};
    o.require(ts::as_set(c.rays) == printed, "rays " + show(ts::as_set(c.rays)));
    o.require(c.lineality.empty(), "cone is pointed");
    o.require(c == ts::thin_module_oracle(q), "agrees with the submodule inequalities");
    return o;
}

Outcome cycle_string() {
    Outcome o;
    const auto q = parse_algebra(ts::kCyc);
    const StringWord s = str(q, "a b c a");
    const Set expected{ts::iv({1, -1, 0})};
    const auto oracle = oracle_cone(q, s);
    const auto lift = lift_and_cut(q, s);
    o.require(ts::as_set(oracle.support_cone.rays) == expected && oracle.support_cone.lineality.empty(),
              "oracle_cone " + show(ts::as_set(oracle.support_cone.rays)));
    o.require(ts::as_set(lift.support_cone.rays) == expected && lift.support_cone.lineality.empty(),
              "lift_and_cut " + show(ts::as_set(lift.support_cone.rays)));
    const AdmissibleSum cert = minimal_admissible_certify(q, s, ts::iv({1, -1, 0}));
    o.require(cert.lifted == ts::iv({1, -1, 0, 1, -1}), "certificate " + show(cert.lifted));
    o.require(cert.minimal, "certificate is minimal");
    o.note("certificate " + show(cert.lifted));
    return o;
}

// Printed families: band rotation, prefix length, the two fixed rays and the extra
// direction y, so that the moving generator is y / (r - 1) + (e1 - e3).
struct PrintedFamily {
    const char* band;
    std::size_t m;
    const char* string; // b w with r = 1
    IntVector a, b, y;
};

Outcome square_example() {
    Outcome o;
    const auto q = parse_algebra(ts::kSquare);
    const BandWord b = band(q, "a b g- d-");
    const IntVector g = ed(1, 3);
    std::size_t matched = 0, total = 0;

    auto compare = [&](const std::string& name, const Set& printed, const Set& computed, const IntVector& dim) {
        ++total;
        if (printed == computed) {
            ++matched;
            return;
        }
        std::string why;
        for (const auto& v : printed)
            if (dot(v, dim) != 0) why += " printed " + show(v) + " has <v, dim> = " + dot(v, dim).str() + ";";
        o.require(false, name + ": printed " + show(printed) + " computed " + show(computed) + ";" + why);
    };

    const auto band_cone = oracle_cone(q, b);
    const IntVector ones(4, Integer(1));
    compare("D(M(b,1,1))", {ed(1, 2), ed(2, 3), ed(4, 3), ed(1, 4)}, ts::as_set(band_cone.cone.rays), ones);

    const std::vector<PrintedFamily> families{
        {"g- d- a b", 0, "g- d- a b", ed(1, 4), ed(1, 2), sum({e(2), e(4), ts::iv({0, 0, -1, 0})})},
        {"g- d- a b", 1, "g- d- a b g-", ed(1, 2), ed(4, 3), sum({e(1), e(2), ts::iv({0, 0, -1, 0})})},
        {"a b g- d-", 0, "a b g- d-", ed(2, 3), ed(4, 3), ts::iv({1, -1, 0, -1})},
        {"d- a b g-", 1, "d- a b g- d-", ed(1, 4), ed(1, 2), ts::iv({1, -1, -1, 0})},
    };
    for (std::size_t i = 0; i < families.size(); ++i) {
        const auto& f = families[i];
        const std::string tag = std::to_string(i + 1);
        const StringWord w = str(q, f.string);
        const BandWord bi = band(q, f.band);
        const auto dim = dimension_vector(w).as_integers();
        if (format_walk(q, concat_power(q, bi, 1, f.m).word()) != f.string) o.require(false, "w" + tag + " = b" + tag + " prefix");

        compare("D(M(w" + tag + "))", {f.a, f.b, f.y}, ts::as_set(oracle_cone(q, w).cone.rays), dim);

        std::optional<Set> fixed;
        for (std::size_t r : {2, 3}) {
            const IntVector moving = primitive(f.y + Integer(static_cast<long long>(r - 1)) * g);
            const auto c = brw_cone(q, bi, f.m, r);
            const StringWord s = concat_power(q, bi, r, f.m);
            const auto lifted = lift_and_cut(q, s);
            o.require(relate(c.cone, lifted.cone) == Relation::equal, "family " + tag + " formula and lift agree at r=" + std::to_string(r));
            o.require(relate(c.cone, oracle_cone(q, s).cone) == Relation::equal,
                      "family " + tag + " formula and oracle agree at r=" + std::to_string(r));
            const Set computed = ts::as_set(c.cone.rays);
            compare("family " + tag + " r=" + std::to_string(r), {f.a, f.b, moving}, computed,
                    dimension_vector(s).as_integers());
            if (!fixed) {
                fixed = computed;
            } else {
                Set common;
                for (const auto& v : computed)
                    if (fixed->count(v)) common.insert(v);
                fixed = common;
            }
        }
        // limit: the rays kept for every r together with the band g-vector
        std::vector<IntVector> gens(fixed->begin(), fixed->end());
        gens.push_back(g_vector_oracle(q, b));
        const RationalCone limit = convert(RationalCone::from_generators(4, gens));
        compare("limit " + tag, {f.a, f.b, g}, ts::as_set(limit.rays), ones);
    }

    const std::vector<std::pair<const char*, Set>> exceptional{
        {"b g- d-", {ed(2, 3), ed(4, 3), ed(1, 4)}},
        {"g- d- a", {ed(1, 2), ed(1, 4), ed(4, 3)}},
        {"d- a b", {ed(2, 3), ed(1, 2), ed(1, 4)}},
        {"a b g-", {ed(1, 2), ed(2, 3), ed(4, 3)}},
    };
    for (std::size_t i = 0; i < exceptional.size(); ++i) {
        const StringWord w = str(q, exceptional[i].first);
        compare("D(M(w'" + std::to_string(i + 1) + "))", exceptional[i].second, ts::as_set(oracle_cone(q, w).cone.rays),
                dimension_vector(w).as_integers());
    }
    o.note(std::to_string(matched) + "/" + std::to_string(total) + " printed ray sets reproduced");
    return o;
}

Outcome sweep() {
    Outcome o;
    std::size_t strings = 0, bands = 0;
    for (const auto& src : ts::suite_sources()) {
        const auto q = parse_algebra(src);
        for (const auto& s : enumerate_strings(q, 6)) {
            ++strings;
            if (relate(lift_and_cut(q, s).cone, oracle_cone(q, s).cone) != Relation::equal)
                o.require(false, "string " + format_walk(q, s.word()) + " over\n" + serialize(q));
        }
        for (const auto& b : enumerate_bands(q, 6)) {
            ++bands;
            if (relate(lift_and_cut(q, b).cone, oracle_cone(q, b).cone) != Relation::equal)
                o.require(false, "band " + format_walk(q, b.word()) + " over\n" + serialize(q));
        }
    }
    o.note(std::to_string(strings) + " strings, " + std::to_string(bands) + " bands");
    o.require(strings > 0 && bands > 0, "sweep is not empty");
    return o;
}

BoundQuiver tree(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges, unsigned orientation) {
    std::string src = "vertices:";
    for (std::size_t i = 1; i <= n; ++i) src += " " + std::to_string(i);
    src += "\n";
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [u, v] = edges[k];
        if (orientation >> k & 1) std::swap(u, v);
        src += "arrow x" + std::to_string(k) + ": " + std::to_string(u) + " -> " + std::to_string(v) + "\n";
    }
    return parse_algebra(src);
}

Outcome simplicial_trees() {
    Outcome o;
    const std::vector<std::vector<std::pair<std::size_t, std::size_t>>> shapes{
        {{1, 2}, {2, 3}}, {{1, 2}, {2, 3}, {3, 4}}, {{1, 2}, {1, 3}, {1, 4}}};
    std::size_t count = 0;
    for (const auto& edges : shapes)
        for (unsigned orient = 0; orient < (1u << edges.size()); ++orient) {
            const auto q = tree(edges.back().second, edges, orient);
            const RationalCone c = thin_module_cone(q);
            ++count;
            o.require(c.rays.size() == q.num_arrows() && rank(c.rays) == q.num_arrows(), "independent rays for\n" + serialize(q));
            o.require(c == ts::thin_module_oracle(q), "agrees with the submodule inequalities for\n" + serialize(q));
        }
    o.note(std::to_string(count) + " oriented trees");
    return o;
}

Outcome order_polytopes() {
    Outcome o;
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& q : ts::connected_hasse_quivers(n)) {
            ++count;
            const Poset p = poset_from_quiver(q);
            const RationalCone c = thin_module_cone(q);
            const std::size_t faces = face_lattice(c).faces.size();
            const std::size_t parts = enumerate_ccp(p).size();
            o.require(faces == parts, "faces " + std::to_string(faces) + " vs partitions " + std::to_string(parts) + " for\n" + serialize(q));
            o.require(c.rays.size() == p.cover().size(), "rays vs covers for\n" + serialize(q));
            // x_target <= x_source for every arrow
            std::vector<IntVector> ineqs;
            for (const auto& a : q.arrows()) {
                IntVector row = zero_vector(n);
                row[a.target] += 1;
                row[a.source] -= 1;
                ineqs.push_back(row);
            }
            const RationalCone monotone = convert(RationalCone::from_halfspaces(n, {}, ineqs));
            o.require(relate(dual_cone(c), monotone) == Relation::equal, "dual is the monotone system for\n" + serialize(q));
        }
    o.note(std::to_string(count) + " posets");
    return o;
}

Outcome g_vectors() {
    Outcome o;
    const auto q = parse_algebra(ts::kSquare);
    const BandWord base = band(q, "a b g- d-");
    std::vector<BandWord> suite;
    for (std::size_t k = 0; k < 4; ++k) suite.push_back(rotate(q, base, k));
    const BandWord rev = check_band(reversed(q, base.word()), q);
    for (std::size_t k = 0; k < 4; ++k) suite.push_back(rotate(q, rev, k));
    std::size_t checks = 0;
    for (const auto& b : suite) {
        const std::string name = format_walk(q, b.word());
        const IntVector g = g_vector_oracle(q, b);
        o.require(band_g_vector(q, b) == g, "band g-vector of " + name);
        for (std::size_t m = 0; m < 4; ++m)
            for (std::size_t r = 0; r <= 3; ++r) {
                ++checks;
                if (g_vector(q, b, m, r) != g_vector_oracle(q, concat_power(q, b, r, m)))
                    o.require(false, name + " m=" + std::to_string(m) + " r=" + std::to_string(r));
            }
        const auto c = oracle_cone(q, b);
        o.require(c.cone.contains(g), "g in the band cone for " + name);
        IntVector s = zero_vector(4);
        for (const auto& ray : c.cone.rays) s = s + ray;
        o.require(s == Integer(2) * g, "rays sum to 2g for " + name + ": " + show(s));
    }
    o.note(std::to_string(checks) + " string g-vectors");
    return o;
}

// d(2r) <= d(r) and max d(r) r <= 2 min d(r) r
void check_rate(Outcome& o, const ApproxFamily& f, const std::string& tag) {
    double lo = 1e300, hi = 0;
    bool monotone = true;
    std::ostringstream table;
    table << std::setprecision(4);
    for (std::size_t k = 0; k < f.steps.size(); ++k) {
        const auto& st = f.steps[k];
        if (k > 0 && st.distance > f.steps[k - 1].distance + 1e-9) monotone = false;
        const double dr = st.distance * static_cast<double>(st.r);
        lo = std::min(lo, dr);
        hi = std::max(hi, dr);
        table << " " << st.r << ":" << st.distance;
    }
    o.require(monotone, tag + " distances decrease");
    o.require(hi <= 2 * lo + 1e-9, tag + " d(r) r within a factor 2");
    o.note(tag + " d(r)" + table.str());
}

Outcome convergence() {
    Outcome o;
    const auto q = parse_algebra(ts::kSquare);
    const BandWord b = band(q, "a b g- d-");
    const std::vector<Rational> eps{Rational(1, 10), Rational(1, 100)};
    const auto f = approximate_family(q, b, to_rational(ts::iv({2, -1, 0, -1})), eps);
    o.require(f.steps.size() == 7 && f.steps.front().r == 2 && f.steps.back().r == 128, "schedule 2..128");
    check_rate(o, f, "x=(2,-1,0,-1)");
    if (std::all_of(f.steps.begin(), f.steps.end(), [](const FamilyStep& s) { return s.contains_target; }))
        o.note("x lies in every member of the family " + format_walk(q, f.rotation.word()) + " m=" +
               std::to_string(f.prefix_length) + ", so the bound holds with d = 0");

    // supplementary: a point off the kept rays, not counted in the verdict
    Outcome extra;
    const auto g = approximate_family(q, b, to_rational(ts::iv({2, 1, -4, 1})), eps);
    check_rate(extra, g, "supplementary x=(2,1,-4,1)");
    for (const auto& n : extra.notes) o.note(n);
    o.note(std::string("supplementary check ") + (extra.pass ? "passed" : "FAILED"));
    return o;
}

Outcome band_stab() {
    Outcome o;
    const auto q = parse_algebra(ts::kSquare);
    const auto u = band_string_union(q, band(q, "a b g- d-"));
    o.require(u.pairs.size() == 6, "six removal pairs");
    o.require(u.all_pairs_equal, "every pair spans the band cone");
    for (const auto& r : u.removals) {
        o.require(!r.cone_equal, "removal of letter " + std::to_string(r.letter) + " falls short");
        o.require(r.cone_equal == r.poset_equal, "poset closure agrees for " + r.word);
    }
    o.require(u.removals_agree, "closure comparison agrees");
    return o;
}

struct Criterion {
    int id;
    double limit;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, 1, diamond},     {2, 1, cycle_string},     {3, 10, square_example},
        {4, 60, sweep},      {5, 5, simplicial_trees}, {6, 30, order_polytopes},
        {7, 10, g_vectors},  {8, 10, convergence},     {9, 5, band_stab},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    bool ok = true;
    for (const auto& c : all) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= c.limit) out.require(false, "time limit");
        ok &= out.pass;
        std::cout << "criterion " << c.id << ": " << (out.pass ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(3)
                  << secs << " s, limit " << std::setprecision(0) << c.limit << " s)\n";
        std::cout.unsetf(std::ios::floatfield);
        for (const auto& n : out.notes) std::cout << "    " << n << "\n";
    }
    return ok ? 0 : 1;
}
