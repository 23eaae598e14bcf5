// Regenerates data/catalog/T1..T21.json from pair-search witness patches: embeds a
// large witness with regular unit polygons, finds two independent translations that
// preserve it, and cuts out a fundamental domain. T22 is built by build_t22 instead.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsem/catalog.hpp"
#include "dsem/errors.hpp"
#include "dsem/pair_search.hpp"
#include "dsem/pair_sets.hpp"
#include "dsem/types.hpp"

using namespace dsem;

namespace {

constexpr double kTol = 1e-6;

struct Key {
    long long x, y;
    auto operator<=>(const Key&) const = default;
};

Key key_of(const Point& p) { return {std::llround(p[0] * 1e4), std::llround(p[1] * 1e4)}; }

struct Embedded {
    std::vector<Point> pos;
    std::vector<std::vector<int>> faces;
    std::vector<int> cls;
    std::vector<char> interior;
    std::map<Key, int> at;

    std::optional<int> find(const Point& p) const {
        auto it = at.find(key_of(p));
        if (it == at.end()) return std::nullopt;
        return it->second;
    }
};

// Places each face as a regular unit polygon to the left of its directed edges.
std::optional<Embedded> embed(const PatchWitness& w, bool reverse) {
    Embedded e;
    e.faces = w.faces;
    if (reverse)
        for (auto& f : e.faces) std::reverse(f.begin(), f.end());
    e.cls = w.cls;
    e.interior = w.interior;
    const int n = static_cast<int>(w.cls.size());
    std::vector<char> placed(n, 0);
    e.pos.assign(n, {0, 0});
    std::map<std::pair<int, int>, int> edge_face;
    for (int fi = 0; fi < static_cast<int>(e.faces.size()); ++fi) {
        const auto& f = e.faces[fi];
        for (std::size_t i = 0; i < f.size(); ++i) edge_face[{f[i], f[(i + 1) % f.size()]}] = fi;
    }
    std::vector<char> done(e.faces.size(), 0);
    // Lay face fi given that its edge starting at index i0 is already placed.
    auto lay = [&](int fi, int i0) {
        const auto& f = e.faces[fi];
        const int p = static_cast<int>(f.size());
        const Point a = e.pos[f[i0]], b = e.pos[f[(i0 + 1) % p]];
        double dir = std::atan2(b[1] - a[1], b[0] - a[0]);
        Point cur = b;
        for (int t = 1; t < p; ++t) {
            dir += 2 * std::numbers::pi / p;
            const int v = f[(i0 + t + 1) % p];
            const Point nxt{cur[0] + std::cos(dir), cur[1] + std::sin(dir)};
            if (placed[v]) {
                if (std::hypot(e.pos[v][0] - nxt[0], e.pos[v][1] - nxt[1]) > kTol) return false;
            } else {
                e.pos[v] = nxt;
                placed[v] = 1;
            }
            cur = nxt;
        }
        return true;
    };
    const auto& f0 = e.faces[0];
    e.pos[f0[0]] = {0, 0};
    e.pos[f0[1]] = {1, 0};
    placed[f0[0]] = placed[f0[1]] = 1;
    if (!lay(0, 0)) return std::nullopt;
    done[0] = 1;
    std::deque<int> q{0};
    while (!q.empty()) {
        const int fi = q.front();
        q.pop_front();
        const auto& f = e.faces[fi];
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto it = edge_face.find({f[(i + 1) % f.size()], f[i]});
            if (it == edge_face.end() || done[it->second]) continue;
            const auto& g = e.faces[it->second];
            const int j = static_cast<int>(std::find(g.begin(), g.end(), f[(i + 1) % f.size()]) - g.begin());
            if (!lay(it->second, j)) return std::nullopt;
            done[it->second] = 1;
            q.push_back(it->second);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!placed[v]) return std::nullopt;
        if (!e.at.emplace(key_of(e.pos[v]), v).second) return std::nullopt;
    }
    return e;
}

// t preserves the patch within `window` of the seed: classes match, every face
// reaching an interior vertex after translation is present, and the vertices near
// the seed all have images. Witnesses of types with free choices need not be
// periodic far from the seed, so the window can shrink.
bool preserves(const Embedded& e, const std::set<std::vector<int>>& face_set, const Point& t, int seed,
               double window) {
    auto inside = [&](int v) {
        return std::hypot(e.pos[v][0] - e.pos[seed][0], e.pos[v][1] - e.pos[seed][1]) < window;
    };
    for (int v = 0; v < static_cast<int>(e.pos.size()); ++v) {
        if (!inside(v)) continue;
        auto u = e.find({e.pos[v][0] + t[0], e.pos[v][1] + t[1]});
        const bool near = std::hypot(e.pos[v][0] - e.pos[seed][0], e.pos[v][1] - e.pos[seed][1]) < 2.5;
        if (!u && near) return false;
        if (u && e.cls[*u] != e.cls[v] && e.cls[*u] >= 0 && e.cls[v] >= 0) return false;
    }
    for (const auto& f : e.faces) {
        if (!std::all_of(f.begin(), f.end(), inside)) continue;
        std::vector<int> img;
        bool reaches_interior = false;
        for (int v : f) {
            auto u = e.find({e.pos[v][0] + t[0], e.pos[v][1] + t[1]});
            if (!u) break;
            img.push_back(*u);
            reaches_interior = reaches_interior || e.interior[*u];
        }
        if (img.size() != f.size() || !reaches_interior) continue;
        std::sort(img.begin(), img.end());
        if (!face_set.count(img)) return false;
    }
    return true;
}

double cross(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }

std::optional<TilingSpec> domain(const Embedded& e, const DsemType& type, double window, std::string& why) {
    std::set<std::vector<int>> face_set;
    for (auto f : e.faces) {
        std::sort(f.begin(), f.end());
        face_set.insert(f);
    }
    // Candidate translations: seed to other vertices of its class, shortest first.
    const int seed = e.faces[0][0];
    std::vector<std::pair<double, Point>> cand;
    for (int v = 0; v < static_cast<int>(e.pos.size()); ++v) {
        if (v == seed || e.cls[v] != e.cls[seed]) continue;
        const Point t{e.pos[v][0] - e.pos[seed][0], e.pos[v][1] - e.pos[seed][1]};
        cand.push_back({std::hypot(t[0], t[1]), t});
    }
    std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.first < b.first - kTol || (std::abs(a.first - b.first) <= kTol && a.second < b.second); });
    std::optional<Point> t1, t2;
    for (const auto& [len, t] : cand) {
        if (!preserves(e, face_set, t, seed, window)) continue;
        if (!t1) t1 = t;
        else if (std::abs(cross(*t1, t)) > kTol) {
            t2 = t;
            break;
        }
    }
    if (!t1 || !t2) {
        why = "no two independent translations found";
        return std::nullopt;
    }
    if (cross(*t1, *t2) < 0) *t2 = {-(*t2)[0], -(*t2)[1]};
    const double det = cross(*t1, *t2);
    // Cell centred on the seed, nudged off any vertex or centroid.
    const Point origin{e.pos[seed][0] - ((*t1)[0] + (*t2)[0]) / 2 - 1e-3 * std::numbers::sqrt2,
                       e.pos[seed][1] - ((*t1)[1] + (*t2)[1]) / 2 - 1e-3 * std::numbers::pi};
    auto lattice = [&](const Point& p) {
        const Point d{p[0] - origin[0], p[1] - origin[1]};
        return std::pair(cross(d, *t2) / det, cross(*t1, d) / det);
    };

    TilingSpec spec;
    spec.tag = type.tag;
    spec.pair = ordered_pair(type.f1, type.f2);
    spec.links = {{type.f1, type.link_f1}, {type.f2, type.link_f2}};
    spec.translations = {*t1, *t2};
    std::map<int, int> rep;  // patch vertex inside the unit cell -> domain index
    for (int v = 0; v < static_cast<int>(e.pos.size()); ++v) {
        const auto [a, b] = lattice(e.pos[v]);
        if (a >= 0 && a < 1 && b >= 0 && b < 1) {
            rep[v] = static_cast<int>(spec.vertices.size());
            spec.vertices.push_back({e.pos[v][0] - e.pos[seed][0], e.pos[v][1] - e.pos[seed][1]});
        }
    }
    auto ref_of = [&](int v) -> std::optional<TilingSpec::Ref> {
        const auto [a, b] = lattice(e.pos[v]);
        const int fa = static_cast<int>(std::floor(a)), fb = static_cast<int>(std::floor(b));
        const Point back{e.pos[v][0] - fa * (*t1)[0] - fb * (*t2)[0], e.pos[v][1] - fa * (*t1)[1] - fb * (*t2)[1]};
        auto u = e.find(back);
        if (!u || !rep.count(*u)) return std::nullopt;
        return TilingSpec::Ref{rep[*u], fa, fb};
    };
    for (const auto& f : e.faces) {
        Point c{0, 0};
        for (int v : f) c = {c[0] + e.pos[v][0] / f.size(), c[1] + e.pos[v][1] / f.size()};
        const auto [a, b] = lattice(c);
        if (!(a >= 0 && a < 1 && b >= 0 && b < 1)) continue;
        std::vector<TilingSpec::Ref> refs;
        for (int v : f) {
            auto r = ref_of(v);
            if (!r) {
                why = "unit cell not covered by the witness (t1 = " + std::to_string(std::hypot((*t1)[0], (*t1)[1])) +
                      ", t2 = " + std::to_string(std::hypot((*t2)[0], (*t2)[1])) + ")";
                return std::nullopt;
            }
            refs.push_back(*r);
        }
        spec.faces.push_back(std::move(refs));
    }
    // Euler characteristic of the torus quotient must vanish.
    std::size_t edges = 0;
    for (const auto& f : spec.faces) edges += f.size();
    if (edges % 2 != 0 || spec.vertices.size() + spec.faces.size() != edges / 2) {
        why = "quotient is not a torus map";
        return std::nullopt;
    }
    spec.notes = "Fundamental domain of a periodic " + type.f1.str() + " / " + type.f2.str() +
                 " tiling with regular unit polygons. Coordinates are decimal approximations; faces refer to "
                 "vertex (index, a, b) = vertices[index] + a*t1 + b*t2.";
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regenerate the periodic tiling catalog"};
    std::string out_dir = catalog_dir();
    int radius = 8;
    std::vector<std::string> only;
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--radius", radius, "witness radius");
    app.add_option("types", only, "type tags to regenerate (default T1..T21)");
    CLI11_PARSE(app, argc, argv);

    int failures = 0;
    for (const auto& type : all_types()) {
        if (type.index == 22) continue;
        if (!only.empty() && std::find(only.begin(), only.end(), type.tag) == only.end()) continue;
        const FacePair pair = ordered_pair(type.f1, type.f2);
        const LinkCombo combo{type.link_of(pair.first), type.link_of(pair.second)};
        std::string why;
        std::optional<TilingSpec> spec;
        auto w = find_witness(pair.first, pair.second, combo, radius, 50'000'000);
        if (!w) why = "no witness patch";
        for (bool reverse : {false, true}) {
            if (!w || spec) break;
            auto e = embed(*w, reverse);
            if (!e) {
                why = "witness does not embed with regular polygons";
                continue;
            }
            for (double window : {1e9, 8.0, 6.0, 5.0}) {
                spec = domain(*e, type, window, why);
                if (!spec) continue;
                if (const auto rep = verify_spec(*spec); rep.pass) break;
                else why = "generated spec fails verification: " + rep.problems.front();
                spec.reset();
            }
        }
        if (!spec) {
            std::fprintf(stderr, "%s: %s\n", type.tag.c_str(), why.c_str());
            ++failures;
            continue;
        }
        save_spec(*spec, out_dir + "/" + type.tag + ".json");
        std::printf("%s: %zu vertices, %zu faces\n", type.tag.c_str(), spec->vertices.size(), spec->faces.size());
    }
    return failures ? 1 : 0;
}
