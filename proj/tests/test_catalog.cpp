#include <doctest.h>

#include <cmath>

#include "dsem/catalog.hpp"
#include "dsem/curvature.hpp"
#include "dsem/errors.hpp"
#include "dsem/types.hpp"

using namespace dsem;

namespace {

const std::vector<TilingSpec>& catalog() {
    static const std::vector<TilingSpec> specs = load_catalog();
    return specs;
}

const TilingSpec& spec_of(const std::string& tag) {
    for (const auto& s : catalog())
        if (s.tag == tag) return s;
    throw std::runtime_error("missing spec " + tag);
}

// Independent geometric check: every face is a regular unit polygon.
bool regular_unit_faces(const PlanarPatch& patch) {
    const auto& c = patch.coords();
    for (const auto& f : patch.faces()) {
        const std::size_t p = f.size();
        double area = 0;
        for (std::size_t i = 0; i < p; ++i) {
            const auto& a = c[f[i]];
            const auto& b = c[f[(i + 1) % p]];
            if (std::abs(std::hypot(b[0] - a[0], b[1] - a[1]) - 1) > 1e-6) return false;
            area += a[0] * b[1] - a[1] * b[0];
        }
        const double regular = p / (4 * std::tan(M_PI / p));
        if (std::abs(area / 2 - regular) > 1e-6) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("expand_patch examples") {
    const PlanarPatch t3 = expand_patch(spec_of("T3"), 3, 3);
    CHECK(t3.interior_count() > 0);
    for (int v = 0; v < t3.vertex_count(); ++v)
        if (t3.interior(v)) {
            const FaceSeq f = t3.face_sequence(v);
            CHECK((f == FaceSeq::parse("3^3.4^2") || f == FaceSeq::parse("4^4")));
        }

    const FaceSeq tri = FaceSeq::parse("3^6"), mixed = FaceSeq::parse("3^3.4^2");
    const LinkSeq want = link_from_ab("A^2.B.A^2.B", mixed, tri);
    const PlanarPatch t1 = expand_patch(spec_of("T1"), 3, 3);
    // Boundary link vertices take the face-sequence of an interior copy.
    std::map<int, FaceSeq> orbit_seq;
    for (int v = 0; v < t1.vertex_count(); ++v)
        if (t1.interior(v)) orbit_seq[t1.orbit(v)] = t1.face_sequence(v);
    int checked = 0;
    for (int v = 0; v < t1.vertex_count(); ++v) {
        if (!t1.interior(v) || t1.face_sequence(v) != tri) continue;
        std::vector<Letter> word;
        for (int u : t1.link_vertices(v)) word.push_back(orbit_seq.at(t1.orbit(u)) == tri ? Letter::F1 : Letter::F2);
        CHECK(LinkSeq(word) == want);
        ++checked;
    }
    CHECK(checked > 0);

    try {
        expand_patch(spec_of("T5"), 1, 1);
        FAIL("expected BadSpec");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadSpec);
    }
}

TEST_CASE("the shipped catalog covers T1..T21 and matches the type table") {
    REQUIRE(catalog().size() == 21);
    for (int i = 1; i <= 21; ++i) {
        const auto& spec = catalog()[i - 1];
        const auto& type = dsem_type(i);
        CAPTURE(spec.tag);
        CHECK(spec.tag == type.tag);
        CHECK(spec.pair == ordered_pair(type.f1, type.f2));
        CHECK(spec.links.at(type.f1) == type.link_f1);
        CHECK(spec.links.at(type.f2) == type.link_f2);
        CHECK(curvature(type.f1) == Rational(0));
        CHECK(curvature(type.f2) == Rational(0));
    }
}

TEST_CASE("every shipped spec verifies") {
    for (const auto& spec : catalog()) {
        CAPTURE(spec.tag);
        const CatalogReport rep = verify_spec(spec);
        CHECK(rep.pass);
        for (const auto& p : rep.problems) MESSAGE(p);
        CHECK(rep.class_counts.size() == 2);
    }
    const CatalogReport t21 = verify_spec(spec_of("T21"));
    CHECK(t21.class_counts.count(FaceSeq::parse("3.6.3.6")));
    CHECK(t21.class_counts.count(FaceSeq::parse("3^2.6^2")));
}

TEST_CASE("shipped specs are tilings by regular unit polygons") {
    for (const auto& spec : catalog()) {
        CAPTURE(spec.tag);
        CHECK(regular_unit_faces(expand_patch(spec, 3, 3)));
    }
}

TEST_CASE("mutated specs fail verification") {
    for (const auto& spec : catalog()) {
        CAPTURE(spec.tag);
        for (std::size_t f = 0; f < spec.faces.size(); ++f) {
            TilingSpec dropped = spec;
            dropped.faces.erase(dropped.faces.begin() + static_cast<long>(f));
            CHECK_FALSE(verify_spec(dropped).pass);
        }
        TilingSpec shifted = spec;
        shifted.faces[0][0].a += 1;
        CHECK_FALSE(verify_spec(shifted).pass);
        TilingSpec relinked = spec;
        relinked.links.begin()->second = relinked.links.rbegin()->second;
        CHECK_FALSE(verify_spec(relinked).pass);
    }
}

TEST_CASE("spec JSON round trip and malformed input") {
    const TilingSpec& spec = spec_of("T7");
    const TilingSpec back = spec_from_json(spec_to_json(spec));
    CHECK(back.tag == spec.tag);
    CHECK(back.faces == spec.faces);
    CHECK(back.vertices == spec.vertices);
    CHECK(back.pair == spec.pair);
    CHECK(back.links == spec.links);

    nlohmann::json broken = spec_to_json(spec);
    broken.erase("faces");
    CHECK_THROWS_AS(spec_from_json(broken), Error);
    broken = spec_to_json(spec);
    broken["pair"] = {"3^6"};
    CHECK_THROWS_AS(spec_from_json(broken), Error);
    broken = spec_to_json(spec);
    broken["faces"][0][0] = "x";
    CHECK_THROWS_AS(spec_from_json(broken), Error);
}

TEST_CASE("planar patch rejects overlapping faces") {
    const std::vector<Point> c = {{0, 0}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS(PlanarPatch(c, {{0, 1, 2}, {0, 1, 2}}, {}), Error);
    CHECK_THROWS_AS(PlanarPatch(c, {{0, 1}}, {}), Error);
    CHECK_THROWS_AS(PlanarPatch(c, {{0, 1, 5}}, {}), Error);
    const PlanarPatch one(c, {{0, 1, 2}}, {});
    CHECK(one.interior_count() == 0);
    CHECK_THROWS_AS(one.face_sequence(0), Error);
}

TEST_CASE("strip family: single-letter words verify") {
    for (const StripWord& w : {StripWord{Strip::H1}, StripWord{Strip::H2}}) {
        CAPTURE(strip_word_str(w));
        const PlanarPatch patch = build_t22(w, 3);
        const CatalogReport rep = verify_patch(patch, t22_pair(), t22_links());
        CHECK(rep.pass);
        for (const auto& p : rep.problems) MESSAGE(p);
        CHECK(rep.class_counts.size() == 2);
        CHECK(regular_unit_faces(patch));
    }
    CHECK(t22_pair() == ordered_pair(FaceSeq::parse("3.4^2.6"), FaceSeq::parse("3.6.3.6")));
}

TEST_CASE("strip family: mixed words verify and are told apart by strip counts") {
    const PlanarPatch mixed = build_t22({Strip::H1, Strip::H2}, 3);
    const PlanarPatch plain = build_t22({Strip::H1, Strip::H1}, 3);
    CHECK(verify_patch(mixed, t22_pair(), t22_links()).pass);
    CHECK(verify_patch(plain, t22_pair(), t22_links()).pass);
    const auto pm = strip_profile(mixed), pp = strip_profile(plain);
    CHECK(pm.at(Strip::H1) == 3);
    CHECK(pm.at(Strip::H2) == 3);
    CHECK(pp.at(Strip::H1) == 6);
    CHECK(pp.at(Strip::H2) == 0);
    CHECK(pm != pp);
    const auto p2 = strip_profile(build_t22({Strip::H2}, 4));
    CHECK(p2.at(Strip::H1) == 0);
    CHECK(p2.at(Strip::H2) == 4);
}

TEST_CASE("strip words parse and reject garbage") {
    CHECK(parse_strip_word("H1,H2") == StripWord{Strip::H1, Strip::H2});
    CHECK(parse_strip_word("H2.H2 H1") == StripWord{Strip::H2, Strip::H2, Strip::H1});
    CHECK(parse_strip_word("h1h2") == StripWord{Strip::H1, Strip::H2});
    CHECK(strip_word_str({Strip::H1, Strip::H2}) == "H1,H2");
    for (const char* bad : {"", "H3", "H1,X", ","}) {
        try {
            parse_strip_word(bad);
            FAIL("expected BadWord");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadWord);
        }
    }
    CHECK_THROWS_AS(build_t22({Strip::H1}, 1), Error);
    CHECK_THROWS_AS(build_t22({}, 3), Error);
}

TEST_CASE("render_svg draws every face") {
    const PlanarPatch patch = expand_patch(spec_of("T5"), 2, 2);
    const std::string svg = render_svg(patch, spec_of("T5").pair);
    std::size_t polygons = 0;
    for (std::size_t at = svg.find("<polygon"); at != std::string::npos; at = svg.find("<polygon", at + 1)) ++polygons;
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(polygons == patch.faces().size());
}
