#include <doctest.h>

#include "dsem/catalog.hpp"
#include "dsem/comb_map.hpp"
#include "dsem/errors.hpp"
#include "dsem/pair_search.hpp"
#include "dsem/pair_sets.hpp"
#include "dsem/torus.hpp"

using namespace dsem;

namespace {

FaceSeq fs(const char* s) { return FaceSeq::parse(s); }

// Oracle: the link words of a built torus map, read vertex by vertex.
LinkCombo torus_combo(const TorusParams& p) {
    CombMap m = build_torus_map(p);
    TwoClassLabeling lab = label_two_classes(m);
    auto class_of = [&](int v) { return lab.letter[v]; };
    std::set<LinkSeq> first, second;
    for (int v = 0; v < m.vertex_count(); ++v)
        (face_sequence(m, v) == lab.f1 ? first : second).insert(link_sequence(m, v, class_of));
    REQUIRE(first.size() == 1);
    REQUIRE(second.size() == 1);
    return {*first.begin(), *second.begin()};
}

// Oracle: the link words of the interior vertices of a strip-built patch.
LinkCombo patch_combo(const PlanarPatch& patch, const FacePair& pair) {
    std::set<LinkSeq> first, second;
    for (int v = 0; v < patch.vertex_count(); ++v) {
        if (!patch.interior(v)) continue;
        std::vector<Letter> word;
        bool known = true;
        for (int u : patch.link_vertices(v)) {
            if (!patch.interior(u)) known = false;
            else word.push_back(patch.face_sequence(u) == pair.first ? Letter::F1 : Letter::F2);
        }
        if (known) (patch.face_sequence(v) == pair.first ? first : second).insert(LinkSeq(word));
    }
    REQUIRE(first.size() == 1);
    REQUIRE(second.size() == 1);
    return {*first.begin(), *second.begin()};
}

}  // namespace

TEST_CASE("search_pair examples") {
    CHECK(search_pair(fs("3,3,3,4,4"), fs("3,3,6,6"), 3).outcome == Outcome::Contradiction);

    Verdict tri = search_pair(fs("3,3,3,3,3,3"), fs("3,3,3,4,4"), 3);
    CHECK(tri.outcome == Outcome::Consistent);
    CHECK(tri.combos == std::set<LinkCombo>{torus_combo({1, 3, 3, 0}), torus_combo({2, 3, 4, 0})});

    Verdict quad = search_pair(fs("3,3,3,4,4"), fs("4,4,4,4"), 3);
    CHECK(quad.outcome == Outcome::Consistent);
    CHECK(quad.combos == std::set<LinkCombo>{torus_combo({3, 3, 3, 0}), torus_combo({4, 3, 4, 0})});

    Verdict strips = search_pair(fs("3,4,4,6"), fs("3,6,3,6"));
    CHECK(strips.outcome == Outcome::Consistent);
    CHECK(strips.combos == std::set<LinkCombo>{patch_combo(build_t22({Strip::H1, Strip::H2}, 3), t22_pair())});
}

TEST_CASE("search_pair argument order does not matter") {
    Verdict a = search_pair(fs("3^3.4^2"), fs("3^6"), 3);
    Verdict b = search_pair(fs("3^6"), fs("3^3.4^2"), 3);
    CHECK(a.outcome == b.outcome);
    CHECK(a.combos == b.combos);
}

TEST_CASE("search_pair errors") {
    CHECK_THROWS_AS(search_pair(fs("3^6"), fs("4^4"), 0), Error);
    try {
        search_pair(fs("3^6"), fs("3^6"), 2);
        FAIL("expected NotTwoClasses");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotTwoClasses);
    }
    try {
        reproduce_theorem1(1);
        FAIL("expected InvalidRadius");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidRadius);
    }
}

TEST_CASE("search_pair is deterministic") {
    Verdict a = search_pair(fs("3^4.6"), fs("3.6.3.6"));
    Verdict b = search_pair(fs("3^4.6"), fs("3.6.3.6"));
    CHECK(a.outcome == b.outcome);
    CHECK(a.combos == b.combos);
    CHECK(a.nodes == b.nodes);
    CHECK(a.depth == b.depth);
}

TEST_CASE("a tiny budget gives Undecided") {
    CHECK(search_pair(fs("3^4.6"), fs("3.6.3.6"), 4, 10).outcome == Outcome::Undecided);
}

TEST_CASE("contradictions persist at larger radius") {
    const std::vector<FacePair> refuted = {
        {fs("3^3.4^2"), fs("3^2.6^2")},
        {fs("3^3.4^2"), fs("4.8^2")},
        {fs("4^4"), fs("3.4.6.4")},
    };
    for (const auto& [f1, f2] : refuted)
        for (int r = 2; r <= 4; ++r) {
            Verdict v = search_pair(f1, f2, r);
            if (v.outcome == Outcome::Contradiction)
                for (int s = r + 1; s <= 4; ++s) CHECK(search_pair(f1, f2, s).outcome == Outcome::Contradiction);
        }
}

TEST_CASE("every planar pair survives a small radius") {
    for (const auto& [f1, f2] : dsem_pairs()) {
        CAPTURE(f1.str());
        CAPTURE(f2.str());
        CHECK(search_pair(f1, f2, 2).outcome == Outcome::Consistent);
    }
}

TEST_CASE("find_witness returns a closed patch with the requested links") {
    const LinkCombo combo = torus_combo({1, 3, 3, 0});
    auto w = find_witness(fs("3^6"), fs("3^3.4^2"), combo, 3);
    REQUIRE(w.has_value());
    CHECK(w->cls.size() == w->interior.size());
    CHECK(w->interior[0]);
    CHECK(w->cls[0] == 0);
    int closed = 0;
    for (char c : w->interior) closed += c;
    CHECK(closed > 7);
    const LinkCombo bogus{combo.second, combo.first};
    CHECK_FALSE(find_witness(fs("3^6"), fs("3^3.4^2"), bogus, 2).has_value());
}
