#include <doctest.h>

#include <numeric>

#include "dsem/cycles.hpp"
#include "dsem/errors.hpp"

using namespace dsem;

namespace {

// Oracle: each circuit of j rows advances the column by k plus the per-strip
// offsets, so a diagonal cycle closes after i / gcd(i, advance) circuits.
int diagonal_oracle(const TorusParams& p, int offset_per_circuit) {
    int adv = ((offset_per_circuit + p.k) % p.i + p.i) % p.i;
    return p.j * (p.i / std::gcd(p.i, adv));
}

}  // namespace

TEST_CASE("trace_cycle examples") {
    TorusParams p{1, 4, 3, 1};
    CombMap m = build_torus_map(p);
    for (int v = 0; v < 12; ++v) CHECK(trace_cycle(m, p, v, PathKind::Horizontal, true) == 4);
    CHECK(trace_cycle(m, p, 0, PathKind::DiagA, true) == 12);
    TorusParams q{1, 3, 3, 0};
    CombMap mq = build_torus_map(q);
    int a = trace_cycle(mq, q, 0, PathKind::DiagA), b = trace_cycle(mq, q, 0, PathKind::DiagB);
    CHECK(std::min(a, b) == 3);
    CHECK_THROWS_AS(trace_cycle(m, p, 99, PathKind::DiagA), Error);
}

TEST_CASE("diagonal lengths agree with the circuit oracle") {
    for (int type = 1; type <= 4; ++type)
        for (int n = 9; n <= 36; ++n)
            for (const auto& p : enumerate_admissible(type, n)) {
                CombMap m = build_torus_map(p);
                CHECK(trace_cycle(m, p, 0, PathKind::DiagA) == diagonal_oracle(p, tri_strip_count(p)));
                CHECK(trace_cycle(m, p, 0, PathKind::DiagB) == diagonal_oracle(p, 0));
            }
}

TEST_CASE("local path rules hold on every build") {
    for (int type = 1; type <= 4; ++type)
        for (int n = 9; n <= 36; ++n)
            for (const auto& p : enumerate_admissible(type, n)) CHECK_NOTHROW(verify_path_rules(build_torus_map(p), p));
}

TEST_CASE("q4 examples") {
    CHECK(q4_length({1, 4, 3, 1}) == 4);
    CHECK(q4_length({1, 3, 3, 2}) == 5);
    CHECK(q4_length({4, 3, 4, 1}) == 5);
}

TEST_CASE("cycle_type examples") {
    CHECK(cycle_type({1, 6, 3, 2}) == CycleType{6, 9, 9, 5});
    CHECK(cycle_type({2, 3, 8, 0}) == CycleType{3, 8, 8, 8});
    CHECK(cycle_type({3, 6, 3, 3}) == CycleType{6, 6, 9, 5});
    CHECK(cycle_type({1, 4, 3, 1}).str() == "(4, {12,12}, 4)");
}

TEST_CASE("classify examples") {
    CHECK(classify(1, 18).size() == 6);
    auto t4 = classify(4, 24);
    CHECK(t4.size() == 5);
    bool found = false;
    for (const auto& c : t4)
        if (c.members == std::vector<TorusParams>{{4, 3, 8, 0}, {4, 3, 8, 1}}) found = c.type == CycleType{3, 8, 24, 8};
    CHECK(found);
    auto t1 = classify(1, 9);
    CHECK(t1.size() == 2);
    CHECK(t1[0].members.size() + t1[1].members.size() == 3);
}

TEST_CASE("cycle type is mirror invariant") {
    for (int type = 1; type <= 4; ++type)
        for (int n = 9; n <= 36; ++n)
            for (const auto& p : enumerate_admissible(type, n)) CHECK(cycle_type(p) == cycle_type(normalize_shift(p)));
}

TEST_CASE("non-contractibility") {
    TorusParams p{1, 4, 3, 1};
    CombMap m = build_torus_map(p);
    CHECK(is_noncontractible(m, trace_cycle_vertices(m, p, 0, PathKind::Horizontal)));
    CHECK(is_noncontractible(m, trace_cycle_vertices(m, p, 0, PathKind::DiagA)));
    CHECK(is_noncontractible(m, trace_cycle_vertices(m, p, 5, PathKind::DiagB)));
    // Quad face between rows 0 and 1.
    CHECK_FALSE(is_noncontractible(m, {torus_vertex(p, 0, 0), torus_vertex(p, 0, 1), torus_vertex(p, 1, 1),
                                       torus_vertex(p, 1, 0)}));
    CHECK_THROWS_AS(is_noncontractible(m, {0, 1}), Error);
    CHECK_THROWS_AS(is_noncontractible(m, {0, 2, 5}), Error);
}
