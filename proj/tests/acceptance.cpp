// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dsem/catalog.hpp"
#include "dsem/comb_map.hpp"
#include "dsem/curvature.hpp"
#include "dsem/cycles.hpp"
#include "dsem/errors.hpp"
#include "dsem/pair_search.hpp"
#include "dsem/pair_sets.hpp"
#include "dsem/tables.hpp"
#include "dsem/torus.hpp"
#include "dsem/types.hpp"

using namespace dsem;

namespace {

// Runtime limits in seconds.
constexpr double kCurvatureLimit = 1.0;
constexpr double kTablesLimit = 10.0;
constexpr double kOracleLimit = 600.0;
// Largest i*j in the torus sweeps.
constexpr int kSweepN = 36;

struct Result {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- 1

const std::vector<std::string> kFlatSequences = {
    "3^3.4^2", "3^6",    "3.4^2.6", "3^2.6^2", "3^4.6",  "3^2.4.3.4", "3.6.3.6",
    "4^4",     "3.4.6.4", "3^2.4.12", "4.8^2", "3.12^2", "6^3",      "5^2.10",
    "3.8.24",  "3.9.18", "3.10.15", "4.5.20", "3.7.42", "4.6.12",   "3.4.3.12",
};

Result criterion1() {
    Result o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto seqs = zero_curvature_face_sequences();
    const double secs = seconds_since(t0);
    std::ostringstream got;
    for (const auto& f : seqs) got << f.str() << '\n';
    std::ifstream in(std::string(DSEM_DATA_DIR) + "/golden/zero_curvature.txt");
    std::ostringstream golden;
    golden << in.rdbuf();
    if (got.str() != golden.str()) o.fail("output differs from the golden list");
    std::set<FaceSeq> want;
    for (const auto& s : kFlatSequences) want.insert(FaceSeq::parse(s));
    if (std::set<FaceSeq>(seqs.begin(), seqs.end()) != want || seqs.size() != 21) o.fail("not the 21 expected sequences");
    if (zero_curvature_face_sequences_direct() != seqs) o.fail("direct enumeration disagrees");
    if (secs >= kCurvatureLimit) o.fail("took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = std::to_string(seqs.size()) + " sequences in " + std::to_string(secs) + " s";
    return o;
}

// ---------------------------------------------------------------- 2

struct TableRow {
    int n;
    std::vector<std::string> members;  // "i,j,k"
    CycleType type;
};

// Expected classes per vertex count for T1..T4.
const std::map<int, std::vector<TableRow>> kTables = {
    {1,
     {{9, {"3,3,0", "3,3,1"}, {3, 3, 9, 3}},
      {9, {"3,3,2"}, {3, 9, 9, 5}},
      {12, {"4,3,0", "4,3,2"}, {4, 3, 6, 3}},
      {12, {"4,3,1"}, {4, 12, 12, 4}},
      {12, {"4,3,3"}, {4, 12, 12, 6}},
      {15, {"5,3,0", "5,3,3"}, {5, 3, 15, 3}},
      {15, {"5,3,1", "5,3,2"}, {5, 15, 15, 4}},
      {15, {"5,3,4"}, {5, 15, 15, 7}},
      {18, {"6,3,0", "6,3,4"}, {6, 3, 9, 3}},
      {18, {"6,3,1", "6,3,3"}, {6, 6, 18, 4}},
      {18, {"6,3,2"}, {6, 9, 9, 5}},
      {18, {"6,3,5"}, {6, 18, 18, 8}},
      {18, {"3,6,0", "3,6,2"}, {3, 6, 18, 6}},
      {18, {"3,6,1"}, {3, 18, 18, 7}}}},
    {2,
     {{12, {"3,4,0"}, {3, 4, 4, 4}},
      {12, {"3,4,1", "3,4,2"}, {3, 12, 12, 5}},
      {16, {"4,4,0", "4,4,1"}, {4, 4, 16, 4}},
      {16, {"4,4,2", "4,4,3"}, {4, 8, 16, 6}},
      {20, {"5,4,0", "5,4,2"}, {5, 4, 20, 4}},
      {20, {"5,4,3", "5,4,4"}, {5, 20, 20, 7}},
      {20, {"5,4,1"}, {5, 20, 20, 5}},
      {24, {"6,4,0", "6,4,3"}, {6, 4, 8, 4}},
      {24, {"6,4,1", "6,4,2"}, {6, 12, 24, 5}},
      {24, {"6,4,4", "6,4,5"}, {6, 12, 24, 8}},
      {24, {"3,8,0"}, {3, 8, 8, 8}},
      {24, {"3,8,1", "3,8,2"}, {3, 24, 24, 9}}}},
    {3,
     {{9, {"3,3,0", "3,3,2"}, {3, 3, 9, 3}},
      {9, {"3,3,1"}, {3, 9, 9, 4}},
      {12, {"4,3,0", "4,3,3"}, {4, 3, 12, 3}},
      {12, {"4,3,1", "4,3,2"}, {4, 6, 12, 4}},
      {15, {"5,3,0", "5,3,4"}, {5, 3, 15, 3}},
      {15, {"5,3,1", "5,3,3"}, {5, 15, 15, 4}},
      {15, {"5,3,2"}, {5, 15, 15, 5}},
      {18, {"6,3,0", "6,3,5"}, {6, 3, 18, 3}},
      {18, {"6,3,1", "6,3,4"}, {6, 9, 18, 4}},
      {18, {"6,3,2", "6,3,3"}, {6, 6, 9, 5}},
      {18, {"3,6,0", "3,6,1"}, {3, 6, 18, 6}},
      {18, {"3,6,2"}, {3, 18, 18, 8}}}},
    {4,
     {{12, {"3,4,0", "3,4,2"}, {3, 4, 12, 4}},
      {12, {"3,4,1"}, {3, 12, 12, 5}},
      {16, {"4,4,0", "4,4,3"}, {4, 4, 16, 4}},
      {16, {"4,4,1", "4,4,2"}, {4, 8, 16, 5}},
      {20, {"5,4,0", "5,4,4"}, {5, 4, 20, 4}},
      {20, {"5,4,1", "5,4,3"}, {5, 20, 20, 5}},
      {20, {"5,4,2"}, {5, 20, 20, 6}},
      {24, {"6,4,0", "6,4,5"}, {6, 4, 24, 4}},
      {24, {"6,4,1", "6,4,4"}, {6, 12, 24, 5}},
      {24, {"6,4,2", "6,4,3"}, {6, 8, 12, 6}},
      {24, {"3,8,0", "3,8,1"}, {3, 8, 24, 8}},
      {24, {"3,8,2"}, {3, 24, 24, 10}}}},
};
const std::map<int, int> kTableTotals = {{1, 14}, {2, 12}, {3, 12}, {4, 12}};

Result criterion2() {
    Result o;
    const auto t0 = std::chrono::steady_clock::now();
    std::string counts;
    for (const auto& [type, rows] : kTables) {
        using Class = std::pair<std::set<std::string>, CycleType>;
        std::map<int, std::set<Class>> want, got;
        for (const auto& r : rows) want[r.n].insert({{r.members.begin(), r.members.end()}, r.type});
        int total = 0;
        for (int n : table_sizes(type)) {
            for (const auto& c : classify(type, n)) {
                std::set<std::string> members;
                for (const auto& p : c.members)
                    members.insert(std::to_string(p.i) + "," + std::to_string(p.j) + "," + std::to_string(p.k));
                got[n].insert({members, c.type});
                ++total;
            }
        }
        if (got != want) o.fail("T" + std::to_string(type) + " classes differ from the table");
        if (total != kTableTotals.at(type) || table_total(type) != total)
            o.fail("T" + std::to_string(type) + " total " + std::to_string(total));
        counts += (counts.empty() ? "" : "/") + std::to_string(total);
    }
    const double secs = seconds_since(t0);
    if (secs >= kTablesLimit) o.fail("took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = "totals " + counts + " in " + std::to_string(secs) + " s";
    return o;
}

// ---------------------------------------------------------------- 3, 4, 5

std::vector<TorusParams> sweep_params(int type) {
    std::vector<TorusParams> out;
    for (int n = 1; n <= kSweepN; ++n)
        for (const auto& p : enumerate_admissible(type, n)) out.push_back(p);
    return out;
}

Result criterion3() {
    Result o;
    const auto t0 = std::chrono::steady_clock::now();
    long pairs = 0;
    for (int type = 1; type <= 4; ++type)
        for (int n = 1; n <= kSweepN; ++n) {
            const auto params = enumerate_admissible(type, n);
            std::vector<CombMap> maps;
            std::vector<CycleType> types;
            for (const auto& p : params) {
                maps.push_back(build_torus_map(p));
                types.push_back(cycle_type(maps.back(), p));
            }
            for (std::size_t a = 0; a < params.size(); ++a)
                for (std::size_t b = a + 1; b < params.size(); ++b) {
                    ++pairs;
                    if ((types[a] == types[b]) != is_isomorphic(maps[a], maps[b]))
                        o.fail(params[a].str() + " vs " + params[b].str());
                }
        }
    const double secs = seconds_since(t0);
    if (secs >= kOracleLimit) o.fail("took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = std::to_string(pairs) + " parameter pairs, 0 exceptions, " + std::to_string(secs) + " s";
    return o;
}

Result criterion4() {
    Result o;
    int built = 0;
    for (int type = 1; type <= 4; ++type) {
        const DsemType& t = dsem_type(type);
        for (const auto& p : sweep_params(type)) {
            CombMap m;
            try {
                m = build_torus_map(p);
            } catch (const Error& e) {
                o.fail(p.str() + ": " + e.what());
                continue;
            }
            ++built;
            if (euler_characteristic(m) != 0) o.fail(p.str() + ": chi != 0");
            std::map<FaceSeq, int> count;
            for (int v = 0; v < m.vertex_count(); ++v) ++count[face_sequence(m, v)];
            const int tri = count[FaceSeq::parse("3^6")], mixed = count[FaceSeq::parse("3^3.4^2")],
                      quad = count[FaceSeq::parse("4^4")];
            const bool ratio = type == 1   ? 2 * tri == mixed && quad == 0
                               : type == 2 ? tri == mixed && quad == 0
                               : type == 3 ? mixed == 2 * quad && tri == 0
                                           : mixed == quad && tri == 0;
            if (!ratio) o.fail(p.str() + ": class ratio");
            const auto lab = label_two_classes(m);
            for (int v = 0; v < m.vertex_count(); ++v) {
                const FaceSeq f = face_sequence(m, v);
                if (link_sequence(m, v, [&](int u) { return lab.letter[u]; }) != t.link_of(f))
                    o.fail(p.str() + ": link of vertex " + std::to_string(v));
            }
        }
    }
    if (o.pass) o.detail = std::to_string(built) + " maps with i*j <= " + std::to_string(kSweepN);
    return o;
}

Result criterion5() {
    Result o;
    int checked = 0;
    for (int type : {1, 3})
        for (const auto& p : sweep_params(type)) {
            const int c = type == 1 ? 2 * p.j / 3 : p.j / 3;
            const int closed = std::min(p.k + p.j, ((p.i - p.k - c) % p.i + p.i) % p.i + p.j);
            const int traced = q4_length(build_torus_map(p), p);
            ++checked;
            if (traced != closed)
                o.fail(p.str() + ": traced " + std::to_string(traced) + ", closed form " + std::to_string(closed));
        }
    if (o.pass) o.detail = std::to_string(checked) + " parameter triples, exact";
    return o;
}

// ---------------------------------------------------------------- 6

Result criterion6() {
    Result o;
    const std::vector<std::pair<const char*, const char*>> refuted = {
        {"3^3.4^2", "3^2.6^2"}, {"3^3.4^2", "4.8^2"}, {"3^3.4^2", "3^2.4.12"}, {"4^4", "3.4.6.4"}, {"3^2.4.3.4", "4^4"},
    };
    for (const auto& [a, b] : refuted)
        for (bool swap : {false, true}) {
            const FaceSeq f1 = FaceSeq::parse(swap ? b : a), f2 = FaceSeq::parse(swap ? a : b);
            const Verdict v = search_pair(f1, f2);
            if (v.outcome != Outcome::Contradiction)
                o.fail("(" + f1.str() + ", " + f2.str() + ") gave " + outcome_name(v.outcome));
        }
    int combos = 0, consistent = 0;
    for (const auto& [f1, f2] : dsem_pairs()) {
        const Verdict v = search_pair(f1, f2);
        if (v.outcome == Outcome::Consistent) {
            ++consistent;
            combos += static_cast<int>(v.combos.size());
        } else {
            o.fail("(" + f1.str() + ", " + f2.str() + ") gave " + outcome_name(v.outcome));
        }
    }
    if (consistent != 16) o.fail(std::to_string(consistent) + " of 16 planar pairs consistent");
    if (combos != 22) o.fail(std::to_string(combos) + " type combinations");
    if (o.pass) o.detail = "5 pairs refuted, 16 consistent, " + std::to_string(combos) + " type combinations";
    return o;
}

// ---------------------------------------------------------------- 7

Result criterion7() {
    Result o;
    const auto specs = load_catalog();
    if (specs.size() != 21) o.fail(std::to_string(specs.size()) + " specs shipped");
    int mutants = 0;
    for (const auto& spec : specs) {
        const auto rep = verify_spec(spec);
        if (!rep.pass) o.fail(spec.tag + ": " + rep.problems.front());
        for (std::size_t f = 0; f < spec.faces.size(); ++f) {
            TilingSpec mutant = spec;
            mutant.faces.erase(mutant.faces.begin() + static_cast<long>(f));
            ++mutants;
            if (verify_spec(mutant).pass) o.fail(spec.tag + " without face " + std::to_string(f) + " still passes");
        }
    }
    for (const StripWord& w : {StripWord{Strip::H1}, StripWord{Strip::H2}}) {
        const auto rep = verify_patch(build_t22(w, 3), t22_pair(), t22_links());
        if (!rep.pass) o.fail("T22 " + strip_word_str(w) + ": " + rep.problems.front());
    }
    if (o.pass) o.detail = "21 specs and T22 (H1), (H2) pass; " + std::to_string(mutants) + " single-face mutants fail";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<Result()>>> criteria = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
        {5, criterion5}, {6, criterion6}, {7, criterion7},
    };
    bool all = true;
    for (const auto& [id, run] : criteria) {
        Result o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("criterion %d: %s (%s)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
