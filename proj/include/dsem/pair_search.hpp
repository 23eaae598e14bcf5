#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dsem/face_seq.hpp"
#include "dsem/pair_sets.hpp"

namespace dsem {

enum class Outcome { Contradiction, Consistent, Undecided };

std::string outcome_name(Outcome o);

// Link words of the smaller and the larger face-sequence of the pair, in F1/F2 letters.
using LinkCombo = std::pair<LinkSeq, LinkSeq>;

struct Verdict {
    Outcome outcome = Outcome::Undecided;
    // Largest seed distance of a vertex being completed on any branch.
    int depth = 0;
    std::set<LinkCombo> combos;
    std::int64_t nodes = 0;
};

inline constexpr int kDefaultRadius = 4;
inline constexpr std::int64_t kDefaultBudget = 10'000'000;

// Grows disk patches around a vertex of f1 in which every vertex is f1 or f2,
// every vertex within `radius` of the seed is closed, and all closed vertices of
// one class share one link word. Consistent lists the observed link-word pairs.
Verdict search_pair(const FaceSeq& f1, const FaceSeq& f2, int radius = kDefaultRadius,
                    std::int64_t node_budget = kDefaultBudget);

// A finished disk patch: faces as vertex lists in a common orientation, the class of
// each vertex (0 for the smaller face-sequence) and whether its fan is closed.
struct PatchWitness {
    std::vector<std::vector<int>> faces;
    std::vector<int> cls;
    std::vector<char> interior;
};

// First patch of the given radius whose link words are exactly `combo`, if any.
std::optional<PatchWitness> find_witness(const FaceSeq& f1, const FaceSeq& f2, const LinkCombo& combo, int radius,
                                         std::int64_t node_budget = kDefaultBudget);

struct PairResult {
    FacePair pair;
    Verdict verdict;
    bool listed_dsem = false;
    bool listed_excluded = false;
    // The verdict disagrees with a listing, or the pair is listed on both sides.
    bool conflict = false;
};

struct Theorem1Report {
    int radius = 0;
    std::vector<PairResult> results;  // candidate_pairs() order
    int refuted = 0, consistent = 0, undecided = 0;
    int total_combos = 0;
};

Theorem1Report reproduce_theorem1(int radius = kDefaultRadius, std::int64_t node_budget = kDefaultBudget,
                                  int threads = 1);

}  // namespace dsem
