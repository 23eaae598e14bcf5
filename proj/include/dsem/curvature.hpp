#pragma once

#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "dsem/face_seq.hpp"

namespace dsem {

// Compare against Rational values only: boost 1.74 operator==(rational, int) recurses under C++20.
using Rational = boost::rational<long long>;

// 1 - q/2 + sum 1/p over the q entries.
Rational curvature(const FaceSeq& f);

// Degree bound 3..6 and polygon bound 42 used by both enumerations.
inline constexpr int kMaxDegree = 6;
inline constexpr int kMaxPolygon = 42;

// All canonical face-sequences of zero curvature, sorted ascending.
// Enumerates multisets first, then their distinct cyclic arrangements.
std::vector<FaceSeq> zero_curvature_face_sequences();
// Independent enumeration over ordered sequences, canonicalized afterwards.
std::vector<FaceSeq> zero_curvature_face_sequences_direct();

// Unordered pairs (first < second) of zero-curvature sequences that share a
// cyclically adjacent pair of polygon sizes. A connected map with both classes
// has an edge joining the classes, and the two faces on that edge are adjacent
// in both face-sequences.
std::vector<std::pair<FaceSeq, FaceSeq>> candidate_pairs();

bool edge_compatible(const FaceSeq& a, const FaceSeq& b);

}  // namespace dsem
