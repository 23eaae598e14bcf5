#pragma once

#include <utility>
#include <vector>

#include "dsem/face_seq.hpp"

namespace dsem {

using FacePair = std::pair<FaceSeq, FaceSeq>;

// Orders a pair so that first < second.
FacePair ordered_pair(const FaceSeq& a, const FaceSeq& b);

// The 16 pairs that carry planar DSEMs.
const std::vector<FacePair>& dsem_pairs();
// The 53 listed pairs for which no DSEM exists (one of them is also in dsem_pairs()).
const std::vector<FacePair>& excluded_pairs();

}  // namespace dsem
