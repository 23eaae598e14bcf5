#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dsem/face_seq.hpp"

namespace dsem {

enum class StripKind { Quad, Tri };

// A planar DSEM type: the face-sequence pair with F1 < F2 and the link word of each class.
struct DsemType {
    int index = 0;  // 1..22
    std::string tag;  // "T1".."T22"
    FaceSeq f1, f2;
    LinkSeq link_f1, link_f2;
    // Strip layout of the torus grid; empty for types without one.
    std::vector<StripKind> strip_layout;

    int strip_period() const { return static_cast<int>(strip_layout.size()); }
    const LinkSeq& link_of(const FaceSeq& f) const { return f == f1 ? link_f1 : link_f2; }
    bool has_torus_family() const { return !strip_layout.empty(); }
};

const std::vector<DsemType>& all_types();
// Accepts "T3" or "3"; throws ParseError for unknown tags.
const DsemType& dsem_type(std::string_view tag);
const DsemType& dsem_type(int index);

// Rewrites a link word given over letters A and B (e.g. "B^2.A.B^2.A") into
// the canonical F1/F2 word, where A names face-sequence a.
LinkSeq link_from_ab(std::string_view word, const FaceSeq& a, const FaceSeq& b);

}  // namespace dsem
