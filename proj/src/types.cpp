#include "dsem/types.hpp"

#include <cctype>

#include "dsem/errors.hpp"

namespace dsem {

namespace {

struct RawType {
    const char* a;
    const char* b;
    const char* link_a;
    const char* link_b;
    std::vector<StripKind> layout;
};

constexpr StripKind Q = StripKind::Quad;
constexpr StripKind T = StripKind::Tri;

// Link words over A (first face-sequence) and B (second).
const std::vector<RawType>& raw_types() {
    static const std::vector<RawType> raw = {
        {"3^6", "3^3.4^2", "B^2.A.B^2.A", "B^5.A^2", {Q, T, T}},
        {"3^6", "3^3.4^2", "B^2.A^4", "B^5.A^2", {Q, T, T, T}},
        {"3^3.4^2", "4^4", "A^4.B^3", "A^3.B.A^3.B", {Q, Q, T}},
        {"3^3.4^2", "4^4", "A^4.B^3", "A^3.B^5", {Q, Q, Q, T}},
        {"3^3.4^2", "3.4.6.4", "B^2.A.B^2.A^2", "B^5.A^4", {}},
        {"3^3.4^2", "3^2.4.3.4", "A.B^6", "A^2.B^3.A.B", {}},
        {"3^3.4^2", "3^2.4.3.4", "A.B^3.A.B^2", "A^3.B.A^2.B", {}},
        {"3^6", "3^2.6^2", "B^6", "A.B^9", {}},
        {"3^6", "3^2.4.12", "B^6", "A.B^13", {}},
        {"3^6", "3^2.4.3.4", "B^6", "A.B^6", {}},
        {"3^6", "3^4.6", "A^2.B^2.A.B", "B^5.A^3", {}},
        {"3^6", "3^4.6", "B^6", "B^5.A.B.A", {}},
        {"3^6", "3^4.6", "B^6", "B^7.A", {}},
        {"3.4.6.4", "3.4^2.6", "A^5.B^4", "A^2.B^7", {}},
        {"3.4.6.4", "3^2.4.3.4", "A^5.B^4", "A^2.B.A^2.B^2", {}},
        {"3.4.6.4", "4.6.12", "B^3.A^2.B^3.A", "B^11.A.B^2.A^2", {}},
        {"3.4.3.12", "3.12^2", "B^2.A.B^2.A.B^2.A.B^2.A^3", "A.B^2.A.B^2.A.B^2.A.B.A.B^2.A.B^2.A.B^2.A", {}},
        {"3^4.6", "3^2.6^2", "B^2.A.B.A.B^2.A", "B^2.A^3.B^2.A.B.A", {}},
        {"3^4.6", "3.6.3.6", "A^4.B.A^2.B", "A^4.B.A^4.B", {}},
        {"3^4.6", "3.6.3.6", "A^7.B", "A^10", {}},
        {"3.6.3.6", "3^2.6^2", "B^4.A.B^4.A", "B^2.A.B.A.B^2.A.B.A", {}},
        {"3.4^2.6", "3.6.3.6", "A^5.B.A^2.B", "A^4.B.A^4.B", {}},
    };
    return raw;
}

}  // namespace

LinkSeq link_from_ab(std::string_view word, const FaceSeq& a, const FaceSeq& b) {
    const bool a_first = a < b;
    std::string text;
    for (char c : word) {
        if (c == 'A') text += a_first ? "F1" : "F2";
        else if (c == 'B') text += a_first ? "F2" : "F1";
        else text += c;
    }
    return LinkSeq::parse(text);
}

const std::vector<DsemType>& all_types() {
    static const std::vector<DsemType> types = [] {
        std::vector<DsemType> out;
        int idx = 1;
        for (const auto& r : raw_types()) {
            DsemType t;
            t.index = idx;
            t.tag = "T" + std::to_string(idx);
            FaceSeq a = FaceSeq::parse(r.a), b = FaceSeq::parse(r.b);
            LinkSeq la = link_from_ab(r.link_a, a, b), lb = link_from_ab(r.link_b, a, b);
            if (a < b) {
                t.f1 = a, t.f2 = b, t.link_f1 = la, t.link_f2 = lb;
            } else {
                t.f1 = b, t.f2 = a, t.link_f1 = lb, t.link_f2 = la;
            }
            t.strip_layout = r.layout;
            out.push_back(std::move(t));
            ++idx;
        }
        return out;
    }();
    return types;
}

const DsemType& dsem_type(int index) {
    if (index < 1 || index > static_cast<int>(all_types().size()))
        throw Error(ErrorCode::ParseError, "unknown type index " + std::to_string(index));
    return all_types()[index - 1];
}

const DsemType& dsem_type(std::string_view tag) {
    if (!tag.empty() && (tag.front() == 'T' || tag.front() == 't')) tag.remove_prefix(1);
    int idx = 0;
    if (tag.empty()) throw Error(ErrorCode::ParseError, "empty type tag");
    for (char c : tag) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorCode::ParseError, "bad type tag");
        idx = idx * 10 + (c - '0');
        if (idx > 1000) throw Error(ErrorCode::ParseError, "bad type tag");
    }
    return dsem_type(idx);
}

}  // namespace dsem
