#include "dsem/pair_sets.hpp"

namespace dsem {

namespace {

std::vector<FacePair> parse_pairs(const std::vector<std::pair<const char*, const char*>>& raw) {
    std::vector<FacePair> out;
    for (const auto& [a, b] : raw) out.push_back(ordered_pair(FaceSeq::parse(a), FaceSeq::parse(b)));
    return out;
}

}  // namespace

FacePair ordered_pair(const FaceSeq& a, const FaceSeq& b) { return a < b ? FacePair{a, b} : FacePair{b, a}; }

const std::vector<FacePair>& dsem_pairs() {
    static const std::vector<FacePair> pairs = parse_pairs({
        {"3^3.4^2", "3^6"}, {"3^3.4^2", "4^4"}, {"3^3.4^2", "3^2.4.3.4"}, {"3^3.4^2", "3.4.6.4"},
        {"3^6", "3^2.6^2"}, {"3^6", "3^4.6"}, {"3^6", "3^2.4.12"}, {"3^6", "3^2.4.3.4"},
        {"3.12^2", "3.4.3.12"}, {"3^2.6^2", "3.6.3.6"}, {"3.4^2.6", "3.6.3.6"}, {"3.4^2.6", "3.4.6.4"},
        {"3^2.4.3.4", "3.4.6.4"}, {"3.4.6.4", "4.6.12"}, {"3^2.6^2", "3^4.6"}, {"3^4.6", "3.6.3.6"},
    });
    return pairs;
}

const std::vector<FacePair>& excluded_pairs() {
    static const std::vector<FacePair> pairs = parse_pairs({
        {"3^3.4^2", "3^2.6^2"}, {"3^3.4^2", "3.4^2.6"}, {"3^3.4^2", "3^4.6"}, {"3^3.4^2", "3^2.4.12"},
        {"3^3.4^2", "4.8^2"}, {"3^3.4^2", "4.5.20"}, {"3^3.4^2", "4.6.12"}, {"3^3.4^2", "3.4.3.12"},
        {"3.4^2.6", "3^2.6^2"}, {"3.4^2.6", "3^4.6"}, {"3.4^2.6", "3^2.4.3.4"}, {"3.4^2.6", "4^4"},
        {"3.4^2.6", "3^2.4.12"}, {"3.4^2.6", "4.8^2"}, {"3.4^2.6", "6^3"}, {"3.4^2.6", "4.5.20"},
        {"3.4^2.6", "4.6.12"}, {"3.4^2.6", "3.4.3.12"}, {"3^2.6^2", "3^2.4.3.4"}, {"3^2.6^2", "3^2.4.12"},
        {"3^2.6^2", "6^3"}, {"3^4.6", "3^2.4.3.4"}, {"3^4.6", "3^2.4.12"}, {"3^4.6", "6^3"},
        {"3^4.6", "4.6.12"}, {"3^2.4.3.4", "4^4"}, {"3^2.4.3.4", "3^2.4.12"}, {"3^2.4.3.4", "3.4.3.12"},
        {"3^2.4.3.4", "4.8^2"}, {"3.6.3.6", "4.6.12"}, {"3.6.3.6", "6^3"}, {"4^4", "3.4.6.4"},
        {"4^4", "3^2.4.12"}, {"4^4", "4.8^2"}, {"4^4", "4.5.20"}, {"4^4", "4.6.12"},
        {"4^4", "3.4.3.12"}, {"3.4.6.4", "3^2.4.12"}, {"3.4.6.4", "6^3"}, {"3.4.6.4", "4.8^2"},
        {"3.4.6.4", "4.5.20"}, {"3.4.6.4", "3.4.3.12"}, {"3^2.4.12", "3.12^2"}, {"3^2.4.12", "3.4.3.12"},
        {"3^2.4.12", "4.5.20"}, {"3^2.4.12", "4.6.12"}, {"3^2.4.12", "4.8^2"}, {"4.8^2", "4.5.20"},
        {"4.8^2", "4.6.12"}, {"4.8^2", "3.4.3.12"}, {"3.12^2", "3.4.3.12"}, {"6^3", "4.6.12"},
        {"5^2.10", "4.5.20"},
    });
    return pairs;
}

}  // namespace dsem
