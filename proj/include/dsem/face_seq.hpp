#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dsem {

// Cyclic sequence of polygon sizes around a vertex, stored canonically.
class FaceSeq {
public:
    FaceSeq() = default;
    explicit FaceSeq(std::vector<int> entries);

    // Accepts "3,3,3,4,4", "3^3.4^2" or "(3^3.4^2)".
    static FaceSeq parse(std::string_view text);

    const std::vector<int>& entries() const { return entries_; }
    int degree() const { return static_cast<int>(entries_.size()); }
    // Number of vertices on the link cycle: q + sum(p - 3).
    int link_length() const;
    bool contains_size(int p) const;
    std::string str() const;

    auto operator<=>(const FaceSeq&) const = default;

private:
    std::vector<int> entries_;
};

// Two-letter alphabet for link words; F1 sorts first.
enum class Letter : std::uint8_t { F1 = 0, F2 = 1 };

// Cyclic word over {F1, F2}, stored canonically.
class LinkSeq {
public:
    LinkSeq() = default;
    explicit LinkSeq(std::vector<Letter> word);

    // Accepts "F1^2.F2.F1^2.F2" with optional parentheses.
    static LinkSeq parse(std::string_view text);

    const std::vector<Letter>& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }
    std::string str() const;

    auto operator<=>(const LinkSeq&) const = default;

private:
    std::vector<Letter> word_;
};

// Run-length rendering "a^n.b" of a linear word, used for both face and link words.
std::string run_length(const std::vector<std::string>& symbols);

}  // namespace dsem
