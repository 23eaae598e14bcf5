#include "dsem/face_seq.hpp"

#include <cctype>

#include "dsem/cyclic.hpp"
#include "dsem/errors.hpp"

namespace dsem {

namespace {

std::string_view strip_parens(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

int parse_int(std::string_view s, std::string_view whole) {
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty number in '" + std::string(whole) + "'");
    int v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorCode::ParseError, "bad number in '" + std::string(whole) + "'");
        v = v * 10 + (c - '0');
        if (v > 1000000) throw Error(ErrorCode::ParseError, "number too large in '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

std::string run_length(const std::vector<std::string>& symbols) {
    std::string out;
    for (std::size_t i = 0; i < symbols.size();) {
        std::size_t j = i;
        while (j < symbols.size() && symbols[j] == symbols[i]) ++j;
        if (!out.empty()) out += '.';
        out += symbols[i];
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

FaceSeq::FaceSeq(std::vector<int> entries) {
    if (entries.size() < 3) throw Error(ErrorCode::ParseError, "face-sequence needs at least 3 entries");
    for (int p : entries)
        if (p < 3) throw Error(ErrorCode::ParseError, "polygon size below 3");
    entries_ = canonical_cyclic(entries);
}

FaceSeq FaceSeq::parse(std::string_view text) {
    std::string_view s = strip_parens(text);
    std::vector<int> entries;
    if (s.find(',') != std::string_view::npos) {
        for (auto tok : split(s, ',')) entries.push_back(parse_int(strip_parens(tok), text));
    } else {
        for (auto tok : split(s, '.')) {
            auto parts = split(tok, '^');
            if (parts.size() > 2) throw Error(ErrorCode::ParseError, "bad term in '" + std::string(text) + "'");
            int p = parse_int(parts[0], text);
            int n = parts.size() == 2 ? parse_int(parts[1], text) : 1;
            entries.insert(entries.end(), n, p);
        }
    }
    return FaceSeq(std::move(entries));
}

int FaceSeq::link_length() const {
    int len = 0;
    for (int p : entries_) len += p - 2;
    return len;
}

bool FaceSeq::contains_size(int p) const {
    for (int e : entries_)
        if (e == p) return true;
    return false;
}

std::string FaceSeq::str() const {
    std::vector<std::string> syms;
    for (int p : entries_) syms.push_back(std::to_string(p));
    return run_length(syms);
}

LinkSeq::LinkSeq(std::vector<Letter> word) : word_(canonical_cyclic(word)) {}

LinkSeq LinkSeq::parse(std::string_view text) {
    std::string_view s = strip_parens(text);
    std::vector<Letter> word;
    for (auto tok : split(s, '.')) {
        auto parts = split(tok, '^');
        if (parts.size() > 2) throw Error(ErrorCode::ParseError, "bad term in '" + std::string(text) + "'");
        Letter l;
        if (parts[0] == "F1") l = Letter::F1;
        else if (parts[0] == "F2") l = Letter::F2;
        else throw Error(ErrorCode::ParseError, "unknown letter in '" + std::string(text) + "'");
        int n = parts.size() == 2 ? parse_int(parts[1], text) : 1;
        word.insert(word.end(), n, l);
    }
    return LinkSeq(std::move(word));
}

std::string LinkSeq::str() const {
    std::vector<std::string> syms;
    for (Letter l : word_) syms.push_back(l == Letter::F1 ? "F1" : "F2");
    return "(" + run_length(syms) + ")";
}

}  // namespace dsem
