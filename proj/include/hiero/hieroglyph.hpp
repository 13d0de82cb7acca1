#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hiero/errors.hpp"
#include "hiero/gf2.hpp"

namespace hiero {

// Cyclic double-occurrence word: 2n positions, n letters, every letter
// exactly twice. Letters are indexed 0..n-1 by first occurrence in the
// stored linear representative; matrices and twist vectors use that index
// order. The empty word (n = 0) is valid everywhere.
class Hieroglyph {
public:
    Hieroglyph() = default;

    // code[k] = letter index at position k, indices assigned by first
    // occurrence (so the first element, if any, is 0). When names is empty
    // the enumeration alphabet a, b, ..., z, aa, ab, ... is used.
    explicit Hieroglyph(std::vector<int> code, std::vector<std::string> names = {});

    int letters() const { return static_cast<int>(names_.size()); }
    int length() const { return static_cast<int>(code_.size()); }

    const std::vector<int>& code() const { return code_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int letter) const { return names_[static_cast<size_t>(letter)]; }

    // Throws UnknownLetter.
    int letter_id(std::string_view name) const;

    // The two positions of a letter, ascending.
    std::array<int, 2> occurrences(int letter) const { return pos_[static_cast<size_t>(letter)]; }

    // Unchecked interlacement test on letter indices.
    bool interlaces_ids(int a, int b) const {
        auto [p1, p2] = pos_[static_cast<size_t>(a)];
        auto [q1, q2] = pos_[static_cast<size_t>(b)];
        return (p1 < q1 && q1 < p2 && p2 < q2) || (q1 < p1 && p1 < q2 && q2 < p2);
    }

    // Serializes back to the word text format: single characters joined when
    // every name is one character, otherwise space-separated tokens.
    std::string word_string() const;

private:
    std::vector<int> code_;
    std::vector<std::string> names_;
    std::vector<std::array<int, 2>> pos_;
    std::unordered_map<std::string, int> index_;
};

// Lexicographically least relabeled representative over all rotations and
// both orientations; two hieroglyphs are equal iff their keys are equal.
struct CanonicalKey {
    std::vector<int> code;

    bool operator==(const CanonicalKey&) const = default;
    auto operator<=>(const CanonicalKey&) const = default;

    int letters() const;
    std::string to_string() const;
};

struct CanonicalKeyHash {
    size_t operator()(const CanonicalKey& k) const noexcept;
};

// Front end for the word notation. A text with whitespace or commas is read
// as separated multi-character tokens (comma-delimited fields must be
// nonempty); otherwise every character is a token.
Hieroglyph parse_word(const std::string& text);

CanonicalKey canonical_form(const Hieroglyph& h);

// Canonicalization on a raw first-occurrence code, without constructing a
// Hieroglyph. canonical_form(h) == canonicalize_code(h.code()).
CanonicalKey canonicalize_code(const std::vector<int>& code);

// Removes both occurrences of every listed letter; remaining order and names
// are preserved, surviving letters are reindexed by first occurrence.
Hieroglyph delete_letters(const Hieroglyph& h, const std::vector<std::string>& letters);

// Same by letter index mask (mask[i] != 0 deletes letter i).
Hieroglyph delete_letter_ids(const Hieroglyph& h, const std::vector<uint8_t>& mask);

// True iff the two letters alternate in cyclic order (abab, not aabb).
bool interlaces(const Hieroglyph& h, std::string_view a, std::string_view b);

// n x n symmetric, zero diagonal, entry (i,j) = 1 iff letters i and j
// interlace; indices by first occurrence.
SymMatrixGF2 interlacement_matrix(const Hieroglyph& h);

// Enumeration alphabet: a..z, aa, ab, ... (bijective base 26).
std::string enumeration_name(int index);

// The word a1 a2 ... am a1 a2 ... am.
Hieroglyph clique_word(int m);

Hieroglyph from_key(const CanonicalKey& key);

// Rotation / reflection of the linear representative (same cyclic word).
Hieroglyph rotated(const Hieroglyph& h, int shift);
Hieroglyph reflected(const Hieroglyph& h);

}  // namespace hiero
