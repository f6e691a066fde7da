#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace duostego {

enum class PosClass : std::uint8_t { Det, Pronoun, Preposition, Noun, Verb, ProperNoun };

inline constexpr std::size_t kPosClassCount = 6;
inline constexpr std::array<PosClass, kPosClassCount> kAllPosClasses = {
    PosClass::Det, PosClass::Pronoun, PosClass::Preposition, PosClass::Noun, PosClass::Verb, PosClass::ProperNoun};

/// Lexicon-file spelling: det, pronoun, preposition, noun, verb, propernoun.
std::string_view pos_name(PosClass pos) noexcept;
std::optional<PosClass> pos_from_name(std::string_view name) noexcept;

} // namespace duostego

namespace duostego::lexicon {

inline constexpr unsigned kCategories = 10;

// Words grouped into ten disjoint digit categories, each split by part of
// speech. Immutable once loaded.
//
// Invariants checked at load: no word lives in two categories (after
// lowercasing), every (digit, pos) cell is non-empty, words have no
// whitespace. A word may appear under several parts of speech within its
// own category.
class Lexicon {
public:
    /// Parses `digit|pos|word` lines; `#` comments and blank lines are skipped.
    /// Throws ParseError, DuplicateWord or IncompleteCategory.
    static Lexicon load(std::string_view text);

    /// The lexicon compiled into the library.
    static const Lexicon& bundled();

    /// Category of a token, matched case-insensitively. Throws UnknownWord.
    unsigned digit_of(std::string_view word) const;
    std::optional<unsigned> find_digit(std::string_view word) const;

    /// Sorted, duplicate-free and never empty.
    const std::vector<std::string>& words_for(unsigned digit, PosClass pos) const;

    /// Canonical text, sorted by (digit, pos, word).
    std::string serialize() const;

    std::size_t word_count() const noexcept { return reverse_.size(); }

    bool operator==(const Lexicon& other) const { return cells_ == other.cells_; }

private:
    Lexicon() = default;

    using Cell = std::vector<std::string>;
    std::array<std::array<Cell, kPosClassCount>, kCategories> cells_;
    std::unordered_map<std::string, unsigned> reverse_;
};

/// ASCII lowercase copy.
std::string normalize(std::string_view word);

} // namespace duostego::lexicon
