#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "duostego/lexicon.hpp"
#include "duostego/random.hpp"

namespace duostego::grammar {

enum class Nonterminal : std::uint8_t { S, NP, VP, Nominal, PP };
inline constexpr std::size_t kNonterminalCount = 5;

std::string_view nonterminal_name(Nonterminal nt) noexcept;

// Either a nonterminal or a part-of-speech terminal.
struct Symbol {
    bool terminal = false;
    std::uint8_t id = 0;

    static constexpr Symbol of(Nonterminal nt) noexcept { return {false, static_cast<std::uint8_t>(nt)}; }
    static constexpr Symbol of(PosClass pos) noexcept { return {true, static_cast<std::uint8_t>(pos)}; }

    Nonterminal nonterminal() const noexcept { return static_cast<Nonterminal>(id); }
    PosClass pos() const noexcept { return static_cast<PosClass>(id); }

    bool operator==(const Symbol&) const = default;
};

struct Production {
    Nonterminal lhs;
    std::vector<Symbol> rhs;
};

using PosSkeleton = std::vector<PosClass>;

// A context-free grammar over part-of-speech terminals with no empty
// productions. Skeleton sets are built on first request per length and
// cached; the object is safe for concurrent use.
class Grammar {
public:
    Grammar(Nonterminal start, std::vector<Production> productions);

    /// The fourteen-rule sentence grammar used for cover text.
    static const Grammar& sentence_grammar();

    Nonterminal start() const noexcept { return start_; }
    std::span<const Production> productions() const noexcept { return productions_; }

    /// Every terminal sequence of exactly `length` symbols derivable from the
    /// start symbol, sorted lexicographically. Throws NoSkeleton if there are none.
    const std::vector<PosSkeleton>& skeletons_of_length(std::size_t length) const;

    /// Earley recognition against the start symbol.
    bool recognize(std::span<const PosClass> skeleton) const;

private:
    using SkeletonSet = std::vector<PosSkeleton>;
    // sets_[len][nt], sorted and unique.
    using LengthTable = std::vector<std::array<SkeletonSet, kNonterminalCount>>;

    void extend_table(std::size_t length) const;
    SkeletonSet expand(const Production& p, std::size_t length) const;

    Nonterminal start_;
    std::vector<Production> productions_;

    mutable std::mutex mutex_;
    mutable LengthTable table_;
    mutable std::map<std::size_t, std::shared_ptr<const SkeletonSet>> start_sets_;
};

struct Token {
    std::string word;
    PosClass pos;

    bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

/// One word per digit: word i comes from category digits[i], and the parts of
/// speech form a skeleton drawn uniformly from skeletons_of_length(|digits|).
/// Skeleton and word choices come from std::mt19937_64 seeded with `seed`.
Sentence generate_sentence(const Grammar& g, const lexicon::Lexicon& lex, std::span<const std::uint8_t> digits,
                           std::uint64_t seed);

/// Same, drawing from a caller-owned engine so consecutive sentences share one stream.
Sentence generate_sentence(const Grammar& g, const lexicon::Lexicon& lex, std::span<const std::uint8_t> digits,
                           rng::Engine& engine);

/// Maps each token to its category digit; the grammar is not consulted.
/// Throws UnknownWord naming the offending position.
std::vector<std::uint8_t> decode_sentence(const lexicon::Lexicon& lex, std::span<const std::string> tokens);

PosSkeleton skeleton_of(const Sentence& s);
std::vector<std::string> words_of(const Sentence& s);

} // namespace duostego::grammar
