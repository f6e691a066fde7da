#include "duostego/grammar.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include "duostego/error.hpp"
#include "duostego/random.hpp"

namespace duostego::grammar {

std::string_view nonterminal_name(Nonterminal nt) noexcept {
    switch (nt) {
    case Nonterminal::S: return "S";
    case Nonterminal::NP: return "NP";
    case Nonterminal::VP: return "VP";
    case Nonterminal::Nominal: return "Nominal";
    case Nonterminal::PP: return "PP";
    }
    return "?";
}

Grammar::Grammar(Nonterminal start, std::vector<Production> productions)
    : start_(start), productions_(std::move(productions)) {}

const Grammar& Grammar::sentence_grammar() {
    using N = Nonterminal;
    using P = PosClass;
    auto n = [](N x) { return Symbol::of(x); };
    auto t = [](P x) { return Symbol::of(x); };
    static const Grammar g(N::S, {
                                     {N::S, {n(N::NP), n(N::VP)}},
                                     {N::S, {n(N::VP)}},
                                     {N::NP, {t(P::Pronoun)}},
                                     {N::NP, {t(P::ProperNoun)}},
                                     {N::NP, {t(P::Det), n(N::Nominal)}},
                                     {N::Nominal, {t(P::Noun)}},
                                     {N::Nominal, {n(N::Nominal), t(P::Noun)}},
                                     {N::Nominal, {n(N::Nominal), n(N::PP)}},
                                     {N::VP, {t(P::Verb)}},
                                     {N::VP, {t(P::Verb), n(N::NP)}},
                                     {N::VP, {t(P::Verb), n(N::NP), n(N::PP)}},
                                     {N::VP, {t(P::Verb), n(N::PP)}},
                                     {N::VP, {n(N::VP), n(N::PP)}},
                                     {N::PP, {t(P::Preposition), n(N::NP)}},
                                 });
    return g;
}

// All strings of exactly `length` terminals derivable from p.rhs, using
// table_ rows for lengths already complete. A nonterminal spanning the
// whole length (unary rule) reads the row currently being built.
Grammar::SkeletonSet Grammar::expand(const Production& p, std::size_t length) const {
    SkeletonSet out;
    const std::size_t k = p.rhs.size();
    if (length < k) return out;

    PosSkeleton prefix;
    // Depth-first over the split points; each symbol covers at least one terminal.
    auto walk = [&](auto&& self, std::size_t sym, std::size_t remaining) -> void {
        if (sym == k) {
            if (remaining == 0) out.push_back(prefix);
            return;
        }
        const std::size_t max_span = remaining - (k - sym - 1);
        const Symbol s = p.rhs[sym];
        if (s.terminal) {
            prefix.push_back(s.pos());
            self(self, sym + 1, remaining - 1);
            prefix.pop_back();
            return;
        }
        for (std::size_t span = 1; span <= max_span; ++span) {
            const auto& pieces = table_[span][static_cast<std::size_t>(s.nonterminal())];
            for (const auto& piece : pieces) {
                prefix.insert(prefix.end(), piece.begin(), piece.end());
                self(self, sym + 1, remaining - span);
                prefix.resize(prefix.size() - piece.size());
            }
        }
    };
    walk(walk, 0, length);
    return out;
}

void Grammar::extend_table(std::size_t length) const {
    if (table_.empty()) table_.resize(1); // row 0 stays empty: no empty productions
    for (std::size_t len = table_.size(); len <= length; ++len) {
        table_.emplace_back();
        auto& row = table_.back();
        // Unary chains (S -> VP -> Verb) need the row to reach a fixpoint.
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& p : productions_) {
                auto produced = expand(p, len);
                if (produced.empty()) continue;
                auto& target = row[static_cast<std::size_t>(p.lhs)];
                const std::size_t before = target.size();
                target.insert(target.end(), produced.begin(), produced.end());
                std::sort(target.begin(), target.end());
                target.erase(std::unique(target.begin(), target.end()), target.end());
                changed = changed || target.size() != before;
            }
        }
    }
}

const std::vector<PosSkeleton>& Grammar::skeletons_of_length(std::size_t length) const {
    std::lock_guard lock(mutex_);
    if (auto it = start_sets_.find(length); it != start_sets_.end()) return *it->second;
    if (length > 0) extend_table(length);
    auto set = std::make_shared<const SkeletonSet>(length == 0 ? SkeletonSet{}
                                                               : table_[length][static_cast<std::size_t>(start_)]);
    if (set->empty())
        throw Error(ErrorKind::NoSkeleton, "no sentence of " + std::to_string(length) + " words in the grammar");
    start_sets_.emplace(length, set);
    return *set;
}

namespace {

struct EarleyItem {
    std::size_t rule;
    std::size_t dot;
    std::size_t origin;

    auto operator<=>(const EarleyItem&) const = default;
};

} // namespace

bool Grammar::recognize(std::span<const PosClass> skeleton) const {
    const std::size_t n = skeleton.size();
    if (n == 0) return false;

    std::vector<std::vector<EarleyItem>> chart(n + 1);
    std::vector<std::set<EarleyItem>> seen(n + 1);
    auto add = [&](std::size_t at, EarleyItem item) {
        if (seen[at].insert(item).second) chart[at].push_back(item);
    };

    for (std::size_t r = 0; r < productions_.size(); ++r)
        if (productions_[r].lhs == start_) add(0, {r, 0, 0});

    for (std::size_t i = 0; i <= n; ++i) {
        // chart[i] grows while we walk it.
        for (std::size_t k = 0; k < chart[i].size(); ++k) {
            const EarleyItem item = chart[i][k];
            const auto& rhs = productions_[item.rule].rhs;
            if (item.dot == rhs.size()) {
                // complete
                const Nonterminal done = productions_[item.rule].lhs;
                for (std::size_t j = 0; j < chart[item.origin].size(); ++j) {
                    const EarleyItem waiting = chart[item.origin][j];
                    const auto& wrhs = productions_[waiting.rule].rhs;
                    if (waiting.dot < wrhs.size() && !wrhs[waiting.dot].terminal &&
                        wrhs[waiting.dot].nonterminal() == done)
                        add(i, {waiting.rule, waiting.dot + 1, waiting.origin});
                }
                continue;
            }
            const Symbol next = rhs[item.dot];
            if (next.terminal) {
                // scan
                if (i < n && skeleton[i] == next.pos()) add(i + 1, {item.rule, item.dot + 1, item.origin});
            } else {
                // predict
                for (std::size_t r = 0; r < productions_.size(); ++r)
                    if (productions_[r].lhs == next.nonterminal()) add(i, {r, 0, i});
            }
        }
    }

    return std::any_of(chart[n].begin(), chart[n].end(), [&](const EarleyItem& item) {
        return item.origin == 0 && productions_[item.rule].lhs == start_ &&
               item.dot == productions_[item.rule].rhs.size();
    });
}

Sentence generate_sentence(const Grammar& g, const lexicon::Lexicon& lex, std::span<const std::uint8_t> digits,
                           std::uint64_t seed) {
    rng::Engine engine(seed);
    return generate_sentence(g, lex, digits, engine);
}

Sentence generate_sentence(const Grammar& g, const lexicon::Lexicon& lex, std::span<const std::uint8_t> digits,
                           rng::Engine& engine) {
    if (digits.empty()) throw Error(ErrorKind::NoSkeleton, "cannot generate a sentence for zero digits");
    const auto& skeletons = g.skeletons_of_length(digits.size());
    const auto& skeleton = skeletons[rng::uniform_below(engine, skeletons.size())];

    Sentence out;
    out.reserve(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const auto& words = lex.words_for(digits[i], skeleton[i]);
        out.push_back({words[rng::uniform_below(engine, words.size())], skeleton[i]});
    }
    return out;
}

std::vector<std::uint8_t> decode_sentence(const lexicon::Lexicon& lex, std::span<const std::string> tokens) {
    std::vector<std::uint8_t> digits;
    digits.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto d = lex.find_digit(tokens[i]);
        if (!d)
            throw Error(ErrorKind::UnknownWord,
                        "'" + tokens[i] + "' at position " + std::to_string(i) + " is not in the lexicon");
        digits.push_back(static_cast<std::uint8_t>(*d));
    }
    return digits;
}

PosSkeleton skeleton_of(const Sentence& s) {
    PosSkeleton out;
    out.reserve(s.size());
    for (const auto& t : s) out.push_back(t.pos);
    return out;
}

std::vector<std::string> words_of(const Sentence& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (const auto& t : s) out.push_back(t.word);
    return out;
}

} // namespace duostego::grammar
