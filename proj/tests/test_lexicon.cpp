#include <doctest.h>

#include <algorithm>

#include "duostego/error.hpp"
#include "duostego/lexicon.hpp"

using duostego::Error;
using duostego::ErrorKind;
using duostego::PosClass;
using duostego::lexicon::Lexicon;

namespace {

// Fills every (digit, pos) cell with one placeholder word.
std::string filler() {
    std::string out;
    for (int d = 0; d < 10; ++d)
        for (auto pos : duostego::kAllPosClasses)
            out += std::to_string(d) + "|" + std::string(duostego::pos_name(pos)) + "|fill" + std::to_string(d) +
                   std::string(duostego::pos_name(pos)) + "\n";
    return out;
}

ErrorKind load_error(const std::string& text) {
    try {
        Lexicon::load(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("load accepted the lexicon");
    return ErrorKind::ParseError;
}

} // namespace

TEST_CASE("load resolves table placements") {
    const auto lex = Lexicon::load(filler() + "2|det|a\n9|noun|book\n0|preposition|from\n1|noun|school\n"
                                              "9|propernoun|Harvard\n# comment\n\n  0|det|this  \n");
    CHECK(lex.digit_of("a") == 2);
    CHECK(lex.digit_of("book") == 9);
    CHECK(lex.digit_of("from") == 0);
    CHECK(lex.digit_of("school") == 1);
    CHECK(lex.digit_of("Harvard") == 9);
    CHECK(lex.digit_of("HARVARD") == 9);
    CHECK(lex.digit_of("harvard") == 9);
    CHECK(lex.digit_of("this") == 0);
    const auto& preps = lex.words_for(0, PosClass::Preposition);
    CHECK(std::find(preps.begin(), preps.end(), "from") != preps.end());
}

TEST_CASE("unknown words fail loudly") {
    try {
        Lexicon::bundled().digit_of("zzzz");
        FAIL("expected UnknownWord");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownWord);
    }
}

TEST_CASE("validation errors") {
    CHECK(load_error("") == ErrorKind::IncompleteCategory);
    CHECK(load_error(filler() + "0|verb|walk\n9|verb|walk\n") == ErrorKind::DuplicateWord);
    CHECK(load_error(filler() + "0|verb|Walk\n9|noun|wALK\n") == ErrorKind::DuplicateWord);
    CHECK(load_error(filler() + "10|verb|x\n") == ErrorKind::ParseError);
    CHECK(load_error(filler() + "a|verb|x\n") == ErrorKind::ParseError);
    CHECK(load_error(filler() + "1|adverb|x\n") == ErrorKind::ParseError);
    CHECK(load_error(filler() + "1|verb\n") == ErrorKind::ParseError);
    CHECK(load_error(filler() + "1|verb|two words\n") == ErrorKind::ParseError);
    CHECK(load_error(filler() + "1|verb|\n") == ErrorKind::ParseError);

    std::string missing = filler();
    missing.erase(missing.find("3|noun|fill3noun\n"), std::string("3|noun|fill3noun\n").size());
    CHECK(load_error(missing) == ErrorKind::IncompleteCategory);
}

TEST_CASE("same word under two parts of speech in one category is allowed") {
    const auto lex = Lexicon::load(filler() + "3|det|her\n3|pronoun|her\n");
    CHECK(lex.digit_of("her") == 3);
}

TEST_CASE("duplicate report names both categories") {
    try {
        Lexicon::load(filler() + "0|verb|walk\n9|verb|walk\n");
    } catch (const Error& e) {
        const std::string what = e.what();
        CHECK(what.find("category 0") != std::string::npos);
        CHECK(what.find("category 9") != std::string::npos);
    }
}

TEST_CASE("bundled lexicon") {
    const auto& lex = Lexicon::bundled();
    for (unsigned d = 0; d < 10; ++d)
        for (auto pos : duostego::kAllPosClasses) {
            const auto& words = lex.words_for(d, pos);
            CHECK(words.size() >= 8);
            CHECK(std::is_sorted(words.begin(), words.end()));
            CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
            for (const auto& w : words) CHECK(lex.digit_of(w) == d);
        }
    CHECK(lex.digit_of("a") == 2);
    CHECK(lex.digit_of("book") == 9);
    CHECK(lex.digit_of("from") == 0);
    CHECK(lex.digit_of("school") == 1);
    CHECK(lex.digit_of("this") == 0);
    CHECK(lex.digit_of("walk") == 0);
}

TEST_CASE("canonical serialization round trips") {
    const auto& lex = Lexicon::bundled();
    const auto text = lex.serialize();
    const auto again = Lexicon::load(text);
    CHECK(again == lex);
    CHECK(again.serialize() == text);
}
