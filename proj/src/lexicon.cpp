#include "duostego/lexicon.hpp"

#include <algorithm>
#include <cctype>

#include "duostego/error.hpp"

namespace duostego {

namespace {
constexpr std::array<std::string_view, kPosClassCount> kPosNames = {"det",  "pronoun", "preposition",
                                                                    "noun", "verb",    "propernoun"};
}

std::string_view pos_name(PosClass pos) noexcept { return kPosNames[static_cast<std::size_t>(pos)]; }

std::optional<PosClass> pos_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kPosNames.size(); ++i)
        if (kPosNames[i] == name) return static_cast<PosClass>(i);
    return std::nullopt;
}

} // namespace duostego

namespace duostego::lexicon {

// Defined in the generated default_lexicon.cpp.
extern const std::string_view kBundledLexiconText;

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + why);
}

} // namespace

std::string normalize(std::string_view word) {
    std::string out(word);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

Lexicon Lexicon::load(std::string_view text) {
    Lexicon lex;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        const auto bar1 = line.find('|');
        const auto bar2 = bar1 == std::string_view::npos ? bar1 : line.find('|', bar1 + 1);
        if (bar2 == std::string_view::npos) parse_fail(line_no, "expected digit|pos|word");

        const auto digit_field = trim(line.substr(0, bar1));
        const auto pos_field = trim(line.substr(bar1 + 1, bar2 - bar1 - 1));
        const auto word_field = trim(line.substr(bar2 + 1));

        if (digit_field.size() != 1 || digit_field[0] < '0' || digit_field[0] > '9')
            parse_fail(line_no, "category must be a single digit 0-9, got '" + std::string(digit_field) + "'");
        const unsigned digit = static_cast<unsigned>(digit_field[0] - '0');

        const auto pos = pos_from_name(normalize(pos_field));
        if (!pos) parse_fail(line_no, "unknown part of speech '" + std::string(pos_field) + "'");

        if (word_field.empty()) parse_fail(line_no, "empty word");
        if (std::any_of(word_field.begin(), word_field.end(), is_space) ||
            word_field.find('|') != std::string_view::npos)
            parse_fail(line_no, "word contains whitespace or '|'");

        std::string word = normalize(word_field);
        auto [it, inserted] = lex.reverse_.emplace(word, digit);
        if (!inserted && it->second != digit)
            throw Error(ErrorKind::DuplicateWord, "'" + word + "' is in category " + std::to_string(it->second) +
                                                      " and category " + std::to_string(digit) + " (line " +
                                                      std::to_string(line_no) + ")");
        lex.cells_[digit][static_cast<std::size_t>(*pos)].push_back(std::move(word));
    }

    for (unsigned d = 0; d < kCategories; ++d) {
        for (PosClass pos : kAllPosClasses) {
            auto& cell = lex.cells_[d][static_cast<std::size_t>(pos)];
            if (cell.empty())
                throw Error(ErrorKind::IncompleteCategory,
                            "category " + std::to_string(d) + " has no " + std::string(pos_name(pos)));
            std::sort(cell.begin(), cell.end());
            cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
        }
    }
    return lex;
}

const Lexicon& Lexicon::bundled() {
    static const Lexicon lex = load(kBundledLexiconText);
    return lex;
}

std::optional<unsigned> Lexicon::find_digit(std::string_view word) const {
    auto it = reverse_.find(normalize(word));
    if (it == reverse_.end()) return std::nullopt;
    return it->second;
}

unsigned Lexicon::digit_of(std::string_view word) const {
    if (auto d = find_digit(word)) return *d;
    throw Error(ErrorKind::UnknownWord, "'" + std::string(word) + "' is not in the lexicon");
}

const std::vector<std::string>& Lexicon::words_for(unsigned digit, PosClass pos) const {
    if (digit >= kCategories) throw Error(ErrorKind::OutOfRange, "category " + std::to_string(digit));
    return cells_[digit][static_cast<std::size_t>(pos)];
}

std::string Lexicon::serialize() const {
    std::string out;
    for (unsigned d = 0; d < kCategories; ++d)
        for (PosClass pos : kAllPosClasses)
            for (const auto& w : cells_[d][static_cast<std::size_t>(pos)]) {
                out += static_cast<char>('0' + d);
                out += '|';
                out += pos_name(pos);
                out += '|';
                out += w;
                out += '\n';
            }
    return out;
}

} // namespace duostego::lexicon
