#include "fga/words.hpp"

#include <algorithm>
#include <cctype>

namespace fga {

namespace {

bool valid_generator_name(const std::string& name) {
    if (name.empty() || name == "e") return false; // "e" is reserved for the identity
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> names) {
    if (names.empty())
        throw error("invalid_alphabet", "alphabet rank must be at least 1");
    for (const auto& name : names) {
        if (!valid_generator_name(name))
            throw error("invalid_alphabet", "invalid generator name '" + name + "'");
    }
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw error("invalid_alphabet", "duplicate generator name '" + names[i] + "'");
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
        if ((*names_)[i] == name) return i;
    return std::nullopt;
}

bool Alphabet::operator==(const Alphabet& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
}

namespace {

void require_same_alphabet(const Word& u, const Word& v) {
    if (u.alphabet() != v.alphabet())
        throw error("alphabet_mismatch", "words over different alphabets");
}

void require_letter_in_range(const Alphabet& alphabet, Letter letter) {
    if (letter.generator_index >= alphabet.rank())
        throw error("invalid_letter", "generator index out of range");
}

} // namespace

Word::Word(Alphabet alphabet, Letter letter) : alphabet_(std::move(alphabet)) {
    require_letter_in_range(alphabet_, letter);
    letters_.push_back(letter);
}

Word Word::reduced(Alphabet alphabet, const std::vector<Letter>& letters) {
    std::vector<Letter> stack;
    stack.reserve(letters.size());
    for (Letter letter : letters) {
        require_letter_in_range(alphabet, letter);
        if (!stack.empty() && stack.back() == letter.inverse())
            stack.pop_back();
        else
            stack.push_back(letter);
    }
    return Word(std::move(alphabet), std::move(stack), 0);
}

bool Word::operator==(const Word& other) const {
    return alphabet_ == other.alphabet_ && letters_ == other.letters_;
}

Word concat(const Word& u, const Word& v) {
    require_same_alphabet(u, v);
    std::size_t i = u.letters_.size();
    std::size_t j = 0;
    while (i > 0 && j < v.letters_.size() && u.letters_[i - 1] == v.letters_[j].inverse()) {
        --i;
        ++j;
    }
    std::vector<Letter> result;
    result.reserve(i + v.letters_.size() - j);
    result.insert(result.end(), u.letters_.begin(), u.letters_.begin() + static_cast<std::ptrdiff_t>(i));
    result.insert(result.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(j), v.letters_.end());
    return Word(u.alphabet_, std::move(result), 0);
}

Word inverse(const Word& u) {
    std::vector<Letter> result;
    result.reserve(u.letters().size());
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
        result.push_back(it->inverse());
    return Word(u.alphabet(), std::move(result), 0);
}

bool is_prefix(const Word& u, const Word& w) {
    require_same_alphabet(u, w);
    if (u.length() > w.length()) return false;
    return std::equal(u.letters().begin(), u.letters().end(), w.letters().begin());
}

Letter last_letter(const Word& w) {
    if (w.is_identity())
        throw error("empty_word", "the identity word has no last letter");
    return w.letters().back();
}

Word strip_prefix(const Word& p, const Word& w) {
    if (!is_prefix(p, w))
        throw error("not_a_prefix", "strip_prefix: first word is not a prefix of the second");
    std::vector<Letter> result(w.letters().begin() + static_cast<std::ptrdiff_t>(p.length()),
                               w.letters().end());
    return Word(w.alphabet(), std::move(result), 0);
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t value) {
        h ^= value;
        h *= 1099511628211ull;
    };
    mix(w.length());
    for (Letter letter : w.letters()) mix(letter.code());
    return h;
}

namespace detail {

bool lex_key_less(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (a.letters()[i].code() != b.letters()[i].code())
            return a.letters()[i].code() < b.letters()[i].code();
    }
    return false;
}

} // namespace detail

} // namespace fga
