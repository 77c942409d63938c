#ifndef FGA_WORDS_HPP
#define FGA_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fga/error.hpp"

namespace fga {

// The generator alphabet of a free group: rank distinct named generators.
// Cheap to copy; the name table is shared.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    std::size_t rank() const { return names_->size(); }
    const std::string& name(std::size_t index) const { return (*names_)[index]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const Alphabet& other) const;
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

// One letter of S u S^-1: a generator index plus a sign (-1 marks the inverse).
struct Letter {
    std::uint32_t generator_index = 0;
    std::int8_t sign = 1;

    Letter() = default;
    Letter(std::uint32_t index, int letter_sign)
        : generator_index(index), sign(static_cast<std::int8_t>(letter_sign < 0 ? -1 : 1)) {}

    Letter inverse() const { return Letter(generator_index, -sign); }
    // Dense code in [0, 2*rank): positive letters at even slots.
    std::uint32_t code() const { return generator_index * 2 + (sign < 0 ? 1u : 0u); }

    bool operator==(const Letter& other) const {
        return generator_index == other.generator_index && sign == other.sign;
    }
    bool operator!=(const Letter& other) const { return !(*this == other); }
};

// A freely reduced word over a fixed alphabet. The empty word is the group
// identity e. Instances are immutable values; every constructor reduces or
// preserves reducedness, so no adjacent pair of mutually inverse letters ever
// appears in letters().
class Word {
public:
    explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
    Word(Alphabet alphabet, Letter letter);

    // Builds a word from an arbitrary letter string, freely reducing it.
    static Word reduced(Alphabet alphabet, const std::vector<Letter>& letters);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    bool operator==(const Word& other) const;
    bool operator!=(const Word& other) const { return !(*this == other); }

private:
    friend Word concat(const Word&, const Word&);
    friend Word inverse(const Word&);
    friend Word strip_prefix(const Word&, const Word&);

    Alphabet alphabet_;
    std::vector<Letter> letters_; // invariant: freely reduced

    Word(Alphabet alphabet, std::vector<Letter> reduced_letters, int)
        : alphabet_(std::move(alphabet)), letters_(std::move(reduced_letters)) {}
};

// Group product with free reduction at the seam.
Word concat(const Word& u, const Word& v);
Word inverse(const Word& u);

// True iff u is an initial segment of w (u == w allowed).
bool is_prefix(const Word& u, const Word& w);

// Final letter; requires w != e.
Letter last_letter(const Word& w);

// Letterwise complement: returns s with w = p*s and no cancellation.
// Requires is_prefix(p, w).
Word strip_prefix(const Word& p, const Word& w);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

namespace detail {
// Fixed arbitrary total order on words (length, then letter codes), used only
// to make container iteration deterministic. Carries no semantics: all
// order-dependent logic goes through ExposureOrder.
bool lex_key_less(const Word& a, const Word& b);
} // namespace detail

} // namespace fga

#endif
