#ifndef FGA_TESTS_SUPPORT_HPP
#define FGA_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "fga/engine.hpp"
#include "fga/text.hpp"

namespace fga::tests {

// Fixture bundling an order spec with a field, with string-based helpers so
// test cases read like the worked examples.
struct Setup {
    OrderSpec spec;
    Field field;

    const ExposureOrder& ord() const { return *spec.order; }
    const Alphabet& alphabet() const { return spec.alphabet; }

    Word w(const std::string& text) const { return parse_word(text, spec.alphabet); }
    AlgebraElement el(const std::string& text) const {
        return parse_element(text, field, spec.alphabet);
    }
    std::vector<AlgebraElement> els(const std::vector<std::string>& texts) const {
        std::vector<AlgebraElement> elements;
        for (const auto& text : texts) elements.push_back(el(text));
        return elements;
    }
    std::string str(const AlgebraElement& f) const { return format_element(f, *spec.order); }

    ReductionSystem system(const std::vector<std::string>& texts) const {
        return ReductionSystem(els(texts), *spec.order);
    }
};

inline Setup make(const std::string& order_spec, const std::string& field_spec = "q") {
    return Setup{parse_order_spec(order_spec), parse_field_spec(field_spec)};
}

inline Word random_word(std::mt19937_64& rng, const Alphabet& alphabet, std::size_t max_length) {
    std::uniform_int_distribution<std::size_t> length_dist(0, max_length);
    std::uniform_int_distribution<std::uint32_t> letter_dist(
        0, static_cast<std::uint32_t>(alphabet.rank() * 2 - 1));
    std::vector<Letter> letters;
    std::size_t target = length_dist(rng);
    while (letters.size() < target) {
        Letter letter(letter_dist(rng) / 2, letter_dist(rng) % 2 == 0 ? 1 : -1);
        if (!letters.empty() && letters.back() == letter.inverse())
            letters.pop_back();
        else
            letters.push_back(letter);
    }
    return Word::reduced(alphabet, letters);
}

inline Scalar random_scalar(std::mt19937_64& rng, const Field& field, bool nonzero = false) {
    if (field.is_rational()) {
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 4);
        int n = num(rng);
        if (nonzero && n == 0) n = 1;
        return Scalar::rational(BigRational(n, den(rng)));
    }
    std::uniform_int_distribution<std::uint64_t> dist(nonzero ? 1 : 0, field.modulus() - 1);
    return Scalar::residue(field, dist(rng));
}

inline AlgebraElement random_element(std::mt19937_64& rng, const Field& field,
                                     const Alphabet& alphabet, std::size_t max_terms,
                                     std::size_t max_length) {
    std::uniform_int_distribution<std::size_t> terms_dist(0, max_terms);
    AlgebraElement f(field, alphabet);
    std::size_t terms = terms_dist(rng);
    for (std::size_t i = 0; i < terms; ++i)
        f.add_term(random_word(rng, alphabet, max_length), random_scalar(rng, field));
    return f;
}

inline AlgebraElement random_nonzero_element(std::mt19937_64& rng, const Field& field,
                                             const Alphabet& alphabet, std::size_t max_terms,
                                             std::size_t max_length) {
    while (true) {
        AlgebraElement f = random_element(rng, field, alphabet, max_terms, max_length);
        if (!f.is_zero()) return f;
    }
}

// Random proper nonzero ideal, as a basis computation output. Retries until
// the engine reports a proper ideal of positive rank.
inline BasisResult random_proper_basis(std::mt19937_64& rng, const Setup& s,
                                       std::size_t max_generators = 3, std::size_t max_terms = 4,
                                       std::size_t max_length = 4) {
    std::uniform_int_distribution<std::size_t> count_dist(1, max_generators);
    while (true) {
        std::vector<AlgebraElement> generators;
        std::size_t count = count_dist(rng);
        for (std::size_t i = 0; i < count; ++i)
            generators.push_back(random_element(rng, s.field, s.alphabet(), max_terms, max_length));
        BasisResult result = exposure_and_groebner(generators, s.spec.order);
        if (!result.improper && result.rank() > 0) return result;
    }
}

} // namespace fga::tests

#endif
