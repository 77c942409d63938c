#include "fga/algebra.hpp"

#include <algorithm>

namespace fga {

namespace {

void require_compatible(const AlgebraElement& f, const AlgebraElement& g) {
    if (f.field() != g.field())
        throw error("field_mismatch", "elements over different fields");
    if (f.alphabet() != g.alphabet())
        throw error("alphabet_mismatch", "elements over different alphabets");
}

} // namespace

AlgebraElement AlgebraElement::zero(const Field& field, const Alphabet& alphabet) {
    return AlgebraElement(field, alphabet);
}

AlgebraElement AlgebraElement::monomial(const Field& field, const Word& word,
                                        const Scalar& coefficient) {
    AlgebraElement f(field, word.alphabet());
    f.add_term(word, coefficient);
    return f;
}

AlgebraElement AlgebraElement::unit(const Field& field, const Alphabet& alphabet) {
    return monomial(field, Word(alphabet), Scalar::one(field));
}

Scalar AlgebraElement::coefficient(const Word& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::vector<Word> AlgebraElement::support() const {
    std::vector<Word> words;
    words.reserve(terms_.size());
    for (const auto& [word, coefficient] : terms_) words.push_back(word);
    std::sort(words.begin(), words.end(), detail::lex_key_less);
    return words;
}

void AlgebraElement::add_term(const Word& word, const Scalar& coefficient) {
    if (word.alphabet() != alphabet_)
        throw error("alphabet_mismatch", "term word over a different alphabet");
    if (coefficient.field() != field_)
        throw error("field_mismatch", "term coefficient over a different field");
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.emplace(word, coefficient);
    if (!inserted) {
        it->second = it->second + coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool AlgebraElement::operator==(const AlgebraElement& other) const {
    if (field_ != other.field_ || alphabet_ != other.alphabet_) return false;
    if (terms_.size() != other.terms_.size()) return false;
    for (const auto& [word, coefficient] : terms_) {
        auto it = other.terms_.find(word);
        if (it == other.terms_.end() || it->second != coefficient) return false;
    }
    return true;
}

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g) {
    require_compatible(f, g);
    AlgebraElement result = f;
    for (const auto& [word, coefficient] : g.terms()) result.add_term(word, coefficient);
    return result;
}

AlgebraElement sub(const AlgebraElement& f, const AlgebraElement& g) {
    require_compatible(f, g);
    AlgebraElement result = f;
    for (const auto& [word, coefficient] : g.terms()) result.add_term(word, -coefficient);
    return result;
}

AlgebraElement scale(const AlgebraElement& f, const Scalar& factor) {
    if (factor.field() != f.field())
        throw error("field_mismatch", "scale factor over a different field");
    AlgebraElement result(f.field(), f.alphabet());
    if (factor.is_zero()) return result;
    for (const auto& [word, coefficient] : f.terms()) result.add_term(word, coefficient * factor);
    return result;
}

AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g) {
    require_compatible(f, g);
    AlgebraElement result(f.field(), f.alphabet());
    for (const auto& [u, alpha] : f.terms())
        for (const auto& [v, beta] : g.terms()) result.add_term(concat(u, v), alpha * beta);
    return result;
}

AlgebraElement right_translate(const AlgebraElement& f, const Word& w) {
    AlgebraElement result(f.field(), f.alphabet());
    for (const auto& [u, alpha] : f.terms()) result.add_term(concat(u, w), alpha);
    return result;
}

AlgebraElement operator+(const AlgebraElement& f, const AlgebraElement& g) { return add(f, g); }
AlgebraElement operator-(const AlgebraElement& f, const AlgebraElement& g) { return sub(f, g); }
AlgebraElement operator*(const AlgebraElement& f, const AlgebraElement& g) {
    return multiply(f, g);
}

Word head_term(const AlgebraElement& f, const ExposureOrder& ord) {
    if (f.is_zero())
        throw error("zero_element", "the zero element has no head term");
    const Word* best = nullptr;
    for (const auto& [word, coefficient] : f.terms())
        if (best == nullptr || ord.less(*best, word)) best = &word;
    return *best;
}

Letter head_term_tail(const AlgebraElement& f, const ExposureOrder& ord) {
    Word head = head_term(f, ord);
    if (head.is_identity())
        throw error("scalar_element", "head term tail is undefined for scalar elements");
    return last_letter(head);
}

MonicResult monic(const AlgebraElement& f, const ExposureOrder& ord) {
    Word head = head_term(f, ord);
    Scalar leading = f.coefficient(head);
    return {scale(f, leading.inverse()), leading};
}

std::strong_ordering support_compare(const AlgebraElement& f, const AlgebraElement& g,
                                     const ExposureOrder& ord) {
    return max_compare(f.support(), g.support(), ord);
}

std::vector<Word> support_descending(const AlgebraElement& f, const ExposureOrder& ord) {
    std::vector<Word> words = f.support();
    std::sort(words.begin(), words.end(),
              [&ord](const Word& a, const Word& b) { return ord.less(b, a); });
    return words;
}

} // namespace fga
