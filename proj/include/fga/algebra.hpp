#ifndef FGA_ALGEBRA_HPP
#define FGA_ALGEBRA_HPP

#include <unordered_map>
#include <vector>

#include "fga/orders.hpp"
#include "fga/scalars.hpp"
#include "fga/words.hpp"

namespace fga {

// An element of the group algebra K[F]: a finite map from reduced words to
// nonzero scalars. The zero element is the empty map.
class AlgebraElement {
public:
    AlgebraElement(Field field, Alphabet alphabet)
        : field_(std::move(field)), alphabet_(std::move(alphabet)) {}

    static AlgebraElement zero(const Field& field, const Alphabet& alphabet);
    static AlgebraElement monomial(const Field& field, const Word& word, const Scalar& coefficient);
    static AlgebraElement unit(const Field& field, const Alphabet& alphabet); // 1*e

    const Field& field() const { return field_; }
    const Alphabet& alphabet() const { return alphabet_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    Scalar coefficient(const Word& word) const;
    const std::unordered_map<Word, Scalar, WordHash>& terms() const { return terms_; }

    // Support words in the fixed internal key order (deterministic, not
    // semantic); use head_term / support sorted by an ExposureOrder for
    // anything order-dependent.
    std::vector<Word> support() const;

    void add_term(const Word& word, const Scalar& coefficient); // collects, drops zeros

    bool operator==(const AlgebraElement& other) const;
    bool operator!=(const AlgebraElement& other) const { return !(*this == other); }

private:
    Field field_;
    Alphabet alphabet_;
    std::unordered_map<Word, Scalar, WordHash> terms_;
};

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement sub(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement scale(const AlgebraElement& f, const Scalar& factor);
AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g);

// f * w, the right translate; injective on supports, so no collection occurs.
AlgebraElement right_translate(const AlgebraElement& f, const Word& w);

AlgebraElement operator+(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement operator-(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement operator*(const AlgebraElement& f, const AlgebraElement& g);

// The order-maximal support word; requires f != 0.
Word head_term(const AlgebraElement& f, const ExposureOrder& ord);

// Last letter of the head term; requires HT(f) != e, i.e. f outside K.
Letter head_term_tail(const AlgebraElement& f, const ExposureOrder& ord);

struct MonicResult {
    AlgebraElement element;    // head coefficient 1
    Scalar leading_coefficient; // the coefficient that was divided out
};

// Scales f by the inverse of its head coefficient; requires f != 0.
MonicResult monic(const AlgebraElement& f, const ExposureOrder& ord);

// max_compare on the supports.
std::strong_ordering support_compare(const AlgebraElement& f, const AlgebraElement& g,
                                     const ExposureOrder& ord);

// Support sorted descending by ord (the canonical printing order).
std::vector<Word> support_descending(const AlgebraElement& f, const ExposureOrder& ord);

} // namespace fga

#endif
