#ifndef FGA_TEXT_HPP
#define FGA_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fga/algebra.hpp"
#include "fga/orders.hpp"
#include "fga/scalars.hpp"
#include "fga/words.hpp"

namespace fga {

// Word grammar: `e` for the identity, otherwise `*`-separated factors, each
// `name` or `name^k` with a nonzero integer k. Parsing freely reduces.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w);

// A single letter: `name` or `name^-1`.
Letter parse_letter(std::string_view text, const Alphabet& alphabet);
std::string format_letter(const Alphabet& alphabet, Letter letter);

// Scalar grammar: integers; `a/b` fractions over the rationals.
Scalar parse_scalar(std::string_view text, const Field& field);

// Element grammar: a signed sum of terms `[coef*]word` or bare coefficients,
// e.g. `y^-2 + y + x`, `2*x*y^-1 - 3`, `x - 1`.
AlgebraElement parse_element(std::string_view text, const Field& field, const Alphabet& alphabet);

// Prints terms in descending order of the given exposure order; parses back
// to an equal element.
std::string format_element(const AlgebraElement& f, const ExposureOrder& ord);

// Field spec: `q` or `fp:<p>`.
Field parse_field_spec(std::string_view text);
std::string format_field_spec(const Field& field);

struct OrderSpec {
    OrderPtr order;
    Alphabet alphabet;
};

// Order spec strings:
//   shortlex:<letters ascending, comma-separated>
//   weighted:<letter=w1|w2|...,...>;tie=<letters>
//   treesum:forbidden=<word,...>;base=<order spec>
//   lewin:forbidden=<word,...>;base=<letters>
// The alphabet is inferred from the generator names appearing in the spec.
OrderSpec parse_order_spec(std::string_view text);

} // namespace fga

#endif
