#ifndef FGA_ORDERS_HPP
#define FGA_ORDERS_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fga/words.hpp"

namespace fga {

// A total-order oracle on reduced words satisfying the prefix condition:
// whenever u is a prefix of v, u precedes v. Algorithms treat instances as
// opaque comparison oracles and never inspect their internals. Validity
// (well-ordering in particular) is the caller's obligation; the constructors
// below all produce valid orders, and validate_order() checks the finitely
// testable part of the contract up to a length bound.
class ExposureOrder {
public:
    virtual ~ExposureOrder() = default;

    std::strong_ordering compare(const Word& u, const Word& v) const {
        if (u.alphabet() != alphabet_ || v.alphabet() != alphabet_)
            throw error("alphabet_mismatch", "comparing words over a different alphabet");
        return do_compare(u, v);
    }

    const Alphabet& alphabet() const { return alphabet_; }
    bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }

protected:
    explicit ExposureOrder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
    virtual std::strong_ordering do_compare(const Word& u, const Word& v) const = 0;

private:
    Alphabet alphabet_;
};

using OrderPtr = std::shared_ptr<const ExposureOrder>;

// The prefix-closed set T = { w : no forbidden word is a prefix of w },
// described by its finite boundary. The forbidden words must be nonempty and
// pairwise prefix-incomparable, making them exactly the prefix-neighbors of T.
class PrefixTree {
public:
    PrefixTree() = default; // T = F
    explicit PrefixTree(std::vector<Word> forbidden);

    bool contains(const Word& w) const;
    const std::vector<Word>& forbidden() const { return forbidden_; }

private:
    std::vector<Word> forbidden_;
};

bool prefix_tree_membership(const Word& w, const PrefixTree& tree);

// Shortest words first, ties broken lexicographically by the given ranking of
// all 2*rank letters (ascending).
OrderPtr shortlex(const Alphabet& alphabet, const std::vector<Letter>& ascending_letters);

// Compares by the sum of per-letter weight vectors (lexicographically on
// Z^d), breaking ties by shortlex. Weight vectors are indexed by letter code
// and must be nonzero with positive first nonzero entry.
OrderPtr weighted_shortlex(const Alphabet& alphabet,
                           const std::vector<std::vector<std::int64_t>>& weights_by_letter_code,
                           const std::vector<Letter>& tie_ranking);

// Every word of T precedes every word outside it; the base order decides
// within each part.
OrderPtr tree_sum(OrderPtr base, PrefixTree tree);

// Three bands: T, then the prefix-neighbors of T ending in a positive letter,
// then everything else; the base shortlex order decides within bands.
OrderPtr lewin_order(OrderPtr base_shortlex, PrefixTree tree);

// Compares finite word sets by the order-maximum of their symmetric
// difference; equality iff the sets are equal.
std::strong_ordering max_compare(const std::vector<Word>& a, const std::vector<Word>& b,
                                 const ExposureOrder& ord);

struct OrderValidation {
    bool valid = true;
    std::string message; // first violation found, empty when valid
};

// Exhaustively checks totality, antisymmetry, minimality of e, and the
// prefix condition over all reduced words of length <= max_length.
OrderValidation validate_order(const ExposureOrder& ord, std::size_t max_length);

// All reduced words of length <= radius, in a fixed deterministic order
// starting from e.
std::vector<Word> enumerate_ball(const Alphabet& alphabet, std::size_t radius);

} // namespace fga

#endif
