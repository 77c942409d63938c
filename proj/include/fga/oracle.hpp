#ifndef FGA_ORACLE_HPP
#define FGA_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "fga/algebra.hpp"

namespace fga {

// All reduced words of length <= radius.
struct Ball {
    std::size_t radius = 0;
    std::vector<Word> words;

    Ball(const Alphabet& alphabet, std::size_t radius);
};

enum class OracleAnswer { Yes, NotWithinRadius };

// Independent membership check: decides whether f lies in the span of
// { g * w : g a generator, w in the ball of the given radius } by exact
// incremental Gaussian elimination. A Yes is a certificate of membership in
// the right ideal; NotWithinRadius is inconclusive. Shares nothing with the
// rewriting machinery, so it can cross-validate it.
class MembershipOracle {
public:
    static constexpr std::size_t kDefaultColumnCap = 50000;

    MembershipOracle(const std::vector<AlgebraElement>& generators, std::size_t radius,
                     std::size_t column_cap = kDefaultColumnCap);

    bool contains(const AlgebraElement& f) const;
    std::size_t column_count() const { return column_count_; }

private:
    struct Entry {
        std::size_t row;
        Scalar value;
    };
    using SparseVector = std::vector<Entry>; // sorted by row

    std::size_t row_of(const Word& word);
    SparseVector vectorize(const AlgebraElement& f) const;
    SparseVector reduce(SparseVector vector) const;
    void insert(SparseVector vector);

    Field field_;
    Alphabet alphabet_;
    std::size_t column_count_ = 0;
    std::unordered_map<Word, std::size_t, WordHash> row_index_;
    std::vector<SparseVector> pivots_; // pivots_[i] empty or normalized with leading row i
};

// One-shot convenience wrapper around MembershipOracle.
OracleAnswer brute_force_member(const AlgebraElement& f,
                                const std::vector<AlgebraElement>& generators, std::size_t radius,
                                std::size_t column_cap = MembershipOracle::kDefaultColumnCap);

} // namespace fga

#endif
