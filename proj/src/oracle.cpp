#include "fga/oracle.hpp"

#include <algorithm>

#include "fga/orders.hpp"

namespace fga {

Ball::Ball(const Alphabet& alphabet, std::size_t ball_radius)
    : radius(ball_radius), words(enumerate_ball(alphabet, ball_radius)) {}

MembershipOracle::MembershipOracle(const std::vector<AlgebraElement>& generators,
                                   std::size_t radius, std::size_t column_cap)
    : field_(generators.empty() ? Field::rationals() : generators.front().field()),
      alphabet_(generators.empty() ? Alphabet({"x"}) : generators.front().alphabet()) {
    for (const auto& generator : generators) {
        if (generator.field() != field_)
            throw error("field_mismatch", "oracle generators over different fields");
        if (generator.alphabet() != alphabet_)
            throw error("alphabet_mismatch", "oracle generators over different alphabets");
    }

    std::vector<const AlgebraElement*> nonzero;
    for (const auto& generator : generators)
        if (!generator.is_zero()) nonzero.push_back(&generator);
    if (nonzero.empty()) return;

    Ball ball(alphabet_, radius);
    const std::size_t total = nonzero.size() * ball.words.size();
    if (total > column_cap)
        throw error("column_cap_exceeded",
                    "oracle would need " + std::to_string(total) + " columns; cap is " +
                        std::to_string(column_cap));

    for (const auto* generator : nonzero) {
        for (const Word& w : ball.words) {
            AlgebraElement column = right_translate(*generator, w);
            ++column_count_;
            SparseVector vector;
            vector.reserve(column.support_size());
            for (const Word& word : column.support())
                vector.push_back({row_of(word), column.coefficient(word)});
            std::sort(vector.begin(), vector.end(),
                      [](const Entry& a, const Entry& b) { return a.row < b.row; });
            insert(reduce(std::move(vector)));
        }
    }
}

std::size_t MembershipOracle::row_of(const Word& word) {
    auto [it, inserted] = row_index_.emplace(word, row_index_.size());
    return it->second;
}

MembershipOracle::SparseVector MembershipOracle::vectorize(const AlgebraElement& f) const {
    // Callers guarantee every support word already has a row.
    SparseVector vector;
    vector.reserve(f.support_size());
    for (const Word& word : f.support())
        vector.push_back({row_index_.at(word), f.coefficient(word)});
    std::sort(vector.begin(), vector.end(),
              [](const Entry& a, const Entry& b) { return a.row < b.row; });
    return vector;
}

MembershipOracle::SparseVector MembershipOracle::reduce(SparseVector vector) const {
    while (!vector.empty()) {
        std::size_t lead = vector.front().row;
        if (lead >= pivots_.size() || pivots_[lead].empty()) return vector;
        Scalar factor = vector.front().value;
        // vector -= factor * pivot (pivot is normalized at its leading row)
        const SparseVector& pivot = pivots_[lead];
        SparseVector merged;
        merged.reserve(vector.size() + pivot.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < vector.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < vector.size() && vector[i].row < pivot[j].row)) {
                merged.push_back(vector[i++]);
            } else if (i == vector.size() || pivot[j].row < vector[i].row) {
                merged.push_back({pivot[j].row, -(factor * pivot[j].value)});
                ++j;
            } else {
                Scalar value = vector[i].value - factor * pivot[j].value;
                if (!value.is_zero()) merged.push_back({vector[i].row, value});
                ++i;
                ++j;
            }
        }
        vector = std::move(merged);
    }
    return vector;
}

void MembershipOracle::insert(SparseVector vector) {
    if (vector.empty()) return;
    Scalar inv = vector.front().value.inverse();
    for (Entry& entry : vector) entry.value = entry.value * inv;
    std::size_t lead = vector.front().row;
    if (pivots_.size() <= lead) pivots_.resize(lead + 1);
    pivots_[lead] = std::move(vector);
}

bool MembershipOracle::contains(const AlgebraElement& f) const {
    if (f.is_zero()) return true;
    if (column_count_ == 0) return false;
    if (f.field() != field_ || f.alphabet() != alphabet_)
        throw error("field_mismatch", "oracle query over a different field or alphabet");
    for (const Word& word : f.support())
        if (row_index_.find(word) == row_index_.end()) return false;
    return reduce(vectorize(f)).empty();
}

OracleAnswer brute_force_member(const AlgebraElement& f,
                                const std::vector<AlgebraElement>& generators, std::size_t radius,
                                std::size_t column_cap) {
    if (f.is_zero()) return OracleAnswer::Yes;
    MembershipOracle oracle(generators, radius, column_cap);
    return oracle.contains(f) ? OracleAnswer::Yes : OracleAnswer::NotWithinRadius;
}

} // namespace fga
