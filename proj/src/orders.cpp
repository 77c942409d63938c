#include "fga/orders.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace fga {

PrefixTree::PrefixTree(std::vector<Word> forbidden) : forbidden_(std::move(forbidden)) {
    for (const auto& word : forbidden_)
        if (word.is_identity())
            throw error("invalid_prefix_tree", "forbidden words must be nonempty");
    for (std::size_t i = 0; i < forbidden_.size(); ++i)
        for (std::size_t j = 0; j < forbidden_.size(); ++j)
            if (i != j && is_prefix(forbidden_[i], forbidden_[j]))
                throw error("invalid_prefix_tree",
                            "forbidden words must be pairwise prefix-incomparable");
}

bool PrefixTree::contains(const Word& w) const {
    for (const auto& banned : forbidden_)
        if (is_prefix(banned, w)) return false;
    return true;
}

bool prefix_tree_membership(const Word& w, const PrefixTree& tree) { return tree.contains(w); }

namespace {

class ShortlexOrder final : public ExposureOrder {
public:
    ShortlexOrder(Alphabet alphabet, std::vector<std::uint32_t> rank_of_code)
        : ExposureOrder(std::move(alphabet)), rank_of_code_(std::move(rank_of_code)) {}

    std::strong_ordering do_compare(const Word& u, const Word& v) const override {
        if (u.length() != v.length()) return u.length() <=> v.length();
        for (std::size_t i = 0; i < u.length(); ++i) {
            std::uint32_t ru = rank_of_code_[u.letters()[i].code()];
            std::uint32_t rv = rank_of_code_[v.letters()[i].code()];
            if (ru != rv) return ru <=> rv;
        }
        return std::strong_ordering::equal;
    }

private:
    std::vector<std::uint32_t> rank_of_code_;
};

class WeightedShortlexOrder final : public ExposureOrder {
public:
    WeightedShortlexOrder(Alphabet alphabet, std::vector<std::vector<std::int64_t>> weights,
                          OrderPtr tie)
        : ExposureOrder(std::move(alphabet)), weights_(std::move(weights)), tie_(std::move(tie)) {}

    std::strong_ordering do_compare(const Word& u, const Word& v) const override {
        std::vector<std::int64_t> wu = weight_of(u);
        std::vector<std::int64_t> wv = weight_of(v);
        if (wu != wv) return wu < wv ? std::strong_ordering::less : std::strong_ordering::greater;
        return tie_->compare(u, v);
    }

private:
    std::vector<std::int64_t> weight_of(const Word& w) const {
        std::vector<std::int64_t> total(weights_.front().size(), 0);
        for (Letter letter : w.letters()) {
            const auto& entry = weights_[letter.code()];
            for (std::size_t i = 0; i < total.size(); ++i) total[i] += entry[i];
        }
        return total;
    }

    std::vector<std::vector<std::int64_t>> weights_;
    OrderPtr tie_;
};

class TreeSumOrder final : public ExposureOrder {
public:
    TreeSumOrder(OrderPtr base, PrefixTree tree)
        : ExposureOrder(base->alphabet()), base_(std::move(base)), tree_(std::move(tree)) {}

    std::strong_ordering do_compare(const Word& u, const Word& v) const override {
        bool iu = tree_.contains(u);
        bool iv = tree_.contains(v);
        if (iu != iv) return iu ? std::strong_ordering::less : std::strong_ordering::greater;
        return base_->compare(u, v);
    }

private:
    OrderPtr base_;
    PrefixTree tree_;
};

class LewinOrder final : public ExposureOrder {
public:
    LewinOrder(OrderPtr base, PrefixTree tree)
        : ExposureOrder(base->alphabet()), base_(std::move(base)), tree_(std::move(tree)) {}

    std::strong_ordering do_compare(const Word& u, const Word& v) const override {
        int bu = band(u);
        int bv = band(v);
        if (bu != bv) return bu <=> bv;
        return base_->compare(u, v);
    }

private:
    // 0: inside T; 1: prefix-neighbor ending in a positive letter; 2: rest.
    int band(const Word& w) const {
        if (tree_.contains(w)) return 0;
        for (const auto& banned : tree_.forbidden())
            if (w == banned) return last_letter(w).sign > 0 ? 1 : 2;
        return 2;
    }

    OrderPtr base_;
    PrefixTree tree_;
};

} // namespace

OrderPtr shortlex(const Alphabet& alphabet, const std::vector<Letter>& ascending_letters) {
    const std::size_t letter_count = alphabet.rank() * 2;
    if (ascending_letters.size() != letter_count)
        throw error("incomplete_ranking", "shortlex ranking must list every letter exactly once");
    std::vector<std::uint32_t> rank_of_code(letter_count, UINT32_MAX);
    for (std::size_t i = 0; i < ascending_letters.size(); ++i) {
        Letter letter = ascending_letters[i];
        if (letter.generator_index >= alphabet.rank())
            throw error("incomplete_ranking", "ranking letter outside the alphabet");
        if (rank_of_code[letter.code()] != UINT32_MAX)
            throw error("incomplete_ranking", "ranking lists a letter twice");
        rank_of_code[letter.code()] = static_cast<std::uint32_t>(i);
    }
    return std::make_shared<ShortlexOrder>(alphabet, std::move(rank_of_code));
}

OrderPtr weighted_shortlex(const Alphabet& alphabet,
                           const std::vector<std::vector<std::int64_t>>& weights_by_letter_code,
                           const std::vector<Letter>& tie_ranking) {
    const std::size_t letter_count = alphabet.rank() * 2;
    if (weights_by_letter_code.size() != letter_count)
        throw error("invalid_weights", "one weight vector per letter is required");
    const std::size_t dimension = weights_by_letter_code.front().size();
    if (dimension == 0) throw error("invalid_weights", "weight vectors must be nonempty");
    for (const auto& weight : weights_by_letter_code) {
        if (weight.size() != dimension)
            throw error("invalid_weights", "weight vectors must share one dimension");
        auto first_nonzero = std::find_if(weight.begin(), weight.end(),
                                          [](std::int64_t x) { return x != 0; });
        if (first_nonzero == weight.end())
            throw error("invalid_weights", "zero weight vector");
        if (*first_nonzero < 0)
            throw error("invalid_weights", "first nonzero weight entry must be positive");
    }
    OrderPtr tie = shortlex(alphabet, tie_ranking);
    return std::make_shared<WeightedShortlexOrder>(alphabet, weights_by_letter_code,
                                                   std::move(tie));
}

OrderPtr tree_sum(OrderPtr base, PrefixTree tree) {
    return std::make_shared<TreeSumOrder>(std::move(base), std::move(tree));
}

OrderPtr lewin_order(OrderPtr base_shortlex, PrefixTree tree) {
    return std::make_shared<LewinOrder>(std::move(base_shortlex), std::move(tree));
}

std::strong_ordering max_compare(const std::vector<Word>& a, const std::vector<Word>& b,
                                 const ExposureOrder& ord) {
    auto by_ord = [&ord](const Word& u, const Word& v) { return ord.less(u, v); };
    std::vector<Word> sa = a;
    std::vector<Word> sb = b;
    std::sort(sa.begin(), sa.end(), by_ord);
    std::sort(sb.begin(), sb.end(), by_ord);
    sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
    sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
    // Walk both sets downward from their maxima; the first one-sided word
    // is the maximum of the symmetric difference.
    auto ia = sa.rbegin();
    auto ib = sb.rbegin();
    while (ia != sa.rend() && ib != sb.rend()) {
        auto cmp = ord.compare(*ia, *ib);
        if (cmp == 0) {
            ++ia;
            ++ib;
        } else if (cmp > 0) {
            return std::strong_ordering::greater; // max of difference lies in a
        } else {
            return std::strong_ordering::less;
        }
    }
    if (ia != sa.rend()) return std::strong_ordering::greater;
    if (ib != sb.rend()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::vector<Word> enumerate_ball(const Alphabet& alphabet, std::size_t radius) {
    std::vector<Word> words;
    words.emplace_back(alphabet);
    std::size_t layer_begin = 0;
    for (std::size_t length = 1; length <= radius; ++length) {
        std::size_t layer_end = words.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
            for (std::uint32_t code = 0; code < alphabet.rank() * 2; ++code) {
                Letter letter(code / 2, code % 2 == 0 ? 1 : -1);
                const Word& base = words[i];
                if (!base.is_identity() && last_letter(base) == letter.inverse()) continue;
                words.push_back(concat(base, Word(alphabet, letter)));
            }
        }
        layer_begin = layer_end;
    }
    return words;
}

OrderValidation validate_order(const ExposureOrder& ord, std::size_t max_length) {
    std::vector<Word> words = enumerate_ball(ord.alphabet(), max_length);
    Word identity(ord.alphabet());
    for (const auto& w : words) {
        if (ord.compare(identity, w) > 0)
            return {false, "identity is not minimal"};
        if (!w.is_identity() && ord.compare(w, w) != 0)
            return {false, "comparison is not reflexive"};
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            auto ab = ord.compare(words[i], words[j]);
            auto ba = ord.compare(words[j], words[i]);
            if (ab == 0 || ba == 0 || (ab < 0) == (ba < 0))
                return {false, "order is not total/antisymmetric on a sampled pair"};
        }
    }
    for (const auto& w : words) {
        for (std::size_t len = 0; len < w.length(); ++len) {
            Word prefix = Word::reduced(ord.alphabet(),
                                        {w.letters().begin(),
                                         w.letters().begin() + static_cast<std::ptrdiff_t>(len)});
            if (ord.compare(prefix, w) >= 0)
                return {false, "prefix condition fails on a sampled pair"};
        }
    }
    return {true, ""};
}

} // namespace fga
