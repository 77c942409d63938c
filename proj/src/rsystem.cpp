#include "fga/rsystem.hpp"

#include <algorithm>
#include <unordered_map>

namespace fga {

ReductionSystem::ReductionSystem(std::vector<AlgebraElement> elements, const ExposureOrder& ord)
    : elements_(std::move(elements)) {
    heads_.reserve(elements_.size());
    for (const auto& element : elements_) {
        if (element.is_zero())
            throw error("invalid_system", "reduction systems contain nonzero elements only");
        Word head = head_term(element, ord);
        if (head.is_identity())
            throw error("invalid_system", "reduction system elements must lie outside the field");
        if (!element.coefficient(head).is_one())
            throw error("invalid_system", "reduction system elements must be monic");
        heads_.push_back(std::move(head));
    }
}

std::optional<std::size_t> ReductionSystem::reducer_for(const Word& u) const {
    for (std::size_t i = 0; i < heads_.size(); ++i)
        if (is_prefix(heads_[i], u)) return i;
    return std::nullopt;
}

bool ReductionSystem::supported_on_transversal(const AlgebraElement& f) const {
    for (const auto& [word, coefficient] : f.terms())
        if (reducer_for(word)) return false;
    return true;
}

CrsReport check_crs(const ReductionSystem& system, const ExposureOrder& ord) {
    const auto& heads = system.heads();

    // The cached head terms must come from the same order the check runs
    // under; a system built under a different order fails here.
    for (std::size_t i = 0; i < system.size(); ++i)
        if (head_term(system.element(i), ord) != heads[i])
            return {false, 1,
                    "stored head term of element " + std::to_string(i) +
                        " is not the order-maximum under this order"};

    // Condition 1: distinct, pairwise prefix-incomparable head terms.
    for (std::size_t i = 0; i < heads.size(); ++i) {
        for (std::size_t j = i + 1; j < heads.size(); ++j) {
            if (heads[i] == heads[j])
                return {false, 1, "duplicate head term " + std::to_string(i) + "/" + std::to_string(j)};
            if (is_prefix(heads[i], heads[j]) || is_prefix(heads[j], heads[i]))
                return {false, 1,
                        "head terms " + std::to_string(i) + " and " + std::to_string(j) +
                            " are prefix-comparable"};
        }
    }

    // Condition 2: q * HTT(q)^-1 lies in the span of elements ending in the
    // opposite letter.
    for (std::size_t i = 0; i < system.size(); ++i) {
        const AlgebraElement& q = system.element(i);
        Letter b = last_letter(heads[i]);
        AlgebraElement target =
            right_translate(q, Word(q.alphabet(), b.inverse()));

        std::vector<const AlgebraElement*> candidates;
        for (std::size_t j = 0; j < system.size(); ++j)
            if (last_letter(heads[j]) == b.inverse()) candidates.push_back(&system.element(j));

        // Coordinatize over the union of supports.
        std::vector<Word> basis = target.support();
        for (const auto* candidate : candidates)
            for (const Word& word : candidate->support()) basis.push_back(word);
        std::sort(basis.begin(), basis.end(), detail::lex_key_less);
        basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

        auto vectorize = [&](const AlgebraElement& element) {
            std::vector<Scalar> v;
            v.reserve(basis.size());
            for (const Word& word : basis) v.push_back(element.coefficient(word));
            return v;
        };
        std::vector<std::vector<Scalar>> columns;
        columns.reserve(candidates.size());
        for (const auto* candidate : candidates) columns.push_back(vectorize(*candidate));

        if (!solve_linear(columns, vectorize(target), q.field()))
            return {false, 2,
                    "element " + std::to_string(i) +
                        " times its inverted tail is outside the span of opposite-tail elements"};
    }

    // Condition 3: supports live on the transversal and its neighbors.
    for (std::size_t i = 0; i < system.size(); ++i) {
        for (const auto& [word, coefficient] : system.element(i).terms()) {
            auto reducer = system.reducer_for(word);
            if (reducer && heads[*reducer] != word)
                return {false, 3,
                        "support word of element " + std::to_string(i) +
                            " lies strictly behind a head term"};
        }
    }

    return {true, 0, ""};
}

namespace {

// The reducible support words of r, in the fixed internal key order.
std::vector<Word> reducible_words(const AlgebraElement& r, const ReductionSystem& system) {
    std::vector<Word> words;
    for (const auto& [word, coefficient] : r.terms())
        if (system.reducer_for(word)) words.push_back(word);
    std::sort(words.begin(), words.end(), detail::lex_key_less);
    return words;
}

} // namespace

DivisionResult divide_with_remainder(const AlgebraElement& f, const ReductionSystem& system,
                                     const ExposureOrder& ord, const ReduciblePicker& picker) {
    DivisionResult result{std::vector<AlgebraElement>(
                              system.size(), AlgebraElement::zero(f.field(), f.alphabet())),
                          f, 0};
    AlgebraElement& r = result.remainder;

    while (true) {
        std::vector<Word> reducible = reducible_words(r, system);
        if (reducible.empty()) break;

        std::size_t chosen;
        if (picker) {
            chosen = picker(reducible);
            if (chosen >= reducible.size())
                throw error("invalid_picker", "reducible-word picker returned an invalid index");
        } else {
            chosen = 0;
            for (std::size_t i = 1; i < reducible.size(); ++i)
                if (ord.less(reducible[chosen], reducible[i])) chosen = i;
        }

        const Word& u = reducible[chosen];
        std::size_t qi = *system.reducer_for(u);
        Scalar gamma = r.coefficient(u);
        Word suffix = strip_prefix(system.head(qi), u);
        r = sub(r, scale(right_translate(system.element(qi), suffix), gamma));
        result.quotients[qi].add_term(suffix, gamma);
        ++result.steps;
    }
    return result;
}

AlgebraElement reduce_mod_transversal(const AlgebraElement& f, const ReductionSystem& system,
                                      const ExposureOrder& ord, std::size_t* steps) {
    AlgebraElement r = f;
    std::size_t count = 0;
    while (true) {
        std::vector<Word> reducible = reducible_words(r, system);
        if (reducible.empty()) break;
        std::size_t chosen = 0;
        for (std::size_t i = 1; i < reducible.size(); ++i)
            if (ord.less(reducible[chosen], reducible[i])) chosen = i;
        const Word& u = reducible[chosen];
        std::size_t qi = *system.reducer_for(u);
        Scalar gamma = r.coefficient(u);
        Word suffix = strip_prefix(system.head(qi), u);
        r = sub(r, scale(right_translate(system.element(qi), suffix), gamma));
        ++count;
    }
    if (steps) *steps += count;
    return r;
}

bool is_member(const AlgebraElement& f, const ReductionSystem& system, const ExposureOrder& ord) {
    return reduce_mod_transversal(f, system, ord).is_zero();
}

std::vector<Word> transversal_neighbors(const ReductionSystem& system) {
    return system.heads();
}

} // namespace fga
