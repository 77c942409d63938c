#include "fga/engine.hpp"

#include <cassert>

namespace fga {

const ReductionSystem& ExposureState::current_system() const {
    std::size_t size = firsts.size() + seconds.size();
    if (!cached_system_ || cached_size_ != size) {
        std::vector<AlgebraElement> elements = firsts;
        elements.insert(elements.end(), seconds.begin(), seconds.end());
        cached_system_.emplace(std::move(elements), *order);
        cached_size_ = size;
    }
    return *cached_system_;
}

SecondResult compute_second(const AlgebraElement& f, const ReductionSystem& system,
                            const ExposureOrder& ord, std::size_t* steps) {
    if (f.is_zero() || head_term(f, ord).is_identity())
        throw error("scalar_element", "seconds are defined for elements outside the field");
    if (!system.supported_on_transversal(f))
        throw error("not_on_transversal", "second of an element not supported on the transversal");

    Letter b = head_term_tail(f, ord);
    AlgebraElement pushed = right_translate(f, Word(f.alphabet(), b.inverse()));
    AlgebraElement reduced = reduce_mod_transversal(pushed, system, ord, steps);
    // Nonzero because f is supported on the transversal, hence outside the ideal.
    MonicResult m = monic(reduced, ord);
    return {std::move(m.element), std::move(m.leading_coefficient)};
}

namespace {

AlgebraElement unit_element(const Field& field, const Alphabet& alphabet) {
    return AlgebraElement::unit(field, alphabet);
}

void notify(const EngineHook& hook, const ExposureState& state, const AlgebraElement* current) {
    if (hook) hook(EngineSnapshot{state.firsts, state.seconds, current, state.pending});
}

} // namespace

ExtensionDecision is_exposure_extending(const AlgebraElement& f, ExposureState& state) {
    const ExposureOrder& ord = *state.order;

    AlgebraElement reduced = reduce_mod_transversal(f, state.current_system(), ord,
                                                    &state.stats.normalize_reduction_steps);
    if (reduced.is_zero()) {
        ++state.stats.discarded;
        return {ExtensionDecision::Kind::Discard, std::nullopt, std::nullopt};
    }
    AlgebraElement candidate = monic(reduced, ord).element;

    if (candidate.support_size() == 1)
        return {ExtensionDecision::Kind::Improper, std::nullopt, std::nullopt};

    // Demote the tail of firsts whose head terms exceed HT(candidate); their
    // seconds are dropped and recomputed when the elements are reprocessed.
    Word candidate_head = head_term(candidate, ord);
    std::size_t keep = state.firsts.size();
    while (keep > 0 && ord.less(candidate_head, head_term(state.firsts[keep - 1], ord))) --keep;
    if (keep < state.firsts.size()) {
        state.stats.demotions += state.firsts.size() - keep;
        state.pending.insert(state.pending.begin(),
                             state.firsts.begin() + static_cast<std::ptrdiff_t>(keep),
                             state.firsts.end());
        state.firsts.erase(state.firsts.begin() + static_cast<std::ptrdiff_t>(keep),
                           state.firsts.end());
        state.seconds.erase(state.seconds.begin() + static_cast<std::ptrdiff_t>(keep),
                            state.seconds.end());
    }

    SecondResult s = compute_second(candidate, state.current_system(), ord,
                                    &state.stats.second_reduction_steps);
    ++state.stats.seconds_computed;

    Word second_head = head_term(s.second, ord);
    if (ord.less(second_head, candidate_head)) {
        ++state.stats.replacements;
        return {ExtensionDecision::Kind::ReplaceWith, std::nullopt, std::move(s.second)};
    }
    assert(ord.less(candidate_head, second_head));
    return {ExtensionDecision::Kind::Extends, std::move(candidate), std::move(s.second)};
}

std::vector<AlgebraElement> BasisResult::groebner_basis() const {
    std::vector<AlgebraElement> elements = firsts;
    elements.insert(elements.end(), seconds.begin(), seconds.end());
    return elements;
}

std::vector<Word> BasisResult::forbidden_prefixes(const ExposureOrder& ord) const {
    std::vector<Word> heads;
    for (const auto& element : groebner_basis()) heads.push_back(head_term(element, ord));
    return heads;
}

ReductionSystem BasisResult::system(const ExposureOrder& ord) const {
    if (improper)
        throw error("improper_ideal", "the improper ideal has no reducing system");
    return ReductionSystem(groebner_basis(), ord);
}

BasisResult exposure_and_groebner(const std::vector<AlgebraElement>& generators, OrderPtr ord,
                                  const EngineHook& hook) {
    if (generators.empty()) return BasisResult{};
    Field field = generators.front().field();
    Alphabet alphabet = generators.front().alphabet();
    ExposureState state(field, alphabet, ord);
    for (const auto& generator : generators) {
        if (generator.field() != field)
            throw error("field_mismatch", "generators over different fields");
        if (generator.alphabet() != alphabet || generator.alphabet() != ord->alphabet())
            throw error("alphabet_mismatch", "generators over different alphabets");
        if (!generator.is_zero()) state.pending.push_back(generator);
    }

    auto make_improper = [&]() {
        BasisResult result;
        result.improper = true;
        result.firsts = {unit_element(field, alphabet)};
        result.seconds = {unit_element(field, alphabet)};
        result.stats = state.stats;
        return result;
    };

    while (!state.pending.empty()) {
        AlgebraElement f = state.pending.front();
        state.pending.pop_front();
        notify(hook, state, &f);

        while (true) {
            ExtensionDecision decision = is_exposure_extending(f, state);
            if (decision.kind == ExtensionDecision::Kind::Discard) break;
            if (decision.kind == ExtensionDecision::Kind::Improper) return make_improper();
            if (decision.kind == ExtensionDecision::Kind::ReplaceWith) {
                f = std::move(*decision.element);
                notify(hook, state, &f);
                continue;
            }
            state.firsts.push_back(std::move(*decision.candidate));
            state.seconds.push_back(std::move(*decision.element));
            break;
        }
        notify(hook, state, nullptr);
    }

    BasisResult result;
    result.firsts = std::move(state.firsts);
    result.seconds = std::move(state.seconds);
    result.stats = state.stats;
    return result;
}

BasisResult orbit_reduction(const AlgebraElement& h, OrderPtr ord,
                            std::vector<AlgebraElement>* intermediate_seconds) {
    const ExposureOrder& order = *ord;
    BasisResult result;
    if (h.is_zero()) return result;

    if (h.support_size() == 1) {
        result.improper = true;
        result.firsts = {unit_element(h.field(), h.alphabet())};
        result.seconds = {unit_element(h.field(), h.alphabet())};
        return result;
    }

    AlgebraElement f = monic(h, order).element;
    while (true) {
        // The second over the zero ideal is just the monic right shift;
        // the support size is preserved throughout.
        Letter b = head_term_tail(f, order);
        AlgebraElement shifted = right_translate(f, Word(f.alphabet(), b.inverse()));
        AlgebraElement s = monic(shifted, order).element;
        ++result.stats.seconds_computed;
        if (intermediate_seconds) intermediate_seconds->push_back(s);

        if (order.less(head_term(s, order), head_term(f, order))) {
            ++result.stats.replacements;
            f = std::move(s);
            continue;
        }
        result.firsts = {std::move(f)};
        result.seconds = {std::move(s)};
        return result;
    }
}

} // namespace fga
