#ifndef FGA_ENGINE_HPP
#define FGA_ENGINE_HPP

#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "fga/rsystem.hpp"

namespace fga {

// Step counters for the basis computation, split by phase.
struct EngineStats {
    std::size_t normalize_reduction_steps = 0; // rewriting candidates onto the transversal
    std::size_t second_reduction_steps = 0;    // rewriting inside second computations
    std::size_t seconds_computed = 0;
    std::size_t replacements = 0; // candidate replaced by its second
    std::size_t demotions = 0;    // basis elements moved back to the pending queue
    std::size_t discarded = 0;    // candidates that reduced to zero
};

// Live state of the exposure process: the current basis ("firsts") with
// strictly increasing head terms, their parallel "seconds", and the queue of
// unprocessed generators. firsts + seconds always form a valid CRS for the
// ideal the firsts generate.
struct ExposureState {
    Field field;
    Alphabet alphabet;
    OrderPtr order;
    std::vector<AlgebraElement> firsts;
    std::vector<AlgebraElement> seconds;
    std::deque<AlgebraElement> pending;
    EngineStats stats;

    ExposureState(Field f, Alphabet a, OrderPtr o)
        : field(std::move(f)), alphabet(std::move(a)), order(std::move(o)) {}

    // The CRS formed by firsts followed by seconds. Cached between calls and
    // rebuilt when the basis length changes (append/demotion), so repeated
    // candidate passes do not copy the system. The returned reference is
    // invalidated by the next mutation of firsts/seconds.
    const ReductionSystem& current_system() const;

private:
    mutable std::optional<ReductionSystem> cached_system_;
    mutable std::size_t cached_size_ = static_cast<std::size_t>(-1);
};

// The second of f relative to the CRS: the monic normal form of f * HTT(f)^-1,
// together with the pre-monic leading coefficient mu. Requires f monic,
// outside K, supported on the system's transversal, and the system valid.
struct SecondResult {
    AlgebraElement second;
    Scalar mu;
};
SecondResult compute_second(const AlgebraElement& f, const ReductionSystem& system,
                            const ExposureOrder& ord, std::size_t* steps = nullptr);

// Outcome of feeding one candidate through a single pass of the inner loop.
struct ExtensionDecision {
    enum class Kind { Extends, ReplaceWith, Discard, Improper } kind;
    std::optional<AlgebraElement> candidate; // the reduced monic candidate (Extends)
    std::optional<AlgebraElement> element;   // the second (Extends / ReplaceWith)
};

// One pass of the inner loop for one candidate: reduce f onto the current
// transversal (Discard when zero), make it monic, detect the improper ideal
// (single-word support), demote the tail of firsts whose head terms exceed
// HT(f) back to the front of the pending queue, compute the second s, and
// decide: Extends when HT(s) > HT(f), ReplaceWith(s) otherwise. Mutates the
// state (demotion and counters only).
ExtensionDecision is_exposure_extending(const AlgebraElement& f, ExposureState& state);

// Output of the basis algorithms. For a proper nonzero ideal, the firsts form
// a free-module basis and firsts + seconds form a CRS; for the improper ideal
// both lists collapse to [1].
struct BasisResult {
    bool improper = false;
    std::vector<AlgebraElement> firsts;
    std::vector<AlgebraElement> seconds;
    EngineStats stats;

    std::size_t rank() const { return firsts.size(); }
    std::vector<AlgebraElement> groebner_basis() const;
    std::vector<Word> forbidden_prefixes(const ExposureOrder& ord) const;
    ReductionSystem system(const ExposureOrder& ord) const; // rejects improper
};

// Snapshot hook for instrumentation: called after every state mutation while
// processing a candidate.
struct EngineSnapshot {
    const std::vector<AlgebraElement>& firsts;
    const std::vector<AlgebraElement>& seconds;
    const AlgebraElement* current; // nullptr between candidates
    const std::deque<AlgebraElement>& pending;
};
using EngineHook = std::function<void(const EngineSnapshot&)>;

// Computes the basis and the full reducing system of the right ideal
// generated by the inputs. Zero generators are discarded silently.
BasisResult exposure_and_groebner(const std::vector<AlgebraElement>& generators, OrderPtr ord,
                                  const EngineHook& hook = nullptr);

// Single-generator specialization: only right multiplications by units occur,
// so the support size never changes and no transversal reductions are needed.
// intermediate_seconds, when given, records every second computed along the
// way (the replacement chain followed by the final second).
BasisResult orbit_reduction(const AlgebraElement& h, OrderPtr ord,
                            std::vector<AlgebraElement>* intermediate_seconds = nullptr);

} // namespace fga

#endif
