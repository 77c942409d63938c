#ifndef FGA_RSYSTEM_HPP
#define FGA_RSYSTEM_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fga/algebra.hpp"
#include "fga/orders.hpp"

namespace fga {

// An ordered collection of monic elements outside K, indexed by their head
// terms. When the three combinatorial conditions checked by check_crs hold,
// the system is a combinatorially reducing system (CRS): its head terms cut
// the minimal Schreier transversal T_I out of the Cayley tree, and reduction
// against it computes canonical coset representatives.
class ReductionSystem {
public:
    // Elements must be monic with head term != e; the order fixes head terms.
    ReductionSystem(std::vector<AlgebraElement> elements, const ExposureOrder& ord);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const std::vector<AlgebraElement>& elements() const { return elements_; }
    const AlgebraElement& element(std::size_t i) const { return elements_[i]; }
    const Word& head(std::size_t i) const { return heads_[i]; }
    const std::vector<Word>& heads() const { return heads_; }

    // Index of the unique element whose head term is a prefix of u, if any.
    std::optional<std::size_t> reducer_for(const Word& u) const;

    // True iff no head term is a prefix of any word of f's support, i.e. f is
    // supported on the transversal the head terms define.
    bool supported_on_transversal(const AlgebraElement& f) const;

private:
    std::vector<AlgebraElement> elements_;
    std::vector<Word> heads_;
};

struct CrsReport {
    bool valid = true;
    int violated_condition = 0; // 1, 2 or 3 when invalid
    std::string witness;        // human-readable description of the violation
};

// Checks the three CRS conditions:
//   1. distinct, pairwise prefix-incomparable head terms;
//   2. for each q with b = HTT(q), q*b^-1 lies in the K-span of the elements
//      whose head term tail is b^-1 (decided by exact linear solving);
//   3. every support word either avoids all head terms as prefixes or equals
//      one of them.
// Returns the first violated condition with a witness.
CrsReport check_crs(const ReductionSystem& system, const ExposureOrder& ord);

// Chooses which reducible support word to rewrite next; receives the
// reducible words in a deterministic internal order. The default policy picks
// the order-greatest word. The result of reduction and division does not
// depend on the policy (decomposition is unique); the knob exists so tests
// can exercise that invariant.
using ReduciblePicker = std::function<std::size_t(const std::vector<Word>&)>;

struct DivisionResult {
    std::vector<AlgebraElement> quotients; // parallel to the system's elements
    AlgebraElement remainder;
    std::size_t steps = 0;
};

// Division with remainder: f = sum_i element_i * quotient_i + remainder with
// the remainder supported on the transversal and each quotient supported on
// words that do not cancel into the corresponding head term.
// Requires check_crs(system) valid.
DivisionResult divide_with_remainder(const AlgebraElement& f, const ReductionSystem& system,
                                     const ExposureOrder& ord,
                                     const ReduciblePicker& picker = nullptr);

// The remainder alone: the canonical representative of f's coset supported on
// the minimal Schreier transversal. Requires check_crs(system) valid.
AlgebraElement reduce_mod_transversal(const AlgebraElement& f, const ReductionSystem& system,
                                      const ExposureOrder& ord, std::size_t* steps = nullptr);

// f lies in the right ideal generated by the system iff its remainder is 0.
bool is_member(const AlgebraElement& f, const ReductionSystem& system, const ExposureOrder& ord);

// The forbidden-prefix set, i.e. the prefix-neighbors of the transversal.
std::vector<Word> transversal_neighbors(const ReductionSystem& system);

// Membership failure diagnostic: thrown where a member element was required.
class membership_error : public error {
public:
    membership_error(const std::string& message, AlgebraElement remainder)
        : error("not_a_member", message), remainder_(std::move(remainder)) {}

    const AlgebraElement& remainder() const { return remainder_; }

private:
    AlgebraElement remainder_;
};

} // namespace fga

#endif
