#ifndef FGA_EXPRESS_HPP
#define FGA_EXPRESS_HPP

#include <vector>

#include "fga/engine.hpp"

namespace fga {

// An m x m matrix over the group algebra. Column i is built from row indices
// <= i only, so entry (j, i) with j > i is zero.
struct AlgebraMatrix {
    std::vector<std::vector<AlgebraElement>> entries; // entries[row][column]

    std::size_t size() const { return entries.size(); }
    const AlgebraElement& at(std::size_t row, std::size_t column) const {
        return entries[row][column];
    }
};

struct MatrixCResult {
    AlgebraMatrix matrix;
    std::vector<AlgebraElement> seconds;
};

// Computes the matrix C with (s_0, ..., s_{m-1}) = (f_0, ..., f_{m-1}) * C,
// where s_i is the second of f_i relative to the subsystem generated by the
// preceding basis elements. The basis must be a valid exposure basis in
// ascending order, as produced by the engine; [1] (the improper ideal) is
// rejected.
MatrixCResult compute_matrix_c(const std::vector<AlgebraElement>& basis, const ExposureOrder& ord);

// Expresses a member h of the ideal as h = sum_i basis_i * coefficient_i,
// returning the unique free-module coordinates. Throws membership_error
// carrying the nonzero remainder when h is not a member. For the improper
// ideal (basis == [1]) the single coordinate is h itself.
std::vector<AlgebraElement> express(const AlgebraElement& h,
                                    const std::vector<AlgebraElement>& basis,
                                    const AlgebraMatrix& matrix_c, const ExposureOrder& ord);

} // namespace fga

#endif
