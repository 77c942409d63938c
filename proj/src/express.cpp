#include "fga/express.hpp"

namespace fga {

namespace {

bool is_unit_basis(const std::vector<AlgebraElement>& basis) {
    return basis.size() == 1 && basis[0].support_size() == 1 &&
           basis[0].coefficient(Word(basis[0].alphabet())).is_one();
}

} // namespace

MatrixCResult compute_matrix_c(const std::vector<AlgebraElement>& basis,
                               const ExposureOrder& ord) {
    if (is_unit_basis(basis))
        throw error("improper_ideal", "the improper ideal has no change-of-basis matrix");

    const std::size_t m = basis.size();
    MatrixCResult result;
    if (m == 0) return result;

    const Field field = basis.front().field();
    const Alphabet alphabet = basis.front().alphabet();
    result.matrix.entries.assign(
        m, std::vector<AlgebraElement>(m, AlgebraElement::zero(field, alphabet)));
    auto& c = result.matrix.entries;
    auto& seconds = result.seconds;

    for (std::size_t i = 0; i < m; ++i) {
        Letter b = head_term_tail(basis[i], ord);

        // CRS for the ideal generated by the first i basis elements.
        std::vector<AlgebraElement> subsystem(basis.begin(),
                                              basis.begin() + static_cast<std::ptrdiff_t>(i));
        subsystem.insert(subsystem.end(), seconds.begin(), seconds.end());
        ReductionSystem system(std::move(subsystem), ord);

        Word b_inverse(alphabet, b.inverse());
        DivisionResult division =
            divide_with_remainder(right_translate(basis[i], b_inverse), system, ord);

        MonicResult normal = monic(division.remainder, ord);
        Scalar mu_inverse = normal.leading_coefficient.inverse();
        seconds.push_back(std::move(normal.element));

        // Column i realizes s_i = mu^-1 (f_i b^-1 - sum_j f_j g_fj - sum_j s_j g_sj).
        c[i][i] = add(c[i][i], AlgebraElement::monomial(field, b_inverse, mu_inverse));
        for (std::size_t j = 0; j < i; ++j) {
            const AlgebraElement& g_f = division.quotients[j];
            const AlgebraElement& g_s = division.quotients[i + j];
            c[j][i] = sub(c[j][i], scale(g_f, mu_inverse));
            AlgebraElement factor = scale(g_s, mu_inverse);
            if (factor.is_zero()) continue;
            for (std::size_t k = 0; k < m; ++k)
                c[k][i] = sub(c[k][i], multiply(c[k][j], factor));
        }
    }
    return result;
}

std::vector<AlgebraElement> express(const AlgebraElement& h,
                                    const std::vector<AlgebraElement>& basis,
                                    const AlgebraMatrix& matrix_c, const ExposureOrder& ord) {
    if (is_unit_basis(basis)) return {h};

    const std::size_t m = basis.size();
    if (m == 0) {
        if (!h.is_zero())
            throw membership_error("nonzero element is not a member of the zero ideal", h);
        return {};
    }
    if (matrix_c.size() != m)
        throw error("dimension_mismatch", "change-of-basis matrix does not match the basis");

    // Recover the seconds from the matrix identity and divide by the full CRS.
    std::vector<AlgebraElement> elements = basis;
    for (std::size_t i = 0; i < m; ++i) {
        AlgebraElement second = AlgebraElement::zero(h.field(), h.alphabet());
        for (std::size_t j = 0; j < m; ++j)
            second = add(second, multiply(basis[j], matrix_c.at(j, i)));
        elements.push_back(std::move(second));
    }
    ReductionSystem system(std::move(elements), ord);

    DivisionResult division = divide_with_remainder(h, system, ord);
    if (!division.remainder.is_zero())
        throw membership_error("element is not a member of the ideal", division.remainder);

    std::vector<AlgebraElement> coordinates;
    coordinates.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        AlgebraElement p = division.quotients[i];
        for (std::size_t j = 0; j < m; ++j)
            p = add(p, multiply(matrix_c.at(i, j), division.quotients[m + j]));
        coordinates.push_back(std::move(p));
    }
    return coordinates;
}

} // namespace fga
