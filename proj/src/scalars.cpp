#include "fga/scalars.hpp"

#include <sstream>

namespace fga {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b; // p < 2^63, so no overflow
    return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

__extension__ using uint128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

bool is_prime_trial_division(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

} // namespace

Field Field::rationals() { return Field(0); }

Field Field::prime(std::uint64_t p) {
    if (p >= (1ull << 63))
        throw error("invalid_field", "modulus must be below 2^63");
    if (!is_prime_trial_division(p))
        throw error("invalid_field", "modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

Scalar Scalar::zero(const Field& field) { return Scalar(field); }

Scalar Scalar::one(const Field& field) {
    Scalar s(field);
    if (field.is_rational())
        s.rational_ = 1;
    else
        s.residue_ = 1 % field.modulus();
    return s;
}

Scalar Scalar::from_integer(const Field& field, const BigInt& value) {
    Scalar s(field);
    if (field.is_rational()) {
        s.rational_ = BigRational(value);
    } else {
        BigInt p(field.modulus());
        BigInt r = value % p;
        if (r < 0) r += p;
        s.residue_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::rational(const BigRational& value) {
    Scalar s(Field::rationals());
    s.rational_ = value;
    return s;
}

Scalar Scalar::residue(const Field& field, std::uint64_t value) {
    if (!field.is_prime_modular())
        throw error("field_mismatch", "residue scalars require a prime field");
    Scalar s(field);
    s.residue_ = value % field.modulus();
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rational_.is_zero() : residue_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rational_ == 1 : residue_ == 1 % field_.modulus();
}

const BigRational& Scalar::rational_value() const {
    if (!field_.is_rational())
        throw error("field_mismatch", "not a rational scalar");
    return rational_;
}

std::uint64_t Scalar::residue_value() const {
    if (!field_.is_prime_modular())
        throw error("field_mismatch", "not a modular scalar");
    return residue_;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rational())
        s.rational_ = -rational_;
    else
        s.residue_ = residue_ == 0 ? 0 : field_.modulus() - residue_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw error("division_by_zero", "cannot invert zero");
    Scalar s(field_);
    if (field_.is_rational())
        s.rational_ = 1 / rational_;
    else
        s.residue_ = pow_mod(residue_, field_.modulus() - 2, field_.modulus());
    return s;
}

namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw error("field_mismatch", "scalars from different fields");
}

} // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar s(a.field_);
    if (a.field_.is_rational())
        s.rational_ = a.rational_ + b.rational_;
    else
        s.residue_ = add_mod(a.residue_, b.residue_, a.field_.modulus());
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar s(a.field_);
    if (a.field_.is_rational())
        s.rational_ = a.rational_ - b.rational_;
    else
        s.residue_ = sub_mod(a.residue_, b.residue_, a.field_.modulus());
    return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar s(a.field_);
    if (a.field_.is_rational())
        s.rational_ = a.rational_ * b.rational_;
    else
        s.residue_ = mul_mod(a.residue_, b.residue_, a.field_.modulus());
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool Scalar::operator==(const Scalar& other) const {
    if (field_ != other.field_) return false;
    return field_.is_rational() ? rational_ == other.rational_ : residue_ == other.residue_;
}

std::string Scalar::to_string() const {
    if (field_.is_prime_modular()) return std::to_string(residue_);
    std::ostringstream out;
    out << rational_;
    return out.str();
}

std::optional<std::vector<Scalar>> solve_linear(const std::vector<std::vector<Scalar>>& columns,
                                                const std::vector<Scalar>& target,
                                                const Field& field) {
    const std::size_t n = columns.size();
    const std::size_t m = target.size();
    for (const auto& column : columns)
        if (column.size() != m)
            throw error("dimension_mismatch", "columns and target have different lengths");

    // Row-major augmented matrix [A | target].
    std::vector<std::vector<Scalar>> rows(m, std::vector<Scalar>(n + 1, Scalar::zero(field)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) rows[i][j] = columns[j][i];
    for (std::size_t i = 0; i < m; ++i) rows[i][n] = target[i];

    std::vector<std::size_t> pivot_of_column(n, static_cast<std::size_t>(-1));
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n && pivot_row < m; ++col) {
        std::size_t found = pivot_row;
        while (found < m && rows[found][col].is_zero()) ++found;
        if (found == m) continue;
        std::swap(rows[pivot_row], rows[found]);
        Scalar inv = rows[pivot_row][col].inverse();
        for (std::size_t j = col; j <= n; ++j) rows[pivot_row][j] = rows[pivot_row][j] * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pivot_row || rows[i][col].is_zero()) continue;
            Scalar factor = rows[i][col];
            for (std::size_t j = col; j <= n; ++j)
                rows[i][j] = rows[i][j] - factor * rows[pivot_row][j];
        }
        pivot_of_column[col] = pivot_row;
        ++pivot_row;
    }

    // Inconsistent iff a zero row has nonzero right-hand side.
    for (std::size_t i = pivot_row; i < m; ++i)
        if (!rows[i][n].is_zero()) return std::nullopt;

    std::vector<Scalar> solution(n, Scalar::zero(field));
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_of_column[col] != static_cast<std::size_t>(-1))
            solution[col] = rows[pivot_of_column[col]][n];
    return solution;
}

} // namespace fga
