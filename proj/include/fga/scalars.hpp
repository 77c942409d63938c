#ifndef FGA_SCALARS_HPP
#define FGA_SCALARS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fga/error.hpp"

namespace fga {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// The coefficient field: the rationals or a prime field F_p with p < 2^63.
class Field {
public:
    static Field rationals();
    static Field prime(std::uint64_t p); // rejects composites (trial division)

    bool is_rational() const { return modulus_ == 0; }
    bool is_prime_modular() const { return modulus_ != 0; }
    std::uint64_t modulus() const { return modulus_; }

    bool operator==(const Field& other) const { return modulus_ == other.modulus_; }
    bool operator!=(const Field& other) const { return !(*this == other); }

private:
    explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
    std::uint64_t modulus_ = 0; // 0 = rationals
};

// An exact field element in canonical form: a normalized fraction over Q
// (coprime, positive denominator -- maintained by cpp_rational) or a residue
// in [0, p) over F_p.
class Scalar {
public:
    static Scalar zero(const Field& field);
    static Scalar one(const Field& field);
    static Scalar from_integer(const Field& field, const BigInt& value);
    static Scalar rational(const BigRational& value);
    static Scalar residue(const Field& field, std::uint64_t value);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    const BigRational& rational_value() const;
    std::uint64_t residue_value() const;

    Scalar operator-() const;
    Scalar inverse() const; // requires a nonzero scalar

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    explicit Scalar(const Field& field) : field_(field) {}

    Field field_ = Field::rationals();
    BigRational rational_{};
    std::uint64_t residue_ = 0;
};

// Exact Gaussian elimination: finds coefficients c with sum c_i * column_i =
// target, or reports that none exist. When the system is underdetermined the
// reduced-row-echelon solution (free variables zero) is returned, so the
// output is deterministic.
std::optional<std::vector<Scalar>> solve_linear(const std::vector<std::vector<Scalar>>& columns,
                                                const std::vector<Scalar>& target,
                                                const Field& field);

} // namespace fga

#endif
