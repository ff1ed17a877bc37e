#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace hw {

bool is_power_of_two(std::uint64_t x) noexcept;

/// An element of Z[ω], ω = exp(2πi/M), M a power of two.
///
/// Stored densely as M integer coefficients (coefficient of ω^e at index e).
/// The representation is not unique: ω^(e+M/2) = -ω^e. Equality compares the
/// reduced forms over the basis ω^0..ω^(M/2-1). Arithmetic is overflow
/// checked and throws std::overflow_error rather than wrapping.
///
/// Operands with different moduli are embedded into the larger one via
/// ω_{2^a}^e -> ω_{2^b}^(e·2^(b-a)).
class CycInt {
public:
    /// Zero in Z[ω_M].
    explicit CycInt(std::uint32_t modulus = 1);

    static CycInt root(std::uint32_t modulus, std::int64_t exponent);
    static CycInt integer(std::uint32_t modulus, std::int64_t value);

    std::uint32_t modulus() const noexcept { return static_cast<std::uint32_t>(coeffs_.size()); }
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

    /// Adds c·ω^e in place.
    CycInt& add_term(std::int64_t c, std::uint64_t exponent);

    /// Same value in Z[ω_{larger}]; larger must be a power-of-two multiple.
    CycInt embedded(std::uint32_t larger) const;

    /// Coefficients over ω^0..ω^(M/2-1) (length 1 when M <= 2).
    std::vector<std::int64_t> reduced() const;

    bool is_zero() const;

    CycInt& operator+=(const CycInt& other);
    CycInt& operator-=(const CycInt& other);
    CycInt& operator*=(const CycInt& other);
    CycInt operator-() const;

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
    friend bool operator==(const CycInt& a, const CycInt& b);

    /// Complex conjugation, ω^e -> ω^(-e).
    CycInt conj() const;

    /// Exact division of every coefficient; throws ConsistencyError if inexact.
    CycInt divided_exactly(std::int64_t divisor) const;

    std::complex<double> to_complex() const;

private:
    std::vector<std::int64_t> coeffs_;
};

CycInt conj(const CycInt& a);

/// The integer value of `a`. Throws ConsistencyError ("not a rational
/// integer") if any non-constant reduced coefficient is nonzero.
std::int64_t reduce_to_rational_integer(const CycInt& a);

/// Dense square matrix over Z[ω_M], row-major.
class CycMatrix {
public:
    CycMatrix(std::size_t dim, std::uint32_t modulus);

    static CycMatrix identity(std::size_t dim, std::uint32_t modulus);

    std::size_t dim() const noexcept { return dim_; }
    std::uint32_t modulus() const noexcept { return modulus_; }

    CycInt& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const CycInt& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    CycMatrix operator*(const CycMatrix& other) const;
    CycMatrix operator-(const CycMatrix& other) const;
    CycMatrix scaled(const CycInt& factor) const;
    CycInt trace() const;

    friend bool operator==(const CycMatrix& a, const CycMatrix& b);

private:
    std::size_t dim_;
    std::uint32_t modulus_;
    std::vector<CycInt> entries_;
};

} // namespace hw
