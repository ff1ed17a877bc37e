#include "hw/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hw/errors.hpp"

namespace hw {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("CycInt coefficient overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("CycInt coefficient overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("CycInt coefficient overflow in multiplication");
    return r;
}

void require_modulus(std::uint32_t modulus) {
    if (!is_power_of_two(modulus)) {
        throw ParameterError("cyclotomic modulus must be a power of two, got " + std::to_string(modulus));
    }
}

std::uint32_t common_modulus(std::uint32_t a, std::uint32_t b) {
    if (a % b != 0 && b % a != 0) {
        throw ParameterError("incompatible cyclotomic moduli " + std::to_string(a) + " and " + std::to_string(b));
    }
    return std::max(a, b);
}

} // namespace

bool is_power_of_two(std::uint64_t x) noexcept { return x != 0 && (x & (x - 1)) == 0; }

CycInt::CycInt(std::uint32_t modulus) {
    require_modulus(modulus);
    coeffs_.assign(modulus, 0);
}

CycInt CycInt::root(std::uint32_t modulus, std::int64_t exponent) {
    CycInt r(modulus);
    const auto M = static_cast<std::int64_t>(modulus);
    r.coeffs_[static_cast<std::size_t>(((exponent % M) + M) % M)] = 1;
    return r;
}

CycInt CycInt::integer(std::uint32_t modulus, std::int64_t value) {
    CycInt r(modulus);
    r.coeffs_[0] = value;
    return r;
}

CycInt& CycInt::add_term(std::int64_t c, std::uint64_t exponent) {
    auto& slot = coeffs_[exponent & (coeffs_.size() - 1)];
    slot = checked_add(slot, c);
    return *this;
}

CycInt CycInt::embedded(std::uint32_t larger) const {
    require_modulus(larger);
    if (larger % modulus() != 0) {
        throw ParameterError("cannot embed modulus " + std::to_string(modulus()) + " into " + std::to_string(larger));
    }
    if (larger == modulus()) return *this;
    CycInt r(larger);
    const std::uint32_t stride = larger / modulus();
    for (std::size_t e = 0; e < coeffs_.size(); ++e) r.coeffs_[e * stride] = coeffs_[e];
    return r;
}

std::vector<std::int64_t> CycInt::reduced() const {
    const std::size_t M = coeffs_.size();
    if (M == 1) return {coeffs_[0]};
    const std::size_t half = M / 2;
    std::vector<std::int64_t> out(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(half));
    for (std::size_t e = half; e < M; ++e) out[e - half] = checked_sub(out[e - half], coeffs_[e]);
    return out;
}

bool CycInt::is_zero() const {
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; })) return true;
    const auto r = reduced();
    return std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; });
}

CycInt& CycInt::operator+=(const CycInt& other) {
    const std::uint32_t M = common_modulus(modulus(), other.modulus());
    if (modulus() != M) *this = embedded(M);
    const std::uint32_t stride = M / other.modulus();
    for (std::size_t e = 0; e < other.coeffs_.size(); ++e) {
        coeffs_[e * stride] = checked_add(coeffs_[e * stride], other.coeffs_[e]);
    }
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) { return *this += -other; }

CycInt& CycInt::operator*=(const CycInt& other) {
    const std::uint32_t M = common_modulus(modulus(), other.modulus());
    const CycInt a = embedded(M);
    const CycInt b = other.embedded(M);
    CycInt r(M);
    for (std::size_t i = 0; i < M; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < M; ++j) {
            if (b.coeffs_[j] == 0) continue;
            auto& slot = r.coeffs_[(i + j) & (M - 1)];
            slot = checked_add(slot, checked_mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    *this = std::move(r);
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt r(modulus());
    for (std::size_t e = 0; e < coeffs_.size(); ++e) r.coeffs_[e] = checked_sub(0, coeffs_[e]);
    return r;
}

bool operator==(const CycInt& a, const CycInt& b) {
    const std::uint32_t M = common_modulus(a.modulus(), b.modulus());
    return a.embedded(M).reduced() == b.embedded(M).reduced();
}

CycInt CycInt::conj() const {
    const std::size_t M = coeffs_.size();
    CycInt r(static_cast<std::uint32_t>(M));
    for (std::size_t e = 0; e < M; ++e) r.coeffs_[(M - e) & (M - 1)] = coeffs_[e];
    return r;
}

CycInt CycInt::divided_exactly(std::int64_t divisor) const {
    if (divisor == 0) throw ParameterError("division by zero");
    CycInt r(modulus());
    const auto red = reduced();
    for (std::size_t e = 0; e < red.size(); ++e) {
        if (red[e] % divisor != 0) {
            throw ConsistencyError("cyclotomic value is not divisible by " + std::to_string(divisor));
        }
        r.coeffs_[e] = red[e] / divisor;
    }
    return r;
}

std::complex<double> CycInt::to_complex() const {
    const double M = static_cast<double>(coeffs_.size());
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / M;
        sum += static_cast<double>(coeffs_[e]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

CycInt conj(const CycInt& a) { return a.conj(); }

std::int64_t reduce_to_rational_integer(const CycInt& a) {
    const auto red = a.reduced();
    for (std::size_t e = 1; e < red.size(); ++e) {
        if (red[e] != 0) throw ConsistencyError("not a rational integer");
    }
    return red[0];
}

CycMatrix::CycMatrix(std::size_t dim, std::uint32_t modulus)
    : dim_(dim), modulus_(modulus), entries_(dim * dim, CycInt(modulus)) {}

CycMatrix CycMatrix::identity(std::size_t dim, std::uint32_t modulus) {
    CycMatrix I(dim, modulus);
    for (std::size_t i = 0; i < dim; ++i) I.at(i, i) = CycInt::integer(modulus, 1);
    return I;
}

CycMatrix CycMatrix::operator*(const CycMatrix& other) const {
    if (dim_ != other.dim_) throw ParameterError("CycMatrix dimension mismatch");
    CycMatrix out(dim_, std::max(modulus_, other.modulus_));
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const CycInt& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                const CycInt& b = other.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& other) const {
    if (dim_ != other.dim_) throw ParameterError("CycMatrix dimension mismatch");
    CycMatrix out(dim_, std::max(modulus_, other.modulus_));
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
}

CycMatrix CycMatrix::scaled(const CycInt& factor) const {
    CycMatrix out(dim_, std::max(modulus_, factor.modulus()));
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * factor;
    return out;
}

CycInt CycMatrix::trace() const {
    CycInt sum(modulus_);
    for (std::size_t i = 0; i < dim_; ++i) sum += at(i, i);
    return sum;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        if (!(a.entries_[i] == b.entries_[i])) return false;
    }
    return true;
}

} // namespace hw
