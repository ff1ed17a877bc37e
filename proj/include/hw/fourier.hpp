#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "hw/irrep.hpp"

namespace hw {

using Complex = std::complex<double>;

inline constexpr double kFourierTolerance = 1e-9;

/// Dense complex matrix, row-major.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim = 0);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix from_monomial(const MonomialMatrix& a);

    std::size_t dim() const noexcept { return dim_; }
    Complex& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    ComplexMatrix operator*(const ComplexMatrix& other) const;
    ComplexMatrix operator*(Complex factor) const;
    ComplexMatrix adjoint() const;

    double max_abs_diff(const ComplexMatrix& other) const;
    /// Largest |entry| off the diagonal.
    double max_off_diagonal() const;

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// exp(2πi·exponent / modulus)
Complex root_of_unity(std::uint64_t modulus, std::int64_t exponent);

/// ‖U·U† − I‖_max
double unitarity_residual(const ComplexMatrix& u);

/// (F)_{kj} = ω_d^(kj) / √d. dim must be a power of two.
ComplexMatrix standard_fourier(std::size_t dim);

/// diag(ω_s^(r·k)), k = 0..dim-1.
ComplexMatrix omega_matrix(const IrrepLabel& label);

/// Ω_r · F_{s-t}. For p = 0 this is [[1]].
ComplexMatrix fourier_FD(const IrrepLabel& label);

struct EigenSystem {
    std::vector<Complex> eigenvalues;
    ComplexMatrix eigenvectors;  // column k is ψ_k
};

/// λ_k = ω_s^r ω_{s-t}^k with ψ_k the k-th column of F_D.
EigenSystem eigensystem_y(const IrrepLabel& label);

/// Max over k of ‖y_D ψ_k − λ_k ψ_k‖_max, with y_D taken from the exact
/// monomial generator.
double eigen_residual(const IrrepLabel& label, const EigenSystem& eig);

enum class Orientation {
    Forward,   // F · A · F⁻¹
    Backward,  // F⁻¹ · A · F
};

const char* to_string(Orientation o) noexcept;

struct FourierReport {
    IrrepLabel label;
    double unitarity_fd = 0;         // ‖F_D F_D† − I‖
    double unitarity_std = 0;        // ‖F F† − I‖ for F_{s-t}
    double unitarity_omega = 0;      // ‖Ω Ω† − I‖
    double fourth_power = 0;         // ‖F_{s-t}^4 − I‖
    double eigen = 0;                // eigenvector residual of y_D
    double offdiag_forward = 0;      // off-diagonal size of F y F⁻¹
    double offdiag_backward = 0;     // off-diagonal size of F⁻¹ y F
    std::vector<Orientation> diagonalizing;
    /// ‖conj(y_D^u) − ω_s^(r·u − q) x_D⁻¹‖, minimized over diagonalizing
    /// orientations; `relation_orientation` is the minimizer.
    double conjugation_relation = 0;
    Orientation relation_orientation = Orientation::Backward;
    /// ‖F⁻¹ y_D^u F − ω_s^(r·u − q) x_D‖. Reported alongside, not gating.
    double conjugation_relation_direct = 0;

    /// Unitarity, F⁴ = I, eigen-residual, diagonalization and the
    /// conjugation relation each below kFourierTolerance.
    bool passed() const noexcept;
};

/// Requires p != 0.
FourierReport verify_fourier_relations(const IrrepLabel& label);

} // namespace hw
