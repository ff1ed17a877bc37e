#include "hw/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hw/errors.hpp"

namespace hw {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix I(dim);
    for (std::size_t i = 0; i < dim; ++i) I.at(i, i) = 1.0;
    return I;
}

ComplexMatrix ComplexMatrix::from_monomial(const MonomialMatrix& a) {
    ComplexMatrix out(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) {
        out.at(k, a.sigma[k]) = CycInt::root(a.root_modulus, a.phase[k]).to_complex();
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (dim_ != other.dim_) throw ParameterError("ComplexMatrix dimension mismatch");
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex a = at(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < dim_; ++j) out.at(i, j) += a * other.at(k, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex factor) const {
    ComplexMatrix out(*this);
    for (auto& e : out.entries_) e *= factor;
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) out.at(j, i) = std::conj(at(i, j));
    }
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (dim_ != other.dim_) throw ParameterError("ComplexMatrix dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    return worst;
}

double ComplexMatrix::max_off_diagonal() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i != j) worst = std::max(worst, std::abs(at(i, j)));
        }
    }
    return worst;
}

Complex root_of_unity(std::uint64_t modulus, std::int64_t exponent) {
    const auto M = static_cast<std::int64_t>(modulus);
    const std::int64_t e = ((exponent % M) + M) % M;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(M);
    return {std::cos(angle), std::sin(angle)};
}

double unitarity_residual(const ComplexMatrix& u) {
    return (u * u.adjoint()).max_abs_diff(ComplexMatrix::identity(u.dim()));
}

ComplexMatrix standard_fourier(std::size_t dim) {
    if (!is_power_of_two(dim)) throw ParameterError("standard_fourier: dimension must be a power of two");
    ComplexMatrix F(dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t j = 0; j < dim; ++j) F.at(k, j) = norm * root_of_unity(dim, static_cast<std::int64_t>((k * j) % dim));
    }
    return F;
}

ComplexMatrix omega_matrix(const IrrepLabel& label) {
    if (!is_canonical(label.s, label.p, label.q, label.r)) {
        throw ParameterError("omega_matrix: label (" + to_string(label) + ") is not canonical");
    }
    const std::size_t d = label.dim();
    ComplexMatrix omega(d);
    for (std::size_t k = 0; k < d; ++k) {
        omega.at(k, k) = root_of_unity(label.root_modulus(), static_cast<std::int64_t>(std::uint64_t{label.r} * k));
    }
    return omega;
}

ComplexMatrix fourier_FD(const IrrepLabel& label) {
    if (label.p == 0) return ComplexMatrix::identity(1);
    return omega_matrix(label) * standard_fourier(label.dim());
}

EigenSystem eigensystem_y(const IrrepLabel& label) {
    const std::size_t d = label.dim();
    EigenSystem eig{{}, fourier_FD(label)};
    eig.eigenvalues.reserve(d);
    const std::int64_t rd = static_cast<std::int64_t>(label.r);
    for (std::size_t k = 0; k < d; ++k) {
        // ω_s^r · ω_{s-t}^k in units of ω_s.
        eig.eigenvalues.push_back(
            root_of_unity(label.root_modulus(), rd + static_cast<std::int64_t>(k << label.t)));
    }
    return eig;
}

double eigen_residual(const IrrepLabel& label, const EigenSystem& eig) {
    const ComplexMatrix y = ComplexMatrix::from_monomial(generator_matrices(label).y);
    const ComplexMatrix applied = y * eig.eigenvectors;
    double worst = 0.0;
    for (std::size_t k = 0; k < y.dim(); ++k) {
        for (std::size_t j = 0; j < y.dim(); ++j) {
            worst = std::max(worst, std::abs(applied.at(j, k) - eig.eigenvalues[k] * eig.eigenvectors.at(j, k)));
        }
    }
    return worst;
}

const char* to_string(Orientation o) noexcept { return o == Orientation::Forward ? "F*A*F^-1" : "F^-1*A*F"; }

bool FourierReport::passed() const noexcept {
    const double tol = kFourierTolerance;
    return unitarity_fd < tol && unitarity_std < tol && unitarity_omega < tol && fourth_power < tol && eigen < tol &&
           !diagonalizing.empty() && conjugation_relation < tol;
}

FourierReport verify_fourier_relations(const IrrepLabel& label) {
    if (label.p == 0) throw ParameterError("verify_fourier_relations: label must have p != 0");
    FourierReport report;
    report.label = label;
    const std::size_t d = label.dim();
    const std::uint32_t M = label.root_modulus();

    const ComplexMatrix Fstd = standard_fourier(d);
    const ComplexMatrix Omega = omega_matrix(label);
    const ComplexMatrix F = fourier_FD(label);
    const ComplexMatrix Finv = F.adjoint();
    report.unitarity_fd = unitarity_residual(F);
    report.unitarity_std = unitarity_residual(Fstd);
    report.unitarity_omega = unitarity_residual(Omega);
    const ComplexMatrix F2 = Fstd * Fstd;
    report.fourth_power = (F2 * F2).max_abs_diff(ComplexMatrix::identity(d));
    report.eigen = eigen_residual(label, eigensystem_y(label));

    const GeneratorMatrices gens = generator_matrices(label);
    const ComplexMatrix y = ComplexMatrix::from_monomial(gens.y);
    report.offdiag_forward = (F * y * Finv).max_off_diagonal();
    report.offdiag_backward = (Finv * y * F).max_off_diagonal();
    if (report.offdiag_forward < kFourierTolerance) report.diagonalizing.push_back(Orientation::Forward);
    if (report.offdiag_backward < kFourierTolerance) report.diagonalizing.push_back(Orientation::Backward);

    const std::uint32_t u = *label.u;
    const ComplexMatrix y_u = ComplexMatrix::from_monomial(monomial_power(gens.y, u));
    const Complex phase =
        root_of_unity(M, static_cast<std::int64_t>(std::uint64_t{label.r} * u) - static_cast<std::int64_t>(label.q));
    const ComplexMatrix target = ComplexMatrix::from_monomial(monomial_inverse(gens.x)) * phase;

    report.conjugation_relation = std::numeric_limits<double>::infinity();
    for (Orientation o : report.diagonalizing) {
        const ComplexMatrix conjugated = o == Orientation::Forward ? F * y_u * Finv : Finv * y_u * F;
        const double residual = conjugated.max_abs_diff(target);
        if (residual < report.conjugation_relation) {
            report.conjugation_relation = residual;
            report.relation_orientation = o;
        }
    }
    const ComplexMatrix direct_target = ComplexMatrix::from_monomial(gens.x) * phase;
    report.conjugation_relation_direct = (Finv * y_u * F).max_abs_diff(direct_target);
    return report;
}

} // namespace hw
