#include "msl1/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "msl1/errors.hpp"
#include "msl1/fft.hpp"
#include "msl1/rng.hpp"

namespace msl1 {

MeasurementMatrix MeasurementMatrix::dense(Eigen::MatrixXd m) {
    if (m.rows() < 1 || m.cols() < 1) throw DimensionError("empty measurement matrix");
    MeasurementMatrix out;
    out.entries = std::move(m);
    out.kind = MatrixKind::Dense;
    return out;
}

MeasurementMatrix make_measurement_matrix(MatrixKind kind, Eigen::Index m, Eigen::Index n,
                                          std::uint64_t seed) {
    if (m < 1) throw DimensionError("measurement matrix needs M >= 1");
    if (m > n) throw DimensionError("measurement matrix needs M <= N");
    MeasurementMatrix out;
    out.kind = kind;
    out.seed = seed;
    out.entries.resize(m, n);
    Rng rng(seed);
    switch (kind) {
        case MatrixKind::Gaussian: {
            const double scale = 1.0 / std::sqrt(static_cast<double>(m));
            for (Eigen::Index i = 0; i < m; ++i)
                for (Eigen::Index j = 0; j < n; ++j) out.entries(i, j) = scale * rng.normal();
            break;
        }
        case MatrixKind::Bernoulli: {
            const double scale = 1.0 / std::sqrt(static_cast<double>(m));
            for (Eigen::Index i = 0; i < m; ++i)
                for (Eigen::Index j = 0; j < n; ++j) out.entries(i, j) = scale * rng.sign();
            break;
        }
        case MatrixKind::PartialFourier: {
            // Row pool: for each frequency k < ceil(N/2), the real row
            // cos(2 pi k j / N)/sqrt(N) and the imaginary row
            // -sin(2 pi k j / N)/sqrt(N).
            const Eigen::Index half = (n + 1) / 2;
            const Eigen::Index pool = 2 * half;
            if (m > pool) throw DimensionError("not enough partial-Fourier rows");
            std::vector<Eigen::Index> idx(static_cast<std::size_t>(pool));
            std::iota(idx.begin(), idx.end(), Eigen::Index{0});
            for (Eigen::Index i = 0; i < m; ++i) {
                const auto j = i + static_cast<Eigen::Index>(
                                       rng.uniform_int(static_cast<std::uint64_t>(pool - i)));
                std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
            }
            const double scale = std::sqrt(static_cast<double>(n) / static_cast<double>(m)) /
                                 std::sqrt(static_cast<double>(n));
            for (Eigen::Index i = 0; i < m; ++i) {
                const Eigen::Index row = idx[static_cast<std::size_t>(i)];
                const Eigen::Index freq = row / 2;
                const bool imag = (row % 2) != 0;
                for (Eigen::Index j = 0; j < n; ++j) {
                    const double ang = 2.0 * std::numbers::pi * static_cast<double>(freq) *
                                       static_cast<double>(j) / static_cast<double>(n);
                    out.entries(i, j) = scale * (imag ? -std::sin(ang) : std::cos(ang));
                }
            }
            break;
        }
        case MatrixKind::Dense:
            throw DimensionError("Dense matrices are built from explicit entries");
    }
    return out;
}

Eigen::VectorXd sample(const MeasurementMatrix& phi, const Eigen::VectorXd& x) {
    if (x.size() != phi.cols()) throw DimensionError("sample: signal length != matrix columns");
    return phi.entries * x;
}

Eigen::VectorXd sample(const MeasurementMatrix& phi, const Signal& x) {
    return sample(phi, x.samples);
}

AnalysisOperator AnalysisOperator::identity(Eigen::Index n) {
    if (n < 1) throw DimensionError("identity operator needs N >= 1");
    return AnalysisOperator(AnalysisKind::Identity, n, n);
}

AnalysisOperator AnalysisOperator::unitary_dft(Eigen::Index n) {
    if (n < 1) throw DimensionError("DFT operator needs N >= 1");
    return AnalysisOperator(AnalysisKind::UnitaryDFT, n, n);
}

AnalysisOperator AnalysisOperator::dense(Eigen::MatrixXd m) {
    if (m.rows() < m.cols()) throw DimensionError("analysis operator needs L >= N");
    AnalysisOperator out(AnalysisKind::DenseReal, m.rows(), m.cols());
    out.real_ = std::move(m);
    return out;
}

AnalysisOperator AnalysisOperator::dense(Eigen::MatrixXcd m) {
    if (m.rows() < m.cols()) throw DimensionError("analysis operator needs L >= N");
    AnalysisOperator out(AnalysisKind::DenseComplex, m.rows(), m.cols());
    out.complex_ = std::move(m);
    return out;
}

Eigen::VectorXcd AnalysisOperator::apply(const Eigen::VectorXd& x) const {
    if (x.size() != cols_) throw DimensionError("analyze: signal length != operator columns");
    switch (kind_) {
        case AnalysisKind::Identity:
            return x.cast<std::complex<double>>();
        case AnalysisKind::UnitaryDFT:
            return detail::unitary_dft(x);
        case AnalysisKind::DenseReal:
            return (real_ * x).cast<std::complex<double>>();
        case AnalysisKind::DenseComplex:
            return complex_ * x;
    }
    return {};
}

Eigen::VectorXcd AnalysisOperator::adjoint(const Eigen::VectorXcd& v) const {
    if (v.size() != rows_) throw DimensionError("adjoint: vector length != operator rows");
    switch (kind_) {
        case AnalysisKind::Identity:
            return v;
        case AnalysisKind::UnitaryDFT:
            return detail::unitary_idft(v);
        case AnalysisKind::DenseReal:
            return real_.transpose() * v;
        case AnalysisKind::DenseComplex:
            return complex_.adjoint() * v;
    }
    return {};
}

Eigen::VectorXd AnalysisOperator::adjoint_real(const Eigen::VectorXcd& v) const {
    return adjoint(v).real();
}

Eigen::MatrixXd AnalysisOperator::gram_real() const {
    switch (kind_) {
        case AnalysisKind::Identity:
        case AnalysisKind::UnitaryDFT:
            return Eigen::MatrixXd::Identity(cols_, cols_);
        case AnalysisKind::DenseReal:
            return real_.transpose() * real_;
        case AnalysisKind::DenseComplex:
            return (complex_.adjoint() * complex_).real();
    }
    return {};
}

Eigen::VectorXcd analyze(const AnalysisOperator& psi, const Signal& x) {
    return psi.apply(x.samples);
}

Eigen::VectorXcd adjoint_apply(const AnalysisOperator& psi, const Eigen::VectorXcd& v) {
    return psi.adjoint(v);
}

Eigen::VectorXd adjoint_apply(const MeasurementMatrix& phi, const Eigen::VectorXd& v) {
    if (v.size() != phi.rows()) throw DimensionError("adjoint: vector length != matrix rows");
    return phi.entries.transpose() * v;
}

double compressibility(const Eigen::VectorXcd& theta, Eigen::Index k) {
    const Eigen::Index l = theta.size();
    if (l == 0) throw UndefinedInputError("compressibility of an empty vector");
    if (k < 1 || k > l) throw DimensionError("compressibility: k out of range");
    std::vector<double> energy(static_cast<std::size_t>(l));
    double total = 0.0;
    for (Eigen::Index i = 0; i < l; ++i) {
        energy[static_cast<std::size_t>(i)] = std::norm(theta[i]);
        total += energy[static_cast<std::size_t>(i)];
    }
    if (total == 0.0) throw UndefinedInputError("compressibility of a zero vector");
    if (k == l) return 1.0;
    std::nth_element(energy.begin(), energy.begin() + (k - 1), energy.end(),
                     std::greater<double>());
    double top = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) top += energy[static_cast<std::size_t>(i)];
    return std::min(top / total, 1.0);
}

double compressibility(const Eigen::VectorXd& theta, Eigen::Index k) {
    return compressibility(Eigen::VectorXcd(theta.cast<std::complex<double>>()), k);
}

}  // namespace msl1
