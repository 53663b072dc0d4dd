#ifndef MSL1_OPERATORS_HPP
#define MSL1_OPERATORS_HPP

#include <Eigen/Dense>
#include <cstdint>

#include "msl1/signal.hpp"

namespace msl1 {

enum class MatrixKind { Gaussian, Bernoulli, PartialFourier, Dense };

// M x N sensing operator. Random kinds regenerate bit-identically from
// (kind, seed, M, N); Dense holds caller-supplied entries.
struct MeasurementMatrix {
    Eigen::MatrixXd entries;
    MatrixKind kind = MatrixKind::Dense;
    std::uint64_t seed = 0;

    Eigen::Index rows() const { return entries.rows(); }
    Eigen::Index cols() const { return entries.cols(); }

    static MeasurementMatrix dense(Eigen::MatrixXd m);
};

// Gaussian: i.i.d. N(0, 1/M). Bernoulli: +-1/sqrt(M). PartialFourier: M
// distinct rows drawn without replacement from the 2*ceil(N/2)-row
// real/imag stack of the unitary N-point DFT, scaled by sqrt(N/M).
MeasurementMatrix make_measurement_matrix(MatrixKind kind, Eigen::Index m, Eigen::Index n,
                                          std::uint64_t seed);

Eigen::VectorXd sample(const MeasurementMatrix& phi, const Signal& x);
Eigen::VectorXd sample(const MeasurementMatrix& phi, const Eigen::VectorXd& x);

enum class AnalysisKind { Identity, UnitaryDFT, DenseReal, DenseComplex };

// L x N analysis operator (L >= N). Identity and UnitaryDFT are matrix-free;
// the DFT path uses an FFT when N is a power of two.
class AnalysisOperator {
  public:
    static AnalysisOperator identity(Eigen::Index n);
    static AnalysisOperator unitary_dft(Eigen::Index n);
    static AnalysisOperator dense(Eigen::MatrixXd m);
    static AnalysisOperator dense(Eigen::MatrixXcd m);

    AnalysisKind kind() const { return kind_; }
    Eigen::Index analysis_rows() const { return rows_; }
    Eigen::Index cols() const { return cols_; }
    bool is_complex() const {
        return kind_ == AnalysisKind::UnitaryDFT || kind_ == AnalysisKind::DenseComplex;
    }

    Eigen::VectorXcd apply(const Eigen::VectorXd& x) const;
    Eigen::VectorXcd adjoint(const Eigen::VectorXcd& v) const;
    // Re(A^H v): what a real-variable gradient step needs.
    Eigen::VectorXd adjoint_real(const Eigen::VectorXcd& v) const;
    // Re(A^H A) as a dense N x N matrix (identity for Identity/UnitaryDFT).
    Eigen::MatrixXd gram_real() const;

    const Eigen::MatrixXd& real_entries() const { return real_; }
    const Eigen::MatrixXcd& complex_entries() const { return complex_; }

  private:
    AnalysisOperator(AnalysisKind kind, Eigen::Index rows, Eigen::Index cols)
        : kind_(kind), rows_(rows), cols_(cols) {}

    AnalysisKind kind_;
    Eigen::Index rows_;
    Eigen::Index cols_;
    Eigen::MatrixXd real_;
    Eigen::MatrixXcd complex_;
};

Eigen::VectorXcd analyze(const AnalysisOperator& psi, const Signal& x);
Eigen::VectorXcd adjoint_apply(const AnalysisOperator& psi, const Eigen::VectorXcd& v);
Eigen::VectorXd adjoint_apply(const MeasurementMatrix& phi, const Eigen::VectorXd& v);

// Fraction of energy carried by the k largest-magnitude coefficients.
double compressibility(const Eigen::VectorXcd& theta, Eigen::Index k);
double compressibility(const Eigen::VectorXd& theta, Eigen::Index k);

}  // namespace msl1

#endif
