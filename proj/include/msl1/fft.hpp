#ifndef MSL1_FFT_HPP
#define MSL1_FFT_HPP

#include <Eigen/Dense>
#include <complex>

namespace msl1::detail {

bool is_power_of_two(Eigen::Index n);

// In-place radix-2 decimation-in-time FFT. `inverse` applies the conjugate
// transform; neither direction scales, callers apply 1/sqrt(N) themselves.
void fft_pow2(Eigen::VectorXcd& a, bool inverse);

// Unitary DFT of a real input (any N; O(N log N) for powers of two, O(N^2)
// otherwise via the direct sum).
Eigen::VectorXcd unitary_dft(const Eigen::VectorXd& x);

// Real part of the unitary inverse DFT applied to v.
Eigen::VectorXd unitary_idft_real(const Eigen::VectorXcd& v);

// Full unitary inverse DFT.
Eigen::VectorXcd unitary_idft(const Eigen::VectorXcd& v);

}  // namespace msl1::detail

#endif
