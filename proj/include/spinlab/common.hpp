#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spinlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Numerical tolerances used by the validity checks throughout the library.
namespace tol {
inline constexpr double hermitian = 1e-10;   // relative Frobenius deviation
inline constexpr double unitarity = 1e-10;
inline constexpr double trace_one = 1e-10;
inline constexpr double psd_slack = 1e-9;    // smallest admissible eigenvalue is -psd_slack
}  // namespace tol

namespace constants {
// Electron gyromagnetic ratio in ordinary-frequency units (Hz/T).
// Overridable wherever it enters a model; this is the library-wide default.
inline constexpr double gamma_e_hz_per_t = 28.0249e9;
}  // namespace constants

// All frequencies in parameter records are ordinary frequencies (Hz).
// Conversion to angular units (rad/s) happens exactly once, when a
// Hamiltonian is assembled.
inline constexpr double hz_to_angular(double f_hz) { return two_pi * f_hz; }

struct SpinlabError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw SpinlabError(msg);
}

}  // namespace spinlab
