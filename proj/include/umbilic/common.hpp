#ifndef UMBILIC_COMMON_HPP
#define UMBILIC_COMMON_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace umbilic {

using cplx = std::complex<double>;
using VectorXc = Eigen::VectorXcd;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

/// Field evaluated on the stereographic chart of the direction sphere.
using ComplexField = std::function<cplx(cplx)>;
using RealField = std::function<double(cplx)>;

/// Malformed or out-of-contract input (CLI exit code 2).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical result could not be certified (CLI exit code 3).
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kPi = 3.14159265358979323846;

/// Binomial coefficient as a double; exact for the degrees used here.
inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

template <typename Scalar>
std::complex<Scalar> ipow(const std::complex<Scalar>& z, int p) {
    std::complex<Scalar> out(1), base = z;
    while (p > 0) {
        if (p & 1) out *= base;
        base *= base;
        p >>= 1;
    }
    return out;
}

}  // namespace umbilic

#endif  // UMBILIC_COMMON_HPP
