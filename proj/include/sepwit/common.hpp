#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace sepwit {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Base class for every error the toolkit raises. `code()` is the stable
// machine-readable name used in CLI error objects and exit-code mapping.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define SEPWIT_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& message)                   \
            : Error(#Name, message) {}                              \
    }

SEPWIT_DEFINE_ERROR(DimensionMismatch);
SEPWIT_DEFINE_ERROR(NotHermitian);
SEPWIT_DEFINE_ERROR(PartitionMismatch);
SEPWIT_DEFINE_ERROR(IndexOutOfRange);
SEPWIT_DEFINE_ERROR(InvalidPartition);
SEPWIT_DEFINE_ERROR(InvalidArgument);
SEPWIT_DEFINE_ERROR(EigenDecompositionFailure);
SEPWIT_DEFINE_ERROR(NoConvergedSolution);
SEPWIT_DEFINE_ERROR(DimensionGuard);
SEPWIT_DEFINE_ERROR(UnsupportedSpace);

#undef SEPWIT_DEFINE_ERROR

}  // namespace sepwit
