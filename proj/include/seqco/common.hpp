#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace seqco {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

/// Points stored one per row, columns are x/y.
using Points = Eigen::Matrix<double, Eigen::Dynamic, 2>;

/// Error with a stable machine-parsable code. The CLI maps codes to exit
/// statuses; tests match on the code rather than the message text.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* invalid_size = "invalid-size";
inline constexpr const char* invalid_value = "invalid-value";
inline constexpr const char* constraint_violation = "constraint-violation";
inline constexpr const char* incomplete_solution = "incomplete-solution";
inline constexpr const char* size_limit = "size-limit";
inline constexpr const char* range = "range";
inline constexpr const char* capacity = "capacity";
inline constexpr const char* shape = "shape";
inline constexpr const char* config = "config";
inline constexpr const char* file = "file";
inline constexpr const char* compatibility = "compatibility";
inline constexpr const char* degenerate_baseline = "degenerate-baseline";
inline constexpr const char* cache_order = "cache-order";
inline constexpr const char* divergence = "divergence";
}  // namespace errc

}  // namespace seqco
