#ifndef RELAXO_TYPES_HPP
#define RELAXO_TYPES_HPP

#include <Eigen/Core>
#include <stdexcept>

namespace relaxo {

using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Thrown on malformed matrix input (bad Matrix Market header, duplicate
/// coordinates, missing or non-positive diagonal, ...).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Running count of matrix-vector products. Solvers report it per iteration;
/// the adaptive methods are specified in terms of this cost metric.
struct MatvecCounter {
    long long count = 0;
};

} // namespace relaxo

#endif
