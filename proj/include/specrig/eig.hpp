#ifndef SPECRIG_EIG_HPP
#define SPECRIG_EIG_HPP

#include <vector>

namespace specrig {

// Full eigendecomposition of a dense symmetric matrix.
// values are ascending; component i of eigenvector j is vectors[i*n + j].
struct EigResult {
    std::vector<double> values;
    std::vector<double> vectors;
};

// Householder tridiagonal reduction followed by implicit-shift QL with
// accumulated transformations. a is row-major n*n and assumed symmetric.
EigResult sym_eig(const std::vector<double>& a, int n);

} // namespace specrig

#endif
