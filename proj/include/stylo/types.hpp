#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace stylo {

using Scalar = double;

template <typename T = Scalar>
using DenseVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <typename T = Scalar>
using DenseMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

// Feature counts keyed by vocabulary index; never stores explicit zeros
// when produced by the featurizers.
template <typename T = Scalar>
using SparseVector = Eigen::SparseVector<T>;

template <typename T = Scalar>
using SparseRowMatrix = Eigen::SparseMatrix<T, Eigen::RowMajor>;

}  // namespace stylo
