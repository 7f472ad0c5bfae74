#pragma once

#include <Eigen/Core>

namespace fods {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

} // namespace fods
