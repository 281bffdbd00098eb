#pragma once

#include <Eigen/Dense>

#include "amsloc/errors.hpp"

namespace amsloc {

using Eigen::ArrayXd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Sampled audio. Rows are time, columns are channels. Hearing-aid input
// follows the channel order [left-front, left-back, right-front, right-back].
struct MultichannelAudio {
    MatrixXd samples;
    double sample_rate = 0.0;

    Eigen::Index channel_count() const { return samples.cols(); }
    Eigen::Index sample_count() const { return samples.rows(); }
    double duration_s() const { return static_cast<double>(sample_count()) / sample_rate; }

    void validate() const {
        if (sample_rate <= 0.0) throw ArgumentError("sample_rate must be positive");
        if (!samples.allFinite()) throw ArgumentError("audio contains NaN or Inf samples");
    }
};

} // namespace amsloc
