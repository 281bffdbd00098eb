#pragma once

#include "amsloc/types.hpp"

namespace amsloc {

// Rational-ratio sample rate reduction with a Kaiser-windowed FIR anti-alias
// lowpass (cutoff 0.45 * target_rate, >= 60 dB stopband above target_rate/2).
// Linear phase; the group delay is compensated so channels stay aligned.
MultichannelAudio decimate(const MultichannelAudio& audio, double target_rate);

// Kaiser-windowed sinc lowpass at the given rate, gain `gain` in the passband.
// Exposed for the resampler tests; `cutoff_hz` is the -6 dB point.
std::vector<double> kaiser_sinc_lowpass(double cutoff_hz, double transition_hz,
                                        double sample_rate, double atten_db, double gain);

} // namespace amsloc
