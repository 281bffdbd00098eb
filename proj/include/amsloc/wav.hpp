#pragma once

#include <string>

#include "amsloc/types.hpp"

namespace amsloc {

enum class WavEncoding { pcm16, float32 };

// Reads a RIFF/WAVE file (PCM16 or IEEE float32, 1-8 channels).
// PCM16 samples are normalized as value / 32768.
MultichannelAudio read_wav(const std::string& path);

void write_wav(const std::string& path, const MultichannelAudio& audio,
               WavEncoding encoding = WavEncoding::float32);

} // namespace amsloc
