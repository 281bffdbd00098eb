#include "amsloc/wav.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace amsloc {

namespace {

std::uint32_t read_u32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void append_u32(std::vector<std::uint8_t>& v, std::uint32_t x) {
    v.push_back(static_cast<std::uint8_t>(x & 0xff));
    v.push_back(static_cast<std::uint8_t>((x >> 8) & 0xff));
    v.push_back(static_cast<std::uint8_t>((x >> 16) & 0xff));
    v.push_back(static_cast<std::uint8_t>((x >> 24) & 0xff));
}

void append_u16(std::vector<std::uint8_t>& v, std::uint16_t x) {
    v.push_back(static_cast<std::uint8_t>(x & 0xff));
    v.push_back(static_cast<std::uint8_t>((x >> 8) & 0xff));
}

void append_tag(std::vector<std::uint8_t>& v, const char* tag) {
    v.insert(v.end(), tag, tag + 4);
}

} // namespace

MultichannelAudio read_wav(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());

    if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
        throw FormatError(path + ": not a RIFF/WAVE file");
    }

    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    bool have_fmt = false;
    const std::uint8_t* data = nullptr;
    std::uint64_t data_size = 0;

    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const std::uint8_t* hdr = bytes.data() + pos;
        const std::uint32_t chunk_size = read_u32(hdr + 4);
        const std::size_t body = pos + 8;
        if (std::memcmp(hdr, "fmt ", 4) == 0) {
            if (body + 16 > bytes.size()) throw FormatError(path + ": truncated fmt chunk");
            format = read_u16(bytes.data() + body);
            channels = read_u16(bytes.data() + body + 2);
            rate = read_u32(bytes.data() + body + 4);
            bits = read_u16(bytes.data() + body + 14);
            have_fmt = true;
        } else if (std::memcmp(hdr, "data", 4) == 0) {
            if (body + chunk_size > bytes.size())
                throw FormatError(path + ": data chunk promises more bytes than the file holds");
            data = bytes.data() + body;
            data_size = chunk_size;
        }
        pos = body + chunk_size + (chunk_size & 1); // chunks are word-aligned
    }

    if (!have_fmt || data == nullptr) throw FormatError(path + ": missing fmt or data chunk");
    if (channels < 1 || channels > 8)
        throw UnsupportedError(path + ": unsupported channel count " + std::to_string(channels));
    if (rate == 0) throw FormatError(path + ": zero sample rate");

    const bool pcm16 = (format == 1 && bits == 16);
    const bool f32 = (format == 3 && bits == 32);
    if (!pcm16 && !f32)
        throw UnsupportedError(path + ": only PCM16 and float32 encodings are supported");

    const std::size_t bytes_per_sample = bits / 8u;
    const std::size_t frame_bytes = bytes_per_sample * channels;
    const std::size_t n = data_size / frame_bytes;

    MultichannelAudio out;
    out.sample_rate = static_cast<double>(rate);
    out.samples.resize(static_cast<Eigen::Index>(n), channels);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint16_t c = 0; c < channels; ++c) {
            const std::uint8_t* p = data + i * frame_bytes + c * bytes_per_sample;
            double v;
            if (pcm16) {
                std::int16_t s;
                std::memcpy(&s, p, 2);
                v = static_cast<double>(s) / 32768.0;
            } else {
                float s;
                std::memcpy(&s, p, 4);
                v = static_cast<double>(s);
            }
            out.samples(static_cast<Eigen::Index>(i), c) = v;
        }
    }
    out.validate();
    return out;
}

void write_wav(const std::string& path, const MultichannelAudio& audio, WavEncoding encoding) {
    audio.validate();
    const auto n = static_cast<std::size_t>(audio.sample_count());
    const auto channels = static_cast<std::uint16_t>(audio.channel_count());
    if (channels < 1 || channels > 8)
        throw UnsupportedError("write_wav supports 1-8 channels");

    const bool f32 = encoding == WavEncoding::float32;
    const std::uint16_t bits = f32 ? 32 : 16;
    const std::uint32_t rate = static_cast<std::uint32_t>(audio.sample_rate);
    const std::uint32_t frame_bytes = channels * bits / 8u;
    const std::uint32_t data_size = static_cast<std::uint32_t>(n * frame_bytes);

    std::vector<std::uint8_t> out;
    out.reserve(data_size + 64);
    append_tag(out, "RIFF");
    append_u32(out, 0); // patched below
    append_tag(out, "WAVE");
    append_tag(out, "fmt ");
    append_u32(out, f32 ? 18u : 16u);
    append_u16(out, f32 ? 3u : 1u);
    append_u16(out, channels);
    append_u32(out, rate);
    append_u32(out, rate * frame_bytes);
    append_u16(out, static_cast<std::uint16_t>(frame_bytes));
    append_u16(out, bits);
    if (f32) {
        append_u16(out, 0); // cbSize
        append_tag(out, "fact");
        append_u32(out, 4);
        append_u32(out, static_cast<std::uint32_t>(n));
    }
    append_tag(out, "data");
    append_u32(out, data_size);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint16_t c = 0; c < channels; ++c) {
            const double v = audio.samples(static_cast<Eigen::Index>(i), c);
            if (f32) {
                const float s = static_cast<float>(v);
                std::uint32_t u;
                std::memcpy(&u, &s, 4);
                append_u32(out, u);
            } else {
                double scaled = v * 32768.0;
                if (scaled > 32767.0) scaled = 32767.0;
                if (scaled < -32768.0) scaled = -32768.0;
                const auto s = static_cast<std::int16_t>(std::lrint(scaled));
                append_u16(out, static_cast<std::uint16_t>(s));
            }
        }
    }
    const std::uint32_t riff_size = static_cast<std::uint32_t>(out.size()) - 8;
    out[4] = static_cast<std::uint8_t>(riff_size & 0xff);
    out[5] = static_cast<std::uint8_t>((riff_size >> 8) & 0xff);
    out[6] = static_cast<std::uint8_t>((riff_size >> 16) & 0xff);
    out[7] = static_cast<std::uint8_t>((riff_size >> 24) & 0xff);

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!f) throw IoError("short write to " + path);
}

} // namespace amsloc
