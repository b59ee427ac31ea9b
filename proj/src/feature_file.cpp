#include "vc/feature_file.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

#include "vc/errors.hpp"

namespace vc {

namespace {

constexpr std::array<char, 4> kMagic = {'V', 'C', 'F', 'T'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& out, std::uint32_t v) {
    const std::array<unsigned char, 4> b = {
        static_cast<unsigned char>(v & 0xff),
        static_cast<unsigned char>((v >> 8) & 0xff),
        static_cast<unsigned char>((v >> 16) & 0xff),
        static_cast<unsigned char>((v >> 24) & 0xff),
    };
    out.write(reinterpret_cast<const char*>(b.data()), 4);
}

std::uint32_t get_u32(std::istream& in) {
    std::array<unsigned char, 4> b{};
    in.read(reinterpret_cast<char*>(b.data()), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f32(std::ostream& out, float v) {
    std::uint32_t bits = 0;
    std::memcpy(&bits, &v, 4);
    put_u32(out, bits);
}

float get_f32(std::istream& in) {
    const std::uint32_t bits = get_u32(in);
    float v = 0.0f;
    std::memcpy(&v, &bits, 4);
    return v;
}

} // namespace

FeatureSequence read_feature_file(const std::filesystem::path& path, FeatureKind kind) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open feature file: " + path.string());
    }

    std::array<char, 4> magic{};
    in.read(magic.data(), 4);
    if (!in || magic != kMagic) {
        throw FormatError("bad magic in feature file: " + path.string());
    }
    const std::uint32_t version = get_u32(in);
    if (!in || version != kVersion) {
        throw FormatError("unsupported feature file version in " + path.string());
    }
    const std::uint32_t dim = get_u32(in);
    const std::uint32_t frames = get_u32(in);
    if (!in) {
        throw CorruptionError("truncated header in feature file: " + path.string());
    }
    if (dim == 0 || frames == 0) {
        throw ValidationError("feature file declares empty matrix: " + path.string());
    }

    Eigen::MatrixXd m(frames, dim);
    for (std::uint32_t t = 0; t < frames; ++t) {
        for (std::uint32_t d = 0; d < dim; ++d) {
            m(t, d) = static_cast<double>(get_f32(in));
        }
    }
    if (!in) {
        throw CorruptionError("truncated payload in feature file: " + path.string());
    }
    in.peek();
    if (!in.eof()) {
        throw CorruptionError("trailing bytes in feature file: " + path.string());
    }
    if (!m.allFinite()) {
        throw ValidationError("non-finite values in feature file: " + path.string());
    }
    return FeatureSequence(std::move(m), kind);
}

void write_feature_file(const FeatureSequence& seq, const std::filesystem::path& path) {
    const Eigen::MatrixXd& m = seq.frames();
    validate_frames(m, seq.kind());
    if (m.rows() > std::numeric_limits<std::uint32_t>::max() ||
        m.cols() > std::numeric_limits<std::uint32_t>::max()) {
        throw ValidationError("sequence too large for feature file format");
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open feature file for writing: " + path.string());
    }
    out.write(kMagic.data(), 4);
    put_u32(out, kVersion);
    put_u32(out, static_cast<std::uint32_t>(m.cols()));
    put_u32(out, static_cast<std::uint32_t>(m.rows()));
    for (Eigen::Index t = 0; t < m.rows(); ++t) {
        for (Eigen::Index d = 0; d < m.cols(); ++d) {
            put_f32(out, static_cast<float>(m(t, d)));
        }
    }
    out.flush();
    if (!out) {
        throw IoError("failed writing feature file: " + path.string());
    }
}

} // namespace vc
