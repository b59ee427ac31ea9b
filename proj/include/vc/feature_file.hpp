#ifndef VC_FEATURE_FILE_HPP
#define VC_FEATURE_FILE_HPP

#include <filesystem>

#include "vc/feature_sequence.hpp"

namespace vc {

// Binary feature file, little-endian:
//
//   bytes  0-3   magic "VCFT"
//   bytes  4-7   version, u32 = 1
//   bytes  8-11  D, u32
//   bytes 12-15  T, u32
//   bytes 16-    T*D float32 values, row-major (frame-major)
//
// Values are rounded to float32 on write, so write/read/write produces
// byte-identical files.

FeatureSequence read_feature_file(const std::filesystem::path& path,
                                  FeatureKind kind = FeatureKind::mcep);

void write_feature_file(const FeatureSequence& seq, const std::filesystem::path& path);

} // namespace vc

#endif
