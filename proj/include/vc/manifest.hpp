#ifndef VC_MANIFEST_HPP
#define VC_MANIFEST_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace vc {

// One utterance of one speaker, with its four feature files.
struct UtteranceRecord {
    std::string utterance_id;
    std::string speaker_id;
    std::filesystem::path label_path;
    std::filesystem::path mcep_path;
    std::filesystem::path logf0_path;
    std::filesystem::path ap_path;
};

// Corpus manifest: UTF-8 text, one record per line, tab-separated
//   utterance_id  speaker_id  label_path  mcep_path  logf0_path  ap_path
// Lines starting with '#' are ignored. Relative paths are resolved against
// the manifest's directory on load.
struct CorpusManifest {
    std::vector<UtteranceRecord> records;

    std::vector<std::string> speakers() const;
    CorpusManifest filter_speaker(const std::string& speaker_id) const;
};

CorpusManifest load_manifest(const std::filesystem::path& path);
void save_manifest(const CorpusManifest& manifest, const std::filesystem::path& path);

// Checks that all four files of every record exist and declare the same
// frame count. Reads headers only.
void validate_record_lengths(const CorpusManifest& manifest);

} // namespace vc

#endif
