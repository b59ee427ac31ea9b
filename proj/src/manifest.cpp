#include "vc/manifest.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "vc/errors.hpp"

namespace vc {

namespace {

// Frame count from a feature-file header without decoding the payload.
std::uint32_t peek_frame_count(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open feature file: " + path.string());
    }
    std::array<unsigned char, 16> header{};
    in.read(reinterpret_cast<char*>(header.data()), 16);
    if (!in) {
        throw CorruptionError("truncated header in feature file: " + path.string());
    }
    return static_cast<std::uint32_t>(header[12]) | (static_cast<std::uint32_t>(header[13]) << 8) |
           (static_cast<std::uint32_t>(header[14]) << 16) |
           (static_cast<std::uint32_t>(header[15]) << 24);
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base / path;
}

} // namespace

std::vector<std::string> CorpusManifest::speakers() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& r : records) {
        if (seen.insert(r.speaker_id).second) {
            out.push_back(r.speaker_id);
        }
    }
    return out;
}

CorpusManifest CorpusManifest::filter_speaker(const std::string& speaker_id) const {
    CorpusManifest out;
    for (const auto& r : records) {
        if (r.speaker_id == speaker_id) {
            out.records.push_back(r);
        }
    }
    return out;
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open manifest: " + path.string());
    }
    const std::filesystem::path base = path.has_parent_path() ? path.parent_path() : ".";

    CorpusManifest manifest;
    std::set<std::pair<std::string, std::string>> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, '\t')) {
            fields.push_back(field);
        }
        if (fields.size() != 6) {
            throw FormatError("manifest line " + std::to_string(lineno) + " has " +
                              std::to_string(fields.size()) + " fields, expected 6");
        }
        UtteranceRecord rec;
        rec.utterance_id = fields[0];
        rec.speaker_id = fields[1];
        rec.label_path = resolve(base, fields[2]);
        rec.mcep_path = resolve(base, fields[3]);
        rec.logf0_path = resolve(base, fields[4]);
        rec.ap_path = resolve(base, fields[5]);
        if (rec.utterance_id.empty() || rec.speaker_id.empty()) {
            throw FormatError("manifest line " + std::to_string(lineno) + " has empty ids");
        }
        if (!ids.insert({rec.speaker_id, rec.utterance_id}).second) {
            throw ValidationError("duplicate utterance " + rec.utterance_id + " for speaker " +
                                  rec.speaker_id);
        }
        manifest.records.push_back(std::move(rec));
    }
    return manifest;
}

void save_manifest(const CorpusManifest& manifest, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw IoError("cannot open manifest for writing: " + path.string());
    }
    const std::filesystem::path base = path.has_parent_path() ? path.parent_path() : ".";
    auto rel = [&base](const std::filesystem::path& p) {
        const auto r = p.lexically_relative(base);
        return r.empty() ? p.string() : r.string();
    };
    for (const auto& r : manifest.records) {
        out << r.utterance_id << '\t' << r.speaker_id << '\t' << rel(r.label_path) << '\t'
            << rel(r.mcep_path) << '\t' << rel(r.logf0_path) << '\t' << rel(r.ap_path) << '\n';
    }
    out.flush();
    if (!out) {
        throw IoError("failed writing manifest: " + path.string());
    }
}

void validate_record_lengths(const CorpusManifest& manifest) {
    for (const auto& r : manifest.records) {
        const std::uint32_t t_label = peek_frame_count(r.label_path);
        const std::uint32_t t_mcep = peek_frame_count(r.mcep_path);
        const std::uint32_t t_f0 = peek_frame_count(r.logf0_path);
        const std::uint32_t t_ap = peek_frame_count(r.ap_path);
        if (t_label != t_mcep || t_label != t_f0 || t_label != t_ap) {
            throw ValidationError("frame count mismatch in utterance " + r.utterance_id +
                                  " of speaker " + r.speaker_id);
        }
    }
}

} // namespace vc
