#include "vc/normalization.hpp"

#include <cmath>

#include "vc/errors.hpp"

namespace vc {

NormStats NormStats::identity(Eigen::Index dim) {
    NormStats s;
    s.mean = Eigen::VectorXd::Zero(dim);
    s.std = Eigen::VectorXd::Ones(dim);
    return s;
}

bool NormStats::is_valid() const {
    if (mean.size() != std.size() || mean.size() < 1) {
        return false;
    }
    return mean.allFinite() && std.allFinite() && (std.array() > 0.0).all();
}

NormStats compute_norm_stats(const std::vector<FeatureSequence>& seqs) {
    if (seqs.empty()) {
        throw ValidationError("compute_norm_stats: empty input");
    }
    const Eigen::Index dim = seqs.front().dim();
    Eigen::Index total = 0;
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(dim);
    for (const auto& s : seqs) {
        if (s.dim() != dim) {
            throw DimensionError("compute_norm_stats: mixed dimensions");
        }
        sum += s.frames().colwise().sum().transpose();
        total += s.num_frames();
    }
    if (total < 1) {
        throw ValidationError("compute_norm_stats: no frames");
    }
    NormStats stats;
    stats.mean = sum / static_cast<double>(total);

    Eigen::VectorXd sq = Eigen::VectorXd::Zero(dim);
    for (const auto& s : seqs) {
        sq += (s.frames().rowwise() - stats.mean.transpose()).array().square().colwise().sum().matrix().transpose();
    }
    stats.std = (sq / static_cast<double>(total)).array().sqrt();
    for (Eigen::Index d = 0; d < dim; ++d) {
        if (stats.std(d) < 1e-8) {
            stats.std(d) = 1.0;
        }
    }
    return stats;
}

FeatureSequence normalize(const FeatureSequence& seq, const NormStats& stats) {
    if (seq.dim() != stats.dim()) {
        throw DimensionError("normalize: sequence/stats dimension mismatch");
    }
    Eigen::MatrixXd out =
        (seq.frames().rowwise() - stats.mean.transpose()).array().rowwise() /
        stats.std.transpose().array();
    return FeatureSequence(std::move(out), seq.kind());
}

FeatureSequence denormalize(const FeatureSequence& seq, const NormStats& stats) {
    if (seq.dim() != stats.dim()) {
        throw DimensionError("denormalize: sequence/stats dimension mismatch");
    }
    Eigen::MatrixXd out =
        (seq.frames().array().rowwise() * stats.std.transpose().array()).rowwise() +
        stats.mean.transpose().array();
    return FeatureSequence(std::move(out), seq.kind());
}

FeatureSequence stack_context(const FeatureSequence& seq, int left, int right) {
    if (left < 0 || right < 0) {
        throw ValidationError("stack_context: negative context size");
    }
    const Eigen::Index frames = seq.num_frames();
    const Eigen::Index dim = seq.dim();
    const int window = left + 1 + right;
    Eigen::MatrixXd out(frames, static_cast<Eigen::Index>(window) * dim);
    for (Eigen::Index t = 0; t < frames; ++t) {
        for (int k = -left; k <= right; ++k) {
            Eigen::Index src = t + k;
            if (src < 0) src = 0;
            if (src >= frames) src = frames - 1;
            out.block(t, static_cast<Eigen::Index>(k + left) * dim, 1, dim) =
                seq.frames().row(src);
        }
    }
    return FeatureSequence(std::move(out), seq.kind());
}

} // namespace vc
