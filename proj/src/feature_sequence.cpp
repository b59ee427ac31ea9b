#include "vc/feature_sequence.hpp"

#include <cmath>

#include "vc/errors.hpp"

namespace vc {

std::string to_string(FeatureKind kind) {
    switch (kind) {
        case FeatureKind::mcep: return "mcep";
        case FeatureKind::logf0: return "logf0";
        case FeatureKind::aperiodicity: return "aperiodicity";
        case FeatureKind::label: return "label";
    }
    return "unknown";
}

FeatureSequence::FeatureSequence(Eigen::MatrixXd frames, FeatureKind kind)
    : frames_(std::move(frames)), kind_(kind) {
    validate_frames(frames_, kind_);
}

FeatureSequence FeatureSequence::with_kind(FeatureKind kind) const {
    return FeatureSequence(frames_, kind);
}

bool FeatureSequence::operator==(const FeatureSequence& other) const {
    return kind_ == other.kind_ && frames_.rows() == other.frames_.rows() &&
           frames_.cols() == other.frames_.cols() && frames_ == other.frames_;
}

void validate_frames(const Eigen::MatrixXd& frames, FeatureKind kind) {
    if (frames.rows() < 1 || frames.cols() < 1) {
        throw ValidationError("feature sequence must have at least one frame and one dimension");
    }
    if (!frames.allFinite()) {
        throw ValidationError("feature sequence contains non-finite values");
    }
    if (kind == FeatureKind::logf0 && frames.cols() != 1) {
        throw ValidationError("logf0 sequence must be single-dimensional");
    }
    if (kind == FeatureKind::label) {
        for (Eigen::Index t = 0; t < frames.rows(); ++t) {
            double sum = 0.0;
            for (Eigen::Index d = 0; d < frames.cols(); ++d) {
                const double v = frames(t, d);
                if (v != 0.0 && v != 1.0) {
                    throw ValidationError("label frames must be binary");
                }
                sum += v;
            }
            if (sum != 1.0) {
                throw ValidationError("label frames must be one-hot");
            }
        }
    }
}

} // namespace vc
