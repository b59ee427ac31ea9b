#ifndef VC_FEATURE_SEQUENCE_HPP
#define VC_FEATURE_SEQUENCE_HPP

#include <Eigen/Dense>
#include <string>

namespace vc {

enum class FeatureKind { mcep, logf0, aperiodicity, label };

std::string to_string(FeatureKind kind);

// A T x D matrix of frame-level features. Rows are frames.
//
// Values are held as doubles; the on-disk format stores 32-bit floats, so
// sequences that came from a file always hold float-representable values.
// For kind logf0 the single dimension carries natural-log Hz and the value 0
// marks an unvoiced frame.
class FeatureSequence {
public:
    FeatureSequence() = default;
    FeatureSequence(Eigen::MatrixXd frames, FeatureKind kind);

    const Eigen::MatrixXd& frames() const { return frames_; }
    FeatureKind kind() const { return kind_; }

    Eigen::Index num_frames() const { return frames_.rows(); }
    Eigen::Index dim() const { return frames_.cols(); }

    // Same frames tagged with another kind; validates the kind's invariants.
    FeatureSequence with_kind(FeatureKind kind) const;

    bool operator==(const FeatureSequence& other) const;

private:
    Eigen::MatrixXd frames_;
    FeatureKind kind_ = FeatureKind::mcep;
};

// Throws ValidationError on T < 1, D < 1 or non-finite entries, plus the
// per-kind rules: label rows must be one-hot, logf0 must be single-dim.
void validate_frames(const Eigen::MatrixXd& frames, FeatureKind kind);

} // namespace vc

#endif
