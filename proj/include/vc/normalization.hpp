#ifndef VC_NORMALIZATION_HPP
#define VC_NORMALIZATION_HPP

#include <vector>

#include "vc/feature_sequence.hpp"

namespace vc {

// Per-dimension z-scoring statistics.
struct NormStats {
    Eigen::VectorXd mean;
    Eigen::VectorXd std;

    // mean 0 / std 1 for every dimension; normalization becomes a no-op.
    static NormStats identity(Eigen::Index dim);

    Eigen::Index dim() const { return mean.size(); }
    bool is_valid() const;
};

// Mean and population standard deviation (divide by N) per dimension over
// all frames of all sequences. Dimensions with std below 1e-8 get std 1 so
// degenerate dimensions pass through unscaled.
NormStats compute_norm_stats(const std::vector<FeatureSequence>& seqs);

FeatureSequence normalize(const FeatureSequence& seq, const NormStats& stats);
FeatureSequence denormalize(const FeatureSequence& seq, const NormStats& stats);

// Concatenates `left` preceding and `right` following frames onto each frame,
// replicating the first/last frame beyond the sequence edges. Output row t is
//   [x_{t-left} ... x_t ... x_{t+right}]
// with D' = (left+1+right)*D.
FeatureSequence stack_context(const FeatureSequence& seq, int left, int right);

} // namespace vc

#endif
