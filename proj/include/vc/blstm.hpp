#ifndef VC_BLSTM_HPP
#define VC_BLSTM_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "vc/feature_sequence.hpp"
#include "vc/normalization.hpp"

namespace vc {

// Weights of one LSTM direction with peephole connections.
//
// Gate order is i, f, c, o throughout (cell input is the tanh candidate).
// Peepholes are elementwise vectors applied to the cell state: p_ci and p_cf
// see the previous cell value, p_co sees the freshly updated one. The forget
// gate has its own peephole vector, independent of the input gate's.
struct LstmDirectionParams {
    Eigen::MatrixXd w_xi, w_hi;
    Eigen::VectorXd b_i;
    Eigen::MatrixXd w_xf, w_hf;
    Eigen::VectorXd b_f;
    Eigen::MatrixXd w_xc, w_hc;
    Eigen::VectorXd b_c;
    Eigen::MatrixXd w_xo, w_ho;
    Eigen::VectorXd b_o;
    Eigen::VectorXd p_ci, p_cf, p_co;

    Eigen::Index input_size() const { return w_xi.cols(); }
    Eigen::Index hidden_size() const { return w_xi.rows(); }

    static LstmDirectionParams zeros(Eigen::Index input, Eigen::Index hidden);
};

// One bidirectional layer: independent weights per direction, equal sizes.
struct BlstmLayer {
    LstmDirectionParams forward;
    LstmDirectionParams backward;
};

// Final affine map from the top layer's two direction streams.
struct OutputProjection {
    Eigen::MatrixXd w_fy; // applied to the forward stream
    Eigen::MatrixXd w_by; // applied to the backward stream
    Eigen::VectorXd b_y;
};

// All trainable tensors of a model. Shared by the model itself and by
// gradient/velocity buffers, which must be shape-congruent with it.
struct ParamSet {
    std::vector<BlstmLayer> layers;
    OutputProjection output;

    static ParamSet zeros_like(const ParamSet& other);
    void set_zero();
};

// Enumerates every tensor of a ParamSet as a flat span, in the fixed order
// used by the model file format, the optimizer and the gradient checker:
// per layer forward then backward; per direction W_xi, W_hi, b_i, W_xf,
// W_hf, b_f, W_xc, W_hc, b_c, W_xo, W_ho, b_o, p_ci, p_cf, p_co; then
// W_fy, W_by, b_y.
std::vector<std::span<double>> tensor_spans(ParamSet& params);
std::vector<std::span<const double>> tensor_spans(const ParamSet& params);

std::size_t parameter_count(const ParamSet& params);

// Stacked bidirectional LSTM with an affine output projection and the
// z-scoring applied at its input and output boundaries.
//
// arch lists [I, H_1, ..., H_L, O] where H_k is the per-direction hidden
// size of layer k; layer k > 1 consumes the 2*H_{k-1} concatenated streams.
struct BlstmModel {
    ParamSet params;
    std::vector<int> arch;
    NormStats input_norm;
    NormStats output_norm;

    Eigen::Index input_dim() const { return arch.front(); }
    Eigen::Index output_dim() const { return arch.back(); }
};

// All weights uniform in [-0.1, 0.1] from an mt19937_64 stream keyed by
// seed (entries drawn row-major, tensors in tensor_spans order); biases and
// peepholes zero; identity normalization stats.
BlstmModel init_params(const std::vector<int>& arch, std::uint64_t seed);

// Checks shape congruence of every tensor against arch; throws DimensionError.
void validate_model(const BlstmModel& model);

// One step of the peephole LSTM recurrence:
//   i = sigma(W_xi x + W_hi h' + p_ci . c' + b_i)
//   f = sigma(W_xf x + W_hf h' + p_cf . c' + b_f)
//   c = f . c' + i . tanh(W_xc x + W_hc h' + b_c)
//   o = sigma(W_xo x + W_ho h' + p_co . c + b_o)
//   h = o . tanh(c)
struct CellState {
    Eigen::VectorXd h;
    Eigen::VectorXd c;
};
CellState lstm_cell_step(const LstmDirectionParams& p, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& h_prev, const Eigen::VectorXd& c_prev);

// Runs both directions over the input frames (forward from t=0, backward
// from t=T-1, zero initial states) and concatenates per frame:
// out[t] = [h_fwd[t]; h_bwd[t]], giving T x 2H.
Eigen::MatrixXd blstm_layer_forward(const BlstmLayer& layer, const Eigen::MatrixXd& input);

// Full inference: input z-scored by input_norm, layers applied in order,
// output projection, then denormalization by output_norm.
FeatureSequence stack_forward(const BlstmModel& model, const FeatureSequence& input);

} // namespace vc

#endif
