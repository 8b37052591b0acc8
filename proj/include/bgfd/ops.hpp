#pragma once

#include <vector>

#include "bgfd/tensor.hpp"

namespace bgfd {

// Elementwise; shapes must match exactly.
Tensor4 add(const Tensor4& a, const Tensor4& b);
Tensor4 sub(const Tensor4& a, const Tensor4& b);
Tensor4 mul(const Tensor4& a, const Tensor4& b);
Tensor4 scale(const Tensor4& a, double s);
Tensor4 add_scalar(const Tensor4& a, double s);

Tensor4 relu(const Tensor4& a);
Tensor4 sigmoid(const Tensor4& a);
Tensor4 abs_val(const Tensor4& a);

Tensor4 sum_all(const Tensor4& a);  // -> (1,1,1,1)
Tensor4 mean_all(const Tensor4& a); // -> (1,1,1,1)

// Softmax along one of the four axes (0=n, 1=c, 2=h, 3=w), computed with
// max-subtraction so arbitrarily large logits stay finite.
Tensor4 softmax_axis(const Tensor4& a, int axis);

// Batched matrix product: (n,c,h,k) x (n,c,k,w) -> (n,c,h,w).
Tensor4 matmul(const Tensor4& a, const Tensor4& b);

// General 2-D convolution. weight is (out_c, in_c/groups, kh, kw); bias is
// (1, out_c, 1, 1) or undefined. groups == in_c with 1-channel kernels gives
// depthwise, 1x1 kernels with groups == 1 give pointwise.
Tensor4 conv2d(const Tensor4& input, const Tensor4& weight, const Tensor4& bias,
               int stride = 1, int padding = 0, int groups = 1);

// Batch normalization over (n, h, w) per channel. gamma/beta are (1,C,1,1).
// Training mode normalizes with batch statistics (population variance) and
// folds them into the running buffers with the given momentum; eval mode
// normalizes with the running buffers.
Tensor4 batch_norm(const Tensor4& input, const Tensor4& gamma, const Tensor4& beta,
                   std::vector<double>& running_mean, std::vector<double>& running_var,
                   bool training, double eps = 1e-5, double momentum = 0.1);

// 2x bilinear upsampling, half-pixel-center convention: output center (i+0.5)/2 - 0.5.
Tensor4 bilinear_upsample_x2(const Tensor4& input);

Tensor4 concat_channels(const std::vector<Tensor4>& parts);
Tensor4 slice_channels(const Tensor4& input, int c_begin, int c_end); // [c_begin, c_end)
Tensor4 slice_batch(const Tensor4& input, int index);                 // one image, keeps n=1

// Criss-cross attention core: for each position (y, x) the attention set is
// the W+H-1 positions sharing its row or column (center once). Logits are
// <K at cross position, Q at (y,x)> over channels; weights softmax over the
// cross axis; output is the weight-averaged V. No residual, no scaling.
Tensor4 cross_attention(const Tensor4& q, const Tensor4& k, const Tensor4& v);

// Mean per-pixel cross-entropy of C-class logits (n,C,h,w) against integer
// class targets (n,1,h,w), natural log. Targets are constants.
Tensor4 softmax_cross_entropy(const Tensor4& logits, const Tensor4& targets);

} // namespace bgfd
