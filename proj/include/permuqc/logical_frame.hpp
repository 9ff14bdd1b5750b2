#pragma once

#include "permuqc/mat2.hpp"
#include "permuqc/state.hpp"

namespace permuqc {

// 2x2 action of an operator in an orthonormal two-state frame {b0, b1},
// given the operator's images of the frame vectors. matrix(i, j) =
// <b_i | img_j>; residual measures leakage outside the frame's span.
struct LogicalAction {
  Mat2 matrix;
  double residual = 0.0;
};

inline LogicalAction logical_action(const SparseState& img0, const SparseState& img1,
                                    const SparseState& b0, const SparseState& b1) {
  LogicalAction out;
  const SparseState* imgs[2] = {&img0, &img1};
  const SparseState* frame[2] = {&b0, &b1};
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) out.matrix.at(i, j) = inner_product(*frame[i], *imgs[j]);
    SparseState remainder = superpose({{Cx(1.0, 0.0), *imgs[j]},
                                       {-out.matrix.at(0, j), *frame[0]},
                                       {-out.matrix.at(1, j), *frame[1]}});
    out.residual = std::max(out.residual, norm(remainder));
  }
  return out;
}

}  // namespace permuqc
