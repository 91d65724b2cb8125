// Copyright 2026 The Clfusion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minimal reverse-mode automatic differentiation over dense double matrices.
// A Tape owns all nodes of one forward pass; backward() runs the recorded
// closures in reverse. Everything is double precision and deterministic.

#ifndef CLF_AUTODIFF_HPP_
#define CLF_AUTODIFF_HPP_

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace clf::ad {

struct Var {
  int idx = -1;
  bool valid() const { return idx >= 0; }
};

class Tape {
 public:
  // Leaf that participates in gradients (parameters, differentiable inputs).
  Var leaf(Eigen::MatrixXd value);
  // Leaf excluded from gradient propagation (data, masks, biases).
  Var constant(Eigen::MatrixXd value);

  const Eigen::MatrixXd& value(Var v) const { return nodes_[v.idx].value; }
  const Eigen::MatrixXd& grad(Var v) const;

  Var matmul(Var a, Var b);     // A * B
  Var matmul_nt(Var a, Var b);  // A * B^T
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var add_row_broadcast(Var a, Var row);  // row: 1 x n, added to every row of A
  Var scale(Var a, double s);
  Var hadamard(Var a, Var b);
  Var softmax_rows(Var a);
  Var log_softmax_rows(Var a);
  Var layer_norm_rows(Var x, Var gamma, Var beta, double eps = 1e-5);
  Var relu(Var a);
  Var sigmoid(Var a);
  Var tanh(Var a);
  Var abs(Var a);
  Var concat_rows(Var a, Var b);
  Var slice_rows(Var a, int start, int count);
  Var slice_cols(Var a, int start, int count);
  Var concat_cols(const std::vector<Var>& parts);
  Var gather_rows(Var a, std::vector<int> rows);
  Var sum_all(Var a);  // 1 x 1
  // sum_i weights[i] * a(cells[i].first, cells[i].second), as 1 x 1.
  Var pick_weighted(Var a, std::vector<std::pair<int, int>> cells, std::vector<double> weights);

  void backward(Var root);  // root must be 1 x 1

  size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Eigen::MatrixXd value;
    Eigen::MatrixXd grad;  // empty until touched
    std::function<void(Tape&)> back;
    bool needs_grad = false;
  };

  Var push(Eigen::MatrixXd value, bool needs_grad, std::function<void(Tape&)> back);
  bool wants(Var v) const { return nodes_[v.idx].needs_grad; }
  Eigen::MatrixXd& grad_ref(int idx);
  bool has_grad(int idx) const { return nodes_[idx].grad.size() > 0; }

  std::vector<Node> nodes_;
};

}  // namespace clf::ad

#endif  // CLF_AUTODIFF_HPP_
