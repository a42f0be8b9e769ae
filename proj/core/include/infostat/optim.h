// Copyright 2026 The Infostat Authors.
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

#ifndef INFOSTAT_OPTIM_H_
#define INFOSTAT_OPTIM_H_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace infostat {

// Adam over one flat parameter block.
class Adam {
 public:
  explicit Adam(size_t size, double beta1 = 0.9, double beta2 = 0.999,
                double epsilon = 1e-8)
      : beta1_(beta1), beta2_(beta2), epsilon_(epsilon), m_(size), v_(size) {}

  void Step(std::span<double> params, std::span<const double> grads,
            double learning_rate) {
    ++t_;
    const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
    for (size_t i = 0; i < params.size(); ++i) {
      m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * grads[i];
      v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grads[i] * grads[i];
      params[i] -= learning_rate * (m_[i] / c1) / (std::sqrt(v_[i] / c2) + epsilon_);
    }
  }

  long long steps() const { return t_; }

 private:
  double beta1_, beta2_, epsilon_;
  std::vector<double> m_, v_;
  long long t_ = 0;
};

// Linear decay from base_rate at step 0 towards zero at total_steps.
inline double LinearSchedule(double base_rate, long long step,
                             long long total_steps) {
  if (total_steps <= 0) return base_rate;
  return base_rate * (1.0 - static_cast<double>(step) / static_cast<double>(total_steps));
}

}  // namespace infostat

#endif  // INFOSTAT_OPTIM_H_
