#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace costembed {

struct AdamConfig {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::size_t max_iterations = 2000;

    /// Throws std::invalid_argument on a non-positive learning rate or betas outside [0, 1).
    void validate() const;
};

/// Adam with bias-corrected moments. Owns its moment estimates.
class Adam {
  public:
    Adam(AdamConfig config, std::size_t dimension);

    /// params -= lr * m_hat / (sqrt(v_hat) + eps). Throws std::invalid_argument on size mismatch.
    void step(std::span<double> params, std::span<const double> gradient);

    std::size_t steps_taken() const { return t_; }
    const std::vector<double> &first_moment() const { return m_; }
    const std::vector<double> &second_moment() const { return v_; }
    const AdamConfig &config() const { return config_; }

  private:
    AdamConfig config_;
    std::vector<double> m_;
    std::vector<double> v_;
    std::size_t t_ = 0;
};

}  // namespace costembed
