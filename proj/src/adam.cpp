#include "costembed/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace costembed {

void AdamConfig::validate() const {
    if (!(learning_rate > 0.0)) throw std::invalid_argument("learning rate must be positive");
    if (!(beta1 >= 0.0 && beta1 < 1.0)) throw std::invalid_argument("beta1 must lie in [0, 1)");
    if (!(beta2 >= 0.0 && beta2 < 1.0)) throw std::invalid_argument("beta2 must lie in [0, 1)");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
}

Adam::Adam(AdamConfig config, std::size_t dimension) : config_(config), m_(dimension, 0.0), v_(dimension, 0.0) {
    config_.validate();
}

void Adam::step(std::span<double> params, std::span<const double> gradient) {
    if (params.size() != m_.size() || gradient.size() != m_.size()) {
        throw std::invalid_argument("Adam step dimension mismatch");
    }
    ++t_;
    const double b1t = 1.0 - std::pow(config_.beta1, static_cast<double>(t_));
    const double b2t = 1.0 - std::pow(config_.beta2, static_cast<double>(t_));
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double g = gradient[i];
        m_[i] = config_.beta1 * m_[i] + (1.0 - config_.beta1) * g;
        v_[i] = config_.beta2 * v_[i] + (1.0 - config_.beta2) * g * g;
        const double m_hat = m_[i] / b1t;
        const double v_hat = v_[i] / b2t;
        params[i] -= config_.learning_rate * m_hat / (std::sqrt(v_hat) + config_.epsilon);
    }
}

}  // namespace costembed
