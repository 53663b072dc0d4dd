#ifndef MSL1_SIGNAL_HPP
#define MSL1_SIGNAL_HPP

#include <Eigen/Dense>
#include <cmath>

#include "msl1/errors.hpp"

namespace msl1 {

// A real-valued Nyquist-rate signal. `norm_scale` records the L2 norm that
// was divided out when the signal was normalized (1.0 if it never was).
struct Signal {
    Eigen::VectorXd samples;
    double norm_scale = 1.0;
    bool normalized = false;

    Signal() = default;
    explicit Signal(Eigen::VectorXd s) : samples(std::move(s)) { validate(); }

    Eigen::Index size() const { return samples.size(); }

    void validate() const {
        if (samples.size() < 1) throw DimensionError("signal must have at least one sample");
        if (!samples.allFinite()) throw UndefinedInputError("signal contains non-finite samples");
    }

    // Returns a unit-L2-norm copy, recording the removed scale.
    static Signal unit_norm(Eigen::VectorXd s) {
        Signal out(std::move(s));
        const double n = out.samples.norm();
        if (n == 0.0) throw UndefinedInputError("cannot normalize a zero signal");
        out.samples /= n;
        out.norm_scale = n;
        out.normalized = true;
        return out;
    }
};

}  // namespace msl1

#endif
