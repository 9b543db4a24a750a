#pragma once

#include "matchpoly/rational.hpp"

namespace matchpoly {

/// Sum accumulator. The generic version is a plain running sum (exact for
/// Rational); the double specialization uses Neumaier compensation so that
/// enumeration sums with up to ~10^6 terms keep near-full precision.
template <class T>
class Accumulator {
  public:
    void add(const T& x) { sum_ += x; }
    T value() const { return sum_; }

  private:
    T sum_{};
};

template <>
class Accumulator<double> {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

template <class T>
T abs_value(const T& x) {
    return x < T(0) ? T(-x) : x;
}

inline double abs_value(double x) { return std::abs(x); }

}  // namespace matchpoly
