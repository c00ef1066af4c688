#pragma once

#include <stdexcept>

namespace unlock {

/// Largest admissible common radius of a pair/cluster of tangent bodies.
/// Unbounded is an explicit state, never a large magic number.
class MaxRadius {
  public:
    static MaxRadius bounded(double v) { return MaxRadius(v, true); }
    static MaxRadius unbounded() { return MaxRadius(0.0, false); }

    bool is_unbounded() const { return !bounded_; }
    double value() const {
        if (!bounded_) throw std::logic_error("MaxRadius: unbounded has no value");
        return value_;
    }

    friend bool operator<(const MaxRadius& a, const MaxRadius& b) {
        if (a.bounded_ && b.bounded_) return a.value_ < b.value_;
        return a.bounded_ && !b.bounded_;
    }

  private:
    MaxRadius(double v, bool b) : value_(v), bounded_(b) {}
    double value_;
    bool bounded_;
};

}  // namespace unlock
