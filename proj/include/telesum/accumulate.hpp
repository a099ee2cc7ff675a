#pragma once

// Compensated accumulation. The finite telescoping identities are asserted
// to 1e-12 relative over multi-million-term sums, which plain doubles do not
// reliably deliver; Neumaier's variant keeps the running error term.

#include <cmath>

namespace telesum {

class KahanAccumulator {
  public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    void merge(const KahanAccumulator& other) {
        add(other.sum_);
        add(other.comp_);
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Runtime-switchable wrapper (the --compensated on|off flag).
class Accumulator {
  public:
    explicit Accumulator(bool compensated = true) : compensated_(compensated) {}
    void add(double v) {
        if (compensated_)
            kahan_.add(v);
        else
            plain_ += v;
    }
    void merge(const Accumulator& other) {
        kahan_.merge(other.kahan_);
        plain_ += other.plain_;
    }
    double value() const { return compensated_ ? kahan_.value() : plain_; }
    bool compensated() const { return compensated_; }

  private:
    bool compensated_ = true;
    KahanAccumulator kahan_;
    double plain_ = 0.0;
};

// Uncompensated reference, for the benchmark contrast.
class PlainAccumulator {
  public:
    void add(double v) { sum_ += v; }
    void merge(const PlainAccumulator& other) { sum_ += other.sum_; }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
};

}  // namespace telesum
