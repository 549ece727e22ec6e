#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cesaro/numeric.hpp"

namespace cesaro {

enum class Mode { Float, Exact };

// Finite truncation of a scalar sequence. Float mode holds complex doubles,
// exact mode holds arbitrary-precision rationals.
class Sequence {
 public:
  explicit Sequence(std::vector<Complex> coords)
      : mode_(Mode::Float), f_(std::move(coords)) {}
  explicit Sequence(std::vector<Rational> coords)
      : mode_(Mode::Exact), q_(std::move(coords)) {}

  static Sequence zeros(Mode mode, std::size_t n) {
    if (mode == Mode::Float) return Sequence(std::vector<Complex>(n));
    return Sequence(std::vector<Rational>(n));
  }

  // e_index within a length-n truncation
  static Sequence basis(Mode mode, std::size_t index, std::size_t n) {
    if (index >= n) throw std::invalid_argument("basis index outside truncation");
    Sequence s = zeros(mode, n);
    if (mode == Mode::Float)
      s.f_[index] = Complex(1.0, 0.0);
    else
      s.q_[index] = 1;
    return s;
  }

  Mode mode() const { return mode_; }

  std::size_t size() const {
    return mode_ == Mode::Float ? f_.size() : q_.size();
  }

  const std::vector<Complex>& cf() const {
    require(Mode::Float);
    return f_;
  }
  std::vector<Complex>& cf() {
    require(Mode::Float);
    return f_;
  }
  const std::vector<Rational>& cq() const {
    require(Mode::Exact);
    return q_;
  }
  std::vector<Rational>& cq() {
    require(Mode::Exact);
    return q_;
  }

 private:
  void require(Mode m) const {
    if (mode_ != m) throw std::logic_error("sequence mode mismatch");
  }

  Mode mode_;
  std::vector<Complex> f_;
  std::vector<Rational> q_;
};

}  // namespace cesaro
