#pragma once

// Products of GHZ states that saturate the class bounds, and their quantum
// Fisher information computed two independent ways.

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "youngent/arith.hpp"
#include "youngent/partitions.hpp"

namespace youngent {

/// Unit direction of the collective spin generator J_n.
class SpinAxis {
 public:
  /// Throws DomainError unless |(x,y,z)| == 1 within 1e-12.
  SpinAxis(double x, double y, double z);

  static SpinAxis x() { return {1.0, 0.0, 0.0}; }
  static SpinAxis y() { return {0.0, 1.0, 0.0}; }
  static SpinAxis z() { return {0.0, 0.0, 1.0}; }

  const std::array<double, 3>& components() const { return n_; }

 private:
  std::array<double, 3> n_;
};

/// Tensor product of one GHZ state (|down...down> + e^{i phi}|up...up>)/sqrt 2
/// per row of the diagram. Blocks occupy consecutive qubits, top row first.
class GhzProduct {
 public:
  /// All phases zero.
  explicit GhzProduct(YoungDiagram blocks);
  /// Throws DomainError unless there is one phase per block.
  GhzProduct(YoungDiagram blocks, std::vector<double> phases);

  const YoungDiagram& blocks() const { return blocks_; }
  const std::vector<double>& phases() const { return phases_; }

 private:
  YoungDiagram blocks_;
  std::vector<double> phases_;
};

/// Thrown when a dense calculation would exceed the qubit cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr Int kDefaultStatevectorCap = 16;

/// QFI along z from block additivity: each GHZ block contributes N_l^2.
Int qfi_analytic(const GhzProduct& state);

/// Pure-state QFI 4 Var(J_n) evaluated on the explicit 2^N amplitude vector.
/// Throws SizeError when N exceeds max_qubits.
double qfi_statevector(const GhzProduct& state, const SpinAxis& axis,
                       Int max_qubits = kDefaultStatevectorCap);

/// Dense amplitudes of the product state; qubit q is bit q of the index,
/// with 1 meaning spin up.
std::vector<std::complex<double>> dense_amplitudes(const GhzProduct& state,
                                                   Int max_qubits = kDefaultStatevectorCap);

/// Diagram maximizing sum(N_l^2) in the (w,h) class: k rows of w, one row of
/// u, v singletons. Throws DomainError for an invalid tuple.
YoungDiagram optimal_diagram(Int n, Int w, Int h);

/// GHZ product on optimal_diagram(n, w, h); its QFI equals f_wh(n, w, h).
GhzProduct optimal_state(Int n, Int w, Int h);

}  // namespace youngent
