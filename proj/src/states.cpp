#include "youngent/states.hpp"

#include <cmath>
#include <string>

#include "youngent/bounds.hpp"

namespace youngent {

SpinAxis::SpinAxis(double x, double y, double z) : n_{x, y, z} {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (std::abs(norm - 1.0) > 1e-12) throw DomainError("spin axis must be a unit vector");
}

GhzProduct::GhzProduct(YoungDiagram blocks)
    : blocks_(std::move(blocks)), phases_(blocks_.rows().size(), 0.0) {}

GhzProduct::GhzProduct(YoungDiagram blocks, std::vector<double> phases)
    : blocks_(std::move(blocks)), phases_(std::move(phases)) {
  if (phases_.size() != blocks_.rows().size()) {
    throw DomainError("GHZ product needs one phase per block");
  }
}

Int qfi_analytic(const GhzProduct& state) {
  // Var(J_z) of one GHZ block is N_l^2 / 4; blocks are uncorrelated.
  return state.blocks().sum_of_squares();
}

std::vector<std::complex<double>> dense_amplitudes(const GhzProduct& state, Int max_qubits) {
  const Int n = state.blocks().n();
  if (n > max_qubits) {
    throw SizeError("dense state on " + std::to_string(n) + " qubits exceeds cap of " +
                    std::to_string(max_qubits));
  }
  const auto& rows = state.blocks().rows();
  const auto& phases = state.phases();
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t blocks = rows.size();
  const double block_norm = 1.0 / std::sqrt(2.0);

  std::vector<std::complex<double>> psi(dim, {0.0, 0.0});
  // Each block is either all down or all up; enumerate the 2^h branches.
  for (std::size_t choice = 0; choice < (std::size_t{1} << blocks); ++choice) {
    std::size_t index = 0;
    std::complex<double> amplitude{1.0, 0.0};
    Int offset = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      const bool up = (choice >> b) & 1U;
      if (up) {
        for (Int q = 0; q < rows[b]; ++q) index |= std::size_t{1} << (offset + q);
        amplitude *= std::polar(block_norm, phases[b]);
      } else {
        amplitude *= block_norm;
      }
      offset += rows[b];
    }
    psi[index] += amplitude;
  }
  return psi;
}

double qfi_statevector(const GhzProduct& state, const SpinAxis& axis, Int max_qubits) {
  const auto psi = dense_amplitudes(state, max_qubits);
  const Int n = state.blocks().n();
  const auto [nx, ny, nz] = axis.components();
  const std::complex<double> i{0.0, 1.0};

  // phi = J_n psi with J_n = (1/2) sum_q (nx X_q + ny Y_q + nz Z_q).
  std::vector<std::complex<double>> phi(psi.size(), {0.0, 0.0});
  for (std::size_t index = 0; index < psi.size(); ++index) {
    const auto a = psi[index];
    if (a == std::complex<double>{0.0, 0.0}) continue;
    for (Int q = 0; q < n; ++q) {
      const std::size_t mask = std::size_t{1} << q;
      const bool up = index & mask;
      const std::size_t flipped = index ^ mask;
      phi[flipped] += 0.5 * nx * a;
      // Y|up> = i|down>, Y|down> = -i|up>
      phi[flipped] += 0.5 * ny * (up ? i : -i) * a;
      phi[index] += 0.5 * nz * (up ? 1.0 : -1.0) * a;
    }
  }

  std::complex<double> mean{0.0, 0.0};
  double second = 0.0;
  for (std::size_t index = 0; index < psi.size(); ++index) {
    mean += std::conj(psi[index]) * phi[index];
    second += std::norm(phi[index]);
  }
  return 4.0 * (second - mean.real() * mean.real());
}

YoungDiagram optimal_diagram(Int n, Int w, Int h) {
  if (w == 1) {
    f_wh(n, w, h);  // validates the tuple
    return YoungDiagram(std::vector<Int>(static_cast<std::size_t>(n), 1));
  }
  const auto [k, u, v] = wh_decomposition(n, w, h);
  std::vector<Int> rows(static_cast<std::size_t>(k), w);
  if (v < 0) return YoungDiagram(std::move(rows));  // n == w*h: h full rows
  rows.push_back(u);
  rows.insert(rows.end(), static_cast<std::size_t>(v), 1);
  return YoungDiagram(std::move(rows));
}

GhzProduct optimal_state(Int n, Int w, Int h) { return GhzProduct(optimal_diagram(n, w, h)); }

}  // namespace youngent
