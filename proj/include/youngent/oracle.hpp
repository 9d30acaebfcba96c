#pragma once

// Brute-force ground truth for the closed-form bounds: maximize sum(N_l^2)
// over every partition of a class by direct enumeration.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "youngent/arith.hpp"
#include "youngent/partitions.hpp"

namespace youngent {

/// Class membership test on diagrams; an empty predicate admits everything.
using ClassPredicate = PartitionConstraint;

/// Thrown when no partition of n satisfies the predicate.
class EmptyClassError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  Int value = 0;
  YoungDiagram argmax;
};

/// Largest sum of squared rows over partitions of n admitted by pred. The
/// argmax is the first maximizer in reverse-lexicographic order.
OracleResult brute_force_max(Int n, const ClassPredicate& pred);

/// The closed forms under test. Defaults to the library's own bounds; tests
/// substitute a corrupted entry to exercise the failure path.
struct ClosedForms {
  std::function<Int(Int n, Int w, Int h)> wh;
  std::function<Int(Int n, Int w)> width;
  std::function<Int(Int n, Int h)> height;
  std::function<Int(Int n, Int r)> rank;

  static ClosedForms standard();
};

struct Mismatch {
  Int n = 0;
  std::string klass;  // "wh", "w", "h" or "r"
  std::optional<Int> w;
  std::optional<Int> h;
  std::optional<Int> r;
  Int closed = 0;
  Int brute = 0;

  /// One JSON object on a single line, stable key order.
  std::string to_json_line() const;
};

/// Compares every closed form against brute_force_max for all n in
/// [1, n_max]: each valid (w,h), each valid rank, each width and each height.
/// Returns the mismatches; empty means the sweep passed.
std::vector<Mismatch> verify_closed_forms(Int n_max,
                                          const ClosedForms& forms = ClosedForms::standard());

}  // namespace youngent
