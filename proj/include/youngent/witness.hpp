#pragma once

// Entanglement inference from a single measurement.
//
// A measured QFI lower bound F excludes every class whose maximal QFI is
// strictly below F. A measured squeezing upper bound xi^2 excludes every class
// whose squeezing floor 2N/(f + 2N) lies strictly above xi^2. From these
// exclusions the witness infers the entanglement depth w, the separability h
// and Dyson's rank r, and marks every (w,h) tuple of the grid.

#include <optional>
#include <string>
#include <vector>

#include "youngent/arith.hpp"

namespace youngent {

enum class MeasurementKind { qfi_lower_bound, squeezing_upper_bound };
enum class SqueezingUnit { none, linear, db };

/// Which family of bounds drives the decisions.
enum class BoundMode { tight, simple };

std::string to_string(MeasurementKind kind);  // "fq" / "xi2"
std::string to_string(SqueezingUnit unit);    // "none" / "linear" / "db"
std::string to_string(BoundMode mode);        // "tight" / "simple"

struct Measurement {
  std::string label;
  Int n = 0;
  MeasurementKind kind = MeasurementKind::qfi_lower_bound;
  Decimal value;
  SqueezingUnit unit = SqueezingUnit::none;
  std::string reference;

  static Measurement qfi(std::string label, Int n, Decimal value, std::string reference = {});
  static Measurement squeezing(std::string label, Int n, Decimal value, SqueezingUnit unit,
                               std::string reference = {});

  /// Throws InputError when the fields are inconsistent: n < 1, a
  /// non-positive QFI or linear xi^2, or a unit that does not fit the kind.
  void validate() const;

  /// F for QFI data; linear xi^2 for squeezing data (dB converted exactly to
  /// 30 significant digits).
  Rational exact_value() const;

  friend bool operator==(const Measurement&, const Measurement&) = default;
};

/// True when the measurement rules out a class whose maximal QFI is bound_f.
/// QFI: value > bound_f. Squeezing: xi^2 < 2N/(bound_f + 2N). Both strict, so
/// a value sitting exactly on an attainable bound stays compatible.
bool exceeds(const Measurement& m, const Rational& bound_f);
bool exceeds(const Measurement& m, Int bound_f);

/// Smallest w whose w-producible bound is not exceeded (n if none).
Int infer_depth(const Measurement& m, BoundMode mode = BoundMode::tight);

/// Largest h whose h-separable bound is not exceeded (1 if none).
Int infer_separability(const Measurement& m, BoundMode mode = BoundMode::tight);

/// Smallest valid rank whose bound is not exceeded (n-1 if none).
Int infer_rank(const Measurement& m, BoundMode mode = BoundMode::tight);

struct ExclusionFlags {
  bool by_w = false;
  bool by_h = false;
  bool by_r = false;
  bool by_wh = false;

  bool any() const { return by_w || by_h || by_r || by_wh; }

  /// Flags concatenated in the order W, H, R, WH; "OK" when none is set.
  /// A tuple excluded by every criterion reads "WHRWH", one excluded only
  /// with the full (w,h) information reads "WH".
  std::string status() const;

  friend bool operator==(const ExclusionFlags&, const ExclusionFlags&) = default;
};

struct GridCell {
  Int w = 0;
  Int h = 0;
  Rational bound;  // maximal QFI of the (w,h) class under the chosen mode
  ExclusionFlags flags;
};

struct TupleGrid {
  Int n = 0;
  std::vector<GridCell> cells;  // (w asc, h asc)

  const GridCell* find(Int w, Int h) const;

  /// Header "w,h,f_wh,status", one row per valid tuple.
  std::string to_csv() const;
};

/// Marks every valid tuple with each criterion it violates. The rank
/// criterion is evaluated at the smallest valid rank >= w - h.
TupleGrid build_grid(const Measurement& m, BoundMode mode = BoundMode::tight);

struct ExclusionCounts {
  Int by_w = 0;
  Int by_h = 0;
  Int by_r = 0;
  Int by_wh = 0;

  friend bool operator==(const ExclusionCounts&, const ExclusionCounts&) = default;
};

ExclusionCounts tally(const TupleGrid& grid);

struct WitnessReport {
  Measurement measurement;
  BoundMode mode = BoundMode::tight;
  Int depth = 0;
  Int separability = 0;
  Int rank = 0;
  /// separability + 1 when that is still a valid height.
  std::optional<Int> smallest_excluded_height;
  /// Measured sensitivity beyond even the genuinely n-partite limit.
  bool beyond_heisenberg = false;
  ExclusionCounts counts;
  /// F - n, QFI data only.
  std::optional<Decimal> q_advantage;
  TupleGrid grid;

  /// Stable JSON rendering (2-space indent, fixed key order, trailing
  /// newline). grid_ref names the grid CSV written next to the report.
  std::string to_json(const std::string& grid_ref = "grid.csv") const;
};

WitnessReport report(const Measurement& m, BoundMode mode = BoundMode::tight);

}  // namespace youngent
