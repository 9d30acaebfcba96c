#include "youngent/witness.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "youngent/bounds.hpp"
#include "youngent/squeezing.hpp"
#include "youngent/tuples.hpp"

namespace youngent {

std::string to_string(MeasurementKind kind) {
  return kind == MeasurementKind::qfi_lower_bound ? "fq" : "xi2";
}

std::string to_string(SqueezingUnit unit) {
  switch (unit) {
    case SqueezingUnit::none:
      return "none";
    case SqueezingUnit::linear:
      return "linear";
    case SqueezingUnit::db:
      return "db";
  }
  return "none";
}

std::string to_string(BoundMode mode) { return mode == BoundMode::tight ? "tight" : "simple"; }

Measurement Measurement::qfi(std::string label, Int n, Decimal value, std::string reference) {
  Measurement m{std::move(label), n, MeasurementKind::qfi_lower_bound, std::move(value),
                SqueezingUnit::none, std::move(reference)};
  m.validate();
  return m;
}

Measurement Measurement::squeezing(std::string label, Int n, Decimal value, SqueezingUnit unit,
                                   std::string reference) {
  Measurement m{std::move(label), n, MeasurementKind::squeezing_upper_bound, std::move(value),
                unit, std::move(reference)};
  m.validate();
  return m;
}

void Measurement::validate() const {
  if (n < 1) throw InputError("measurement '" + label + "': n must be >= 1");
  if (kind == MeasurementKind::qfi_lower_bound) {
    if (unit != SqueezingUnit::none) {
      throw InputError("measurement '" + label + "': QFI values take unit 'none'");
    }
    if (value.is_negative() || value.is_zero()) {
      throw InputError("measurement '" + label + "': QFI value must be positive");
    }
    return;
  }
  if (unit == SqueezingUnit::none) {
    throw InputError("measurement '" + label + "': squeezing needs unit 'linear' or 'db'");
  }
  if (unit == SqueezingUnit::linear && (value.is_negative() || value.is_zero())) {
    throw InputError("measurement '" + label + "': linear squeezing must be positive");
  }
  if (unit == SqueezingUnit::db) {
    const Rational db = value.to_rational();
    if (db < -1000 || db > 1000) {
      throw InputError("measurement '" + label + "': dB value outside [-1000, 1000]");
    }
  }
}

Rational Measurement::exact_value() const {
  if (kind == MeasurementKind::squeezing_upper_bound && unit == SqueezingUnit::db) {
    return db_to_linear_exact(value);
  }
  return value.to_rational();
}

namespace {

bool exceeds_value(const Rational& value, MeasurementKind kind, Int n, const Rational& bound_f) {
  if (kind == MeasurementKind::qfi_lower_bound) return value > bound_f;
  // xi^2 < 2N / (f + 2N)  <=>  xi^2 (f + 2N) < 2N
  return value * (bound_f + 2 * n) < 2 * n;
}

/// Class bounds for one mode, all as exact rationals.
struct ClassBounds {
  Int n;
  BoundMode mode;

  Rational width(Int w) const {
    return mode == BoundMode::tight ? Rational(f_width(n, w)) : Rational(f_width_upper(n, w));
  }
  // The h-separable bound has no looser closed form.
  Rational height(Int h) const { return Rational(f_height(n, h)); }
  Rational rank(Int r) const {
    return mode == BoundMode::tight ? Rational(f_rank(n, r)) : f_rank_upper(n, r);
  }
  Rational wh(Int w, Int h) const {
    return mode == BoundMode::tight ? Rational(f_wh(n, w, h)) : f_wh_upper(n, w, h);
  }
};

/// Everything needed for repeated decisions on one measurement.
struct Decider {
  explicit Decider(const Measurement& m, BoundMode mode)
      : kind(m.kind), n(m.n), value(validated_value(m)), bounds{m.n, mode} {}

  static Rational validated_value(const Measurement& m) {
    m.validate();
    return m.exact_value();
  }

  bool excluded(const Rational& bound_f) const { return exceeds_value(value, kind, n, bound_f); }

  Int depth() const {
    for (Int w = 1; w <= n; ++w) {
      if (!excluded(bounds.width(w))) return w;
    }
    return n;
  }
  Int separability() const {
    for (Int h = n; h >= 1; --h) {
      if (!excluded(bounds.height(h))) return h;
    }
    return 1;
  }
  Int rank() const {
    for (Int r : valid_ranks(n)) {
      if (!excluded(bounds.rank(r))) return r;
    }
    return n - 1;
  }

  MeasurementKind kind;
  Int n;
  Rational value;
  ClassBounds bounds;
};

}  // namespace

bool exceeds(const Measurement& m, const Rational& bound_f) {
  return Decider(m, BoundMode::tight).excluded(bound_f);
}

bool exceeds(const Measurement& m, Int bound_f) { return exceeds(m, Rational(bound_f)); }

Int infer_depth(const Measurement& m, BoundMode mode) { return Decider(m, mode).depth(); }

Int infer_separability(const Measurement& m, BoundMode mode) {
  return Decider(m, mode).separability();
}

Int infer_rank(const Measurement& m, BoundMode mode) { return Decider(m, mode).rank(); }

std::string ExclusionFlags::status() const {
  if (!any()) return "OK";
  std::string out;
  if (by_w) out += "W";
  if (by_h) out += "H";
  if (by_r) out += "R";
  if (by_wh) out += "WH";
  return out;
}

const GridCell* TupleGrid::find(Int w, Int h) const {
  for (const auto& cell : cells) {
    if (cell.w == w && cell.h == h) return &cell;
  }
  return nullptr;
}

std::string TupleGrid::to_csv() const {
  std::ostringstream out;
  out << "w,h,f_wh,status\n";
  for (const auto& cell : cells) {
    out << cell.w << ',' << cell.h << ',' << rational_to_string(cell.bound) << ','
        << cell.flags.status() << '\n';
  }
  return out.str();
}

TupleGrid build_grid(const Measurement& m, BoundMode mode) {
  const Decider decider(m, mode);
  const Int n = m.n;

  // Per-axis decisions are shared by whole rows, columns and diagonals.
  std::vector<bool> width_excluded(static_cast<std::size_t>(n) + 1);
  std::vector<bool> height_excluded(static_cast<std::size_t>(n) + 1);
  for (Int x = 1; x <= n; ++x) {
    width_excluded[static_cast<std::size_t>(x)] = decider.excluded(decider.bounds.width(x));
    height_excluded[static_cast<std::size_t>(x)] = decider.excluded(decider.bounds.height(x));
  }
  std::vector<bool> rank_excluded(static_cast<std::size_t>(2 * n - 1));
  for (Int r = -(n - 1); r <= n - 1; ++r) {
    const Int effective = nearest_valid_rank_at_or_above(n, r);
    rank_excluded[static_cast<std::size_t>(r + n - 1)] =
        decider.excluded(decider.bounds.rank(effective));
  }

  TupleGrid grid{n, {}};
  for (const auto& t : all_tuples(n)) {
    GridCell cell{t.w, t.h, decider.bounds.wh(t.w, t.h), {}};
    cell.flags.by_w = width_excluded[static_cast<std::size_t>(t.w)];
    cell.flags.by_h = height_excluded[static_cast<std::size_t>(t.h)];
    cell.flags.by_r = rank_excluded[static_cast<std::size_t>(t.rank() + n - 1)];
    cell.flags.by_wh = decider.excluded(cell.bound);
    grid.cells.push_back(std::move(cell));
  }
  return grid;
}

ExclusionCounts tally(const TupleGrid& grid) {
  ExclusionCounts counts;
  for (const auto& cell : grid.cells) {
    counts.by_w += cell.flags.by_w;
    counts.by_h += cell.flags.by_h;
    counts.by_r += cell.flags.by_r;
    counts.by_wh += cell.flags.by_wh;
  }
  return counts;
}

WitnessReport report(const Measurement& m, BoundMode mode) {
  const Decider decider(m, mode);
  WitnessReport out;
  out.measurement = m;
  out.mode = mode;
  out.depth = decider.depth();
  out.separability = decider.separability();
  out.rank = decider.rank();
  if (out.separability < m.n) out.smallest_excluded_height = out.separability + 1;
  out.beyond_heisenberg = decider.excluded(Rational(checked_sq(m.n)));
  out.grid = build_grid(m, mode);
  out.counts = tally(out.grid);
  if (m.kind == MeasurementKind::qfi_lower_bound) out.q_advantage = m.value.minus_int(m.n);
  return out;
}

std::string WitnessReport::to_json(const std::string& grid_ref) const {
  nlohmann::ordered_json j;
  j["label"] = measurement.label;
  j["n"] = measurement.n;
  j["kind"] = to_string(measurement.kind);
  j["value"] = measurement.value.to_string();
  j["unit"] = to_string(measurement.unit);
  j["reference"] = measurement.reference;
  j["bounds"] = to_string(mode);
  j["inferred"] = {{"w", depth}, {"h", separability}, {"r", rank}};
  j["r_plus_n"] = rank + measurement.n;
  j["smallest_excluded_h"] =
      smallest_excluded_height ? nlohmann::ordered_json(*smallest_excluded_height) : nlohmann::ordered_json(nullptr);
  j["counts"] = {{"by_w", counts.by_w},
                 {"by_h", counts.by_h},
                 {"by_r", counts.by_r},
                 {"by_wh", counts.by_wh}};
  j["q_advantage"] = q_advantage ? nlohmann::ordered_json(q_advantage->to_string()) : nlohmann::ordered_json(nullptr);
  j["grid_ref"] = grid_ref;
  j["total_tuples"] = static_cast<Int>(grid.cells.size());

  auto notes = nlohmann::ordered_json::array();
  if (measurement.kind == MeasurementKind::squeezing_upper_bound) {
    notes.push_back(
        "squeezing floors are necessary conditions for separability, asymptotically "
        "saturated only when every block has more than one particle");
    if (measurement.unit == SqueezingUnit::db) {
      notes.push_back("dB value converted to linear xi^2 = " +
                      rational_to_string(measurement.exact_value()));
    }
  }
  if (beyond_heisenberg) {
    notes.push_back("measured value exceeds the genuinely n-partite limit; every class is excluded");
  }
  j["notes"] = std::move(notes);
  return j.dump(2) + "\n";
}

}  // namespace youngent
