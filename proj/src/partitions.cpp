#include "youngent/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace youngent {

YoungDiagram::YoungDiagram(std::vector<Int> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw DomainError("Young diagram needs at least one row");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1) throw DomainError("Young diagram rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) {
      throw DomainError("Young diagram rows must be non-increasing");
    }
    n_ = checked_add(n_, rows_[i]);
  }
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
  std::vector<Int> rows;
  std::stringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    if (cell.empty() || !std::all_of(cell.begin(), cell.end(),
                                     [](unsigned char c) { return std::isdigit(c); })) {
      throw InputError("bad diagram row '" + cell + "' in '" + text + "'");
    }
    try {
      rows.push_back(std::stoll(cell));
    } catch (const std::out_of_range&) {
      throw InputError("diagram row out of range in '" + text + "'");
    }
  }
  if (!text.empty() && text.back() == ',') throw InputError("trailing comma in '" + text + "'");
  try {
    return YoungDiagram(std::move(rows));
  } catch (const DomainError& e) {
    throw InputError(std::string(e.what()) + ": '" + text + "'");
  }
}

Int YoungDiagram::sum_of_squares() const {
  Int total = 0;
  for (Int row : rows_) total = checked_add(total, checked_sq(row));
  return total;
}

std::string YoungDiagram::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(rows_[i]);
  }
  return out;
}

bool PartitionConstraint::admits(const YoungDiagram& d) const {
  if (max_width && d.width() > *max_width) return false;
  if (min_height && d.height() < *min_height) return false;
  if (max_rank && d.rank() > *max_rank) return false;
  return true;
}

PartitionEnumerator::PartitionEnumerator(Int n, PartitionConstraint constraint)
    : n_(n), constraint_(constraint), remaining_(n) {
  if (n < 1) throw DomainError("partitions need n >= 1");
  rows_.reserve(static_cast<std::size_t>(n));
}

bool PartitionEnumerator::feasible_after_push(Int part) const {
  const Int first = rows_.empty() ? part : rows_.front();
  if (constraint_.max_width && first > *constraint_.max_width) return false;

  // Height is largest when everything left over becomes singletons.
  const Int reachable_height = static_cast<Int>(rows_.size()) + 1 + (remaining_ - part);
  Int required_height = 1;
  if (constraint_.min_height) required_height = std::max(required_height, *constraint_.min_height);
  if (constraint_.max_rank) required_height = std::max(required_height, first - *constraint_.max_rank);
  return reachable_height >= required_height;
}

Int PartitionEnumerator::largest_feasible_part(Int cap) const {
  for (Int part = std::min(cap, remaining_); part >= 1; --part) {
    if (feasible_after_push(part)) return part;
  }
  return 0;
}

void PartitionEnumerator::descend() {
  while (remaining_ > 0) {
    const Int cap = rows_.empty() ? n_ : rows_.back();
    const Int part = largest_feasible_part(cap);
    if (part == 0) {
      // Only reachable at the root: an entered prefix always completes.
      exhausted_ = true;
      return;
    }
    rows_.push_back(part);
    remaining_ -= part;
  }
}

std::optional<YoungDiagram> PartitionEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (!started_) {
    started_ = true;
    descend();
    if (exhausted_) return std::nullopt;
    return YoungDiagram(rows_);
  }

  while (!rows_.empty()) {
    const Int popped = rows_.back();
    rows_.pop_back();
    remaining_ += popped;
    const Int part = largest_feasible_part(popped - 1);
    if (part > 0) {
      rows_.push_back(part);
      remaining_ -= part;
      descend();
      return YoungDiagram(rows_);
    }
  }
  exhausted_ = true;
  return std::nullopt;
}

std::vector<YoungDiagram> all_partitions(Int n, PartitionConstraint constraint) {
  std::vector<YoungDiagram> out;
  for (const auto& d : PartitionEnumerator(n, constraint)) out.push_back(d);
  return out;
}

}  // namespace youngent
