#pragma once

// Young diagrams (integer partitions) and their constrained enumeration.

#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "youngent/arith.hpp"

namespace youngent {

/// A partition of n particles into entangled blocks, drawn as a Young
/// diagram: one row per block, rows non-increasing from top to bottom.
///
/// Width is the largest block (entanglement depth), height the number of
/// blocks (separability), and Dyson's rank is width - height.
class YoungDiagram {
 public:
  /// Throws DomainError unless rows is non-empty, positive and non-increasing.
  explicit YoungDiagram(std::vector<Int> rows);

  /// Parses the comma-joined text form ("4,2,1"). Throws InputError.
  static YoungDiagram parse(const std::string& text);

  const std::vector<Int>& rows() const { return rows_; }
  Int n() const { return n_; }
  Int width() const { return rows_.front(); }
  Int height() const { return static_cast<Int>(rows_.size()); }
  Int rank() const { return width() - height(); }

  /// Sum of squared row lengths.
  Int sum_of_squares() const;

  /// Comma-joined rows with no spaces, e.g. "4,2,1".
  std::string to_string() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<Int> rows_;
  Int n_ = 0;
};

/// Optional class constraints; absent fields do not constrain.
struct PartitionConstraint {
  std::optional<Int> max_width;
  std::optional<Int> min_height;
  std::optional<Int> max_rank;

  bool admits(const YoungDiagram& d) const;

  static PartitionConstraint width_at_most(Int w) { return {w, std::nullopt, std::nullopt}; }
  static PartitionConstraint height_at_least(Int h) { return {std::nullopt, h, std::nullopt}; }
  static PartitionConstraint rank_at_most(Int r) { return {std::nullopt, std::nullopt, r}; }
  /// Width <= w and height >= h: the (w,h)-separable class.
  static PartitionConstraint wh_class(Int w, Int h) { return {w, h, std::nullopt}; }
};

/// Streams every partition of n meeting a constraint, each exactly once, in
/// reverse-lexicographic order ([n], [n-1,1], [n-2,2], [n-2,1,1], ...).
///
/// Constraints prune the search: a branch is abandoned as soon as its width
/// or its largest reachable height rules it out, so every prefix that is
/// entered completes to at least one admissible partition.
///
/// Single consumer. Use next() directly or iterate with a range-for.
class PartitionEnumerator {
 public:
  /// Throws DomainError if n < 1.
  explicit PartitionEnumerator(Int n, PartitionConstraint constraint = {});

  /// Next partition, or nullopt once exhausted.
  std::optional<YoungDiagram> next();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = YoungDiagram;
    using difference_type = std::ptrdiff_t;
    using pointer = const YoungDiagram*;
    using reference = const YoungDiagram&;

    iterator() = default;
    explicit iterator(PartitionEnumerator* owner) : owner_(owner) { advance(); }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done() == b.done();
    }

   private:
    bool done() const { return !current_.has_value(); }
    void advance() { current_ = owner_ ? owner_->next() : std::nullopt; }

    PartitionEnumerator* owner_ = nullptr;
    std::optional<YoungDiagram> current_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  bool feasible_after_push(Int part) const;
  Int largest_feasible_part(Int cap) const;
  void descend();

  Int n_;
  PartitionConstraint constraint_;
  std::vector<Int> rows_;
  Int remaining_;
  bool started_ = false;
  bool exhausted_ = false;
};

/// Materializes an enumeration; convenient for small n in tests and tools.
std::vector<YoungDiagram> all_partitions(Int n, PartitionConstraint constraint = {});

}  // namespace youngent
