#include "youngent/oracle.hpp"

#include <nlohmann/json.hpp>

#include "youngent/bounds.hpp"
#include "youngent/tuples.hpp"

namespace youngent {

OracleResult brute_force_max(Int n, const ClassPredicate& pred) {
  std::optional<OracleResult> best;
  for (const auto& d : PartitionEnumerator(n, pred)) {
    const Int value = d.sum_of_squares();
    if (!best || value > best->value) best = OracleResult{value, d};
  }
  if (!best) throw EmptyClassError("no partition of " + std::to_string(n) + " in the class");
  return *best;
}

ClosedForms ClosedForms::standard() {
  return {[](Int n, Int w, Int h) { return f_wh(n, w, h); },
          [](Int n, Int w) { return f_width(n, w); },
          [](Int n, Int h) { return f_height(n, h); },
          [](Int n, Int r) { return f_rank(n, r); }};
}

std::string Mismatch::to_json_line() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["class"] = klass;
  if (w) j["w"] = *w;
  if (h) j["h"] = *h;
  if (r) j["r"] = *r;
  j["closed"] = closed;
  j["brute"] = brute;
  return j.dump();
}

std::vector<Mismatch> verify_closed_forms(Int n_max, const ClosedForms& forms) {
  if (n_max < 1) throw DomainError("verify_closed_forms needs n_max >= 1");
  std::vector<Mismatch> out;
  auto check = [&out](Mismatch m) {
    if (m.closed != m.brute) out.push_back(std::move(m));
  };

  for (Int n = 1; n <= n_max; ++n) {
    for (const auto& t : all_tuples(n)) {
      const Int brute = brute_force_max(n, ClassPredicate::wh_class(t.w, t.h)).value;
      check({n, "wh", t.w, t.h, std::nullopt, forms.wh(n, t.w, t.h), brute});
    }
    for (Int w = 1; w <= n; ++w) {
      const Int brute = brute_force_max(n, ClassPredicate::width_at_most(w)).value;
      check({n, "w", w, std::nullopt, std::nullopt, forms.width(n, w), brute});
    }
    for (Int h = 1; h <= n; ++h) {
      const Int brute = brute_force_max(n, ClassPredicate::height_at_least(h)).value;
      check({n, "h", std::nullopt, h, std::nullopt, forms.height(n, h), brute});
    }
    for (Int r : valid_ranks(n)) {
      const Int brute = brute_force_max(n, ClassPredicate::rank_at_most(r)).value;
      check({n, "r", std::nullopt, std::nullopt, r, forms.rank(n, r), brute});
    }
  }
  return out;
}

}  // namespace youngent
