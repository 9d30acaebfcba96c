#pragma once

// Command-line front end.
//
//   youngent bounds       --n N --class {w|h|r|wh} [--simple] [--out DIR]
//   youngent analyze      (--n N (--fq V | --xi2 V | --xi2-db V) | --dataset FILE)
//                         [--simple] [--out DIR]
//   youngent rank-summary --dataset FILE [--simple] [--out DIR]
//   youngent verify       [--nmax N]
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error.

#include <iosfwd>
#include <string>
#include <vector>

#include "youngent/oracle.hpp"
#include "youngent/witness.hpp"

namespace youngent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

/// Runs one invocation; args excludes the program name. `forms` is what
/// `verify` checks against the oracle.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ClosedForms& forms = ClosedForms::standard());

/// CSV body of `bounds`: "x,f" rows for w, h and r, "w,h,f" rows for wh.
std::string bounds_table(Int n, const std::string& klass, BoundMode mode);

/// Header of the `analyze` summary table and one row per report.
std::string summary_header();
std::string summary_row(const WitnessReport& r);

/// Writes <out>/<label>/report.json and <out>/<label>/grid.csv.
void write_report_files(const WitnessReport& r, const std::string& out_dir);

/// CSV "label,n,r,r_plus_n", one row per measurement.
std::string rank_summary(const std::vector<Measurement>& records, BoundMode mode);

}  // namespace youngent::cli
