#include "youngent/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "youngent/bounds.hpp"
#include "youngent/dataset.hpp"

namespace youngent::cli {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot write '" + path.string() + "'");
  file << content;
  if (!file) throw InputError("failed writing '" + path.string() + "'");
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create directory '" + dir.string() + "': " + ec.message());
}

BoundMode mode_of(bool simple) { return simple ? BoundMode::simple : BoundMode::tight; }

struct Options {
  Int n = 0;
  std::string klass;
  std::string fq;
  std::string xi2;
  std::string xi2_db;
  std::string dataset;
  std::string out_dir;
  bool simple = false;
  Int n_max = 30;
};

std::vector<Measurement> measurements_from(const Options& o, const CLI::App& cmd) {
  const bool have_dataset = cmd.count("--dataset") > 0;
  const int values = static_cast<int>(cmd.count("--fq") + cmd.count("--xi2") +
                                      cmd.count("--xi2-db"));
  if (have_dataset) {
    if (values > 0 || cmd.count("--n") > 0) {
      throw InputError("--dataset cannot be combined with --n, --fq, --xi2 or --xi2-db");
    }
    return read_dataset(o.dataset);
  }
  if (cmd.count("--n") == 0 || values != 1) {
    throw InputError("give --dataset, or --n with exactly one of --fq, --xi2, --xi2-db");
  }
  const std::string n_text = "n" + std::to_string(o.n);
  if (!o.fq.empty()) {
    const auto value = Decimal::parse(o.fq);
    return {Measurement::qfi(n_text + "_fq_" + value.to_string(), o.n, value)};
  }
  if (!o.xi2.empty()) {
    const auto value = Decimal::parse(o.xi2);
    return {Measurement::squeezing(n_text + "_xi2_" + value.to_string(), o.n, value,
                                   SqueezingUnit::linear)};
  }
  const auto value = Decimal::parse(o.xi2_db);
  return {Measurement::squeezing(n_text + "_xi2db_" + value.to_string(), o.n, value,
                                 SqueezingUnit::db)};
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const std::string table = bounds_table(o.n, o.klass, mode_of(o.simple));
  out << table;
  if (!o.out_dir.empty()) {
    ensure_dir(o.out_dir);
    write_file(fs::path(o.out_dir) / ("bounds_" + o.klass + ".csv"), table);
  }
  return kExitOk;
}

int cmd_analyze(const Options& o, const CLI::App& cmd, std::ostream& out) {
  const auto records = measurements_from(o, cmd);
  const BoundMode mode = mode_of(o.simple);
  const std::string out_dir = o.out_dir.empty() ? "reports" : o.out_dir;

  out << summary_header();
  for (const auto& m : records) {
    const auto r = report(m, mode);
    write_report_files(r, out_dir);
    out << summary_row(r);
  }
  return kExitOk;
}

int cmd_rank_summary(const Options& o, std::ostream& out) {
  const auto table = rank_summary(read_dataset(o.dataset), mode_of(o.simple));
  out << table;
  if (!o.out_dir.empty()) {
    ensure_dir(o.out_dir);
    write_file(fs::path(o.out_dir) / "rank_summary.csv", table);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err,
               const ClosedForms& forms) {
  if (o.n_max < 2) throw InputError("--nmax must be >= 2");
  const auto mismatches = verify_closed_forms(o.n_max, forms);
  for (const auto& m : mismatches) out << m.to_json_line() << '\n';
  err << "verify: n <= " << o.n_max << ", " << mismatches.size() << " mismatch"
      << (mismatches.size() == 1 ? "" : "es") << '\n';
  return mismatches.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

std::string bounds_table(Int n, const std::string& klass, BoundMode mode) {
  if (n < 1) throw InputError("--n must be >= 1");
  const bool tight = mode == BoundMode::tight;
  std::ostringstream out;
  if (klass == "wh") {
    out << "w,h,f\n";
    for (Int w = 1; w <= n; ++w) {
      for (Int h = ceil_div(n, w); h <= n + 1 - w; ++h) {
        out << w << ',' << h << ','
            << (tight ? std::to_string(f_wh(n, w, h)) : rational_to_string(f_wh_upper(n, w, h)))
            << '\n';
      }
    }
  } else if (klass == "w") {
    out << "x,f\n";
    for (Int w = 1; w <= n; ++w) {
      out << w << ',' << (tight ? f_width(n, w) : f_width_upper(n, w)) << '\n';
    }
  } else if (klass == "h") {
    out << "x,f\n";
    for (Int h = 1; h <= n; ++h) out << h << ',' << f_height(n, h) << '\n';
  } else if (klass == "r") {
    out << "x,f\n";
    for (Int r : valid_ranks(n)) {
      out << r << ','
          << (tight ? std::to_string(f_rank(n, r)) : rational_to_string(f_rank_upper(n, r)))
          << '\n';
    }
  } else {
    throw InputError("--class must be one of w, h, r, wh");
  }
  return out.str();
}

std::string summary_header() { return "label,n,kind,value,w,h,r,by_w,by_h,by_r,by_wh\n"; }

std::string summary_row(const WitnessReport& r) {
  std::ostringstream out;
  const auto& m = r.measurement;
  out << m.label << ',' << m.n << ',' << to_string(m.kind) << ',' << m.value.to_string()
      << (m.unit == SqueezingUnit::db ? "dB" : "") << ',' << r.depth << ',' << r.separability
      << ',' << r.rank << ',' << r.counts.by_w << ',' << r.counts.by_h << ',' << r.counts.by_r
      << ',' << r.counts.by_wh << '\n';
  return out.str();
}

void write_report_files(const WitnessReport& r, const std::string& out_dir) {
  validate_label(r.measurement.label);
  const fs::path dir = fs::path(out_dir) / r.measurement.label;
  ensure_dir(dir);
  write_file(dir / "report.json", r.to_json("grid.csv"));
  write_file(dir / "grid.csv", r.grid.to_csv());
}

std::string rank_summary(const std::vector<Measurement>& records, BoundMode mode) {
  std::ostringstream out;
  out << "label,n,r,r_plus_n\n";
  for (const auto& m : records) {
    const Int r = infer_rank(m, mode);
    out << m.label << ',' << m.n << ',' << r << ',' << r + m.n << '\n';
  }
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ClosedForms& forms) {
  CLI::App app{"Metrological multipartite-entanglement bounds from Young diagrams", "youngent"};
  app.require_subcommand(1);
  Options o;

  auto* bounds = app.add_subcommand("bounds", "Tabulate a class bound over its domain");
  bounds->add_option("--n", o.n, "Particle number")->required();
  bounds->add_option("--class", o.klass, "Class selector")
      ->required()
      ->check(CLI::IsMember({"w", "h", "r", "wh"}));
  bounds->add_flag("--simple", o.simple, "Use the simplified (non-tight) bounds");
  bounds->add_option("--out", o.out_dir, "Also write bounds_<class>.csv here");

  auto* analyze = app.add_subcommand("analyze", "Infer w, h, r and excluded tuples");
  analyze->add_option("--n", o.n, "Particle number");
  analyze->add_option("--fq", o.fq, "Measured QFI lower bound");
  analyze->add_option("--xi2", o.xi2, "Measured squeezing upper bound (linear)");
  analyze->add_option("--xi2-db", o.xi2_db, "Measured squeezing upper bound (dB)");
  analyze->add_option("--dataset", o.dataset, "Dataset CSV");
  analyze->add_flag("--simple", o.simple, "Use the simplified (non-tight) bounds");
  analyze->add_option("--out", o.out_dir, "Report directory (default: reports)");

  auto* ranks = app.add_subcommand("rank-summary", "Inferred Dyson rank per record");
  ranks->add_option("--dataset", o.dataset, "Dataset CSV")->required();
  ranks->add_flag("--simple", o.simple, "Use the simplified (non-tight) bounds");
  ranks->add_option("--out", o.out_dir, "Also write rank_summary.csv here");

  auto* verify = app.add_subcommand("verify", "Check closed forms against brute force");
  verify->add_option("--nmax", o.n_max, "Largest particle number swept (default 30)");

  std::vector<std::string> argv_storage{"youngent"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (analyze->parsed()) return cmd_analyze(o, *analyze, out);
    if (ranks->parsed()) return cmd_rank_summary(o, out);
    return cmd_verify(o, out, err, forms);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace youngent::cli
