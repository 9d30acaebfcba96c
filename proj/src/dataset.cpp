#include "youngent/dataset.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

namespace youngent {

namespace {

struct CsvRow {
  std::vector<std::string> fields;
  int line = 0;
};

std::vector<CsvRow> split_csv(const std::string& text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  int line = 1;
  row.line = line;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    const bool blank = row.fields.size() == 1 && row.fields[0].empty();
    if (!blank) rows.push_back(std::move(row));
    row = CsvRow{};
    row.line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started) {
          throw InputError("line " + std::to_string(line) + ": stray quote inside a field");
        }
        quoted = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_field();
        ++line;
        end_row();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) throw InputError("line " + std::to_string(line) + ": unterminated quote");
  if (field_started || !field.empty() || !row.fields.empty()) {
    end_field();
    end_row();
  }
  return rows;
}

std::string quote_if_needed(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Int parse_n(const std::string& text, int line) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("line " + std::to_string(line) + ": n must be a positive integer, got '" +
                     text + "'");
  }
  try {
    return std::stoll(text);
  } catch (const std::out_of_range&) {
    throw InputError("line " + std::to_string(line) + ": n out of range");
  }
}

}  // namespace

void validate_label(const std::string& label) {
  if (label.empty() || label == "." || label == "..") {
    throw InputError("label '" + label + "' is not a usable directory name");
  }
  for (unsigned char c : label) {
    if (!(std::isalnum(c) || c == '.' || c == '_' || c == '-')) {
      throw InputError("label '" + label + "' may only use letters, digits, '.', '_' and '-'");
    }
  }
}

std::vector<DatasetRecord> parse_dataset(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto rows = split_csv(text);
  if (rows.empty()) throw InputError("dataset is empty");

  std::string header;
  for (std::size_t i = 0; i < rows[0].fields.size(); ++i) {
    header += (i ? "," : "") + rows[0].fields[i];
  }
  if (header != kDatasetHeader) {
    throw InputError("dataset header must be '" + std::string(kDatasetHeader) + "', got '" +
                     header + "'");
  }

  std::vector<DatasetRecord> records;
  std::set<std::string> labels;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const std::string where = "line " + std::to_string(row.line);
    if (row.fields.size() != 6) {
      throw InputError(where + ": expected 6 fields, got " + std::to_string(row.fields.size()));
    }
    const auto& f = row.fields;

    DatasetRecord rec;
    rec.label = f[0];
    validate_label(rec.label);
    if (!labels.insert(rec.label).second) {
      throw InputError(where + ": duplicate label '" + rec.label + "'");
    }
    rec.n = parse_n(f[1], row.line);
    if (f[2] == "fq") {
      rec.kind = MeasurementKind::qfi_lower_bound;
    } else if (f[2] == "xi2") {
      rec.kind = MeasurementKind::squeezing_upper_bound;
    } else {
      throw InputError(where + ": kind must be 'fq' or 'xi2', got '" + f[2] + "'");
    }
    try {
      rec.value = Decimal::parse(f[3]);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    if (f[4] == "none") {
      rec.unit = SqueezingUnit::none;
    } else if (f[4] == "linear") {
      rec.unit = SqueezingUnit::linear;
    } else if (f[4] == "db") {
      rec.unit = SqueezingUnit::db;
    } else {
      throw InputError(where + ": unit must be 'none', 'linear' or 'db', got '" + f[4] + "'");
    }
    rec.reference = f[5];
    try {
      rec.validate();
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<DatasetRecord> read_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open dataset '" + path + "'");
  return parse_dataset(in);
}

std::string serialize_dataset(const std::vector<DatasetRecord>& records) {
  std::ostringstream out;
  out << kDatasetHeader << '\n';
  for (const auto& rec : records) {
    out << quote_if_needed(rec.label) << ',' << rec.n << ',' << to_string(rec.kind) << ','
        << rec.value.to_string() << ',' << to_string(rec.unit) << ','
        << quote_if_needed(rec.reference) << '\n';
  }
  return out.str();
}

}  // namespace youngent
