#pragma once

// Machine-readable output records. Every numeric cell is an exact "p/q"
// string; no floating point anywhere.

#include <string>
#include <utility>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

enum class OutputFormat { Table, Json, Csv };

OutputFormat output_format_from_name(const std::string& name);

struct OutputRecord {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> inputs;  // name -> value
  std::vector<std::string> values;                          // "p/q" strings
  std::string provenance;

  static OutputRecord scalar(std::string kind,
                             std::vector<std::pair<std::string, std::string>> inputs,
                             const Rational& value, std::string provenance);
};

// {"kind": ..., "inputs": {...}, "value": ... , "provenance": ...}; "value" is
// a single string for scalar records, else an array of strings.
std::string to_json(const OutputRecord& record);

// One CSV row: kind, inputs as k=v pairs, values..., provenance.
std::string to_csv(const OutputRecord& record);

std::string to_table(const OutputRecord& record);

std::string format_record(const OutputRecord& record, OutputFormat format);

}  // namespace moduli
