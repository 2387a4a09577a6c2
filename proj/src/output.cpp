#include "moduli/output.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace moduli {

OutputFormat output_format_from_name(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw std::domain_error("unknown output format: " + name);
}

OutputRecord OutputRecord::scalar(std::string kind,
                                  std::vector<std::pair<std::string, std::string>> inputs,
                                  const Rational& value, std::string provenance) {
  return OutputRecord{std::move(kind), std::move(inputs), {value.str()}, std::move(provenance)};
}

std::string to_json(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["kind"] = record.kind;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record.inputs) inputs[key] = value;
  j["inputs"] = inputs;
  if (record.values.size() == 1) {
    j["value"] = record.values.front();
  } else {
    j["value"] = record.values;
  }
  j["provenance"] = record.provenance;
  return j.dump();
}

std::string to_csv(const OutputRecord& record) {
  std::string row = record.kind;
  for (const auto& [key, value] : record.inputs) row += "," + key + "=" + value;
  for (const auto& v : record.values) row += "," + v;
  row += "," + record.provenance;
  return row;
}

std::string to_table(const OutputRecord& record) {
  std::string line = record.kind;
  if (!record.inputs.empty()) {
    line += "(";
    bool first = true;
    for (const auto& [key, value] : record.inputs) {
      if (!first) line += ", ";
      line += key + "=" + value;
      first = false;
    }
    line += ")";
  }
  line += " = ";
  if (record.values.size() == 1) {
    line += record.values.front();
  } else {
    line += "[";
    for (std::size_t i = 0; i < record.values.size(); ++i) {
      if (i) line += ", ";
      line += record.values[i];
    }
    line += "]";
  }
  if (!record.provenance.empty()) line += "    # " + record.provenance;
  return line;
}

std::string format_record(const OutputRecord& record, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table:
      return to_table(record);
    case OutputFormat::Json:
      return to_json(record);
    case OutputFormat::Csv:
      return to_csv(record);
  }
  throw std::logic_error("unreachable");
}

}  // namespace moduli
