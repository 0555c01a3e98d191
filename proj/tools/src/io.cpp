#include "birkhoff_cli/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace birkhoff::cli {

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

PccFunction parse_pcc_json(const std::string& text) {
  const nlohmann::json j = parse(text);
  if (!j.is_object() || !j.contains("depth") || !j.contains("values")) {
    throw InputError("PCC JSON needs the keys \"depth\" and \"values\"");
  }
  if (!j["depth"].is_number_unsigned()) throw InputError("\"depth\" must be a positive integer");
  if (!j["values"].is_array()) throw InputError("\"values\" must be an array");
  std::vector<double> values;
  for (const auto& v : j["values"]) {
    if (!v.is_number()) throw InputError("\"values\" may only contain numbers");
    values.push_back(v.get<double>());
  }
  return PccFunction(j["depth"].get<std::size_t>(), std::move(values));
}

PccFunction read_pcc_file(const std::filesystem::path& path) { return parse_pcc_json(slurp(path)); }

std::string pcc_to_json(const PccFunction& f) {
  std::string s = "{\"depth\": " + std::to_string(f.depth()) + ", \"values\": [";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ", ";
    s += format_double(f[i]);
  }
  return s + "]}\n";
}

std::vector<BinaryWord> parse_blocks_json(const std::string& text) {
  const nlohmann::json j = parse(text);
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array()) {
    throw InputError("blocks JSON needs a \"blocks\" array");
  }
  std::vector<BinaryWord> out;
  for (const auto& b : j["blocks"]) {
    if (!b.is_string()) throw InputError("blocks must be strings of 0 and 1");
    out.push_back(BinaryWord::from_string(b.get<std::string>()));
  }
  return out;
}

std::vector<BinaryWord> read_blocks_file(const std::filesystem::path& path) {
  return parse_blocks_json(slurp(path));
}

std::string curve_to_csv(const SpectrumCurve& curve) {
  std::string s = "alpha,s\n";
  for (const auto& [a, v] : curve.samples) s += format_double(a) + "," + format_double(v) + "\n";
  return s;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    out << content;
    if (!out.flush()) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw InputError("cannot write " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot write " + path.string());
  }
}

}  // namespace birkhoff::cli
