#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <birkhoff/pcc_function.hpp>
#include <birkhoff/thermo.hpp>
#include <birkhoff/word.hpp>

namespace birkhoff::cli {

/// Raised for unreadable files and malformed JSON.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"depth": k, "values": [...]}.
PccFunction parse_pcc_json(const std::string& text);
PccFunction read_pcc_file(const std::filesystem::path& path);
std::string pcc_to_json(const PccFunction& f);

/// {"blocks": ["0101", ...]}.
std::vector<BinaryWord> parse_blocks_json(const std::string& text);
std::vector<BinaryWord> read_blocks_file(const std::filesystem::path& path);

/// "alpha,s" header and one row per sample, 17 significant digits.
std::string curve_to_csv(const SpectrumCurve& curve);

std::string format_double(double v);

/// Writes through a temporary file and a rename, so a failed run leaves no
/// partial output behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace birkhoff::cli
