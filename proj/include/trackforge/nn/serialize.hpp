#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "trackforge/nn/types.hpp"

namespace trackforge::nn {

// Binary weight file, little-endian:
//   magic "TFWT" | u32 version | u32 arch_len + arch | u32 tensor_count |
//   per tensor: u32 name_len + name, u32 rows, u32 cols, row-major f64 data |
//   u32 CRC32 over everything before the trailer.
void save_weights(const std::filesystem::path& path, const std::string& arch,
                  const std::vector<ParamRef>& params);

// Loads into the given parameter set; tensor names and dims must match in
// declaration order, otherwise FormatError naming the offending tensor.
void load_weights(const std::filesystem::path& path, const std::string& expected_arch,
                  const std::vector<ParamRef>& params);

// Arch string recorded in a weight file (no dimension checks).
std::string peek_arch(const std::filesystem::path& path);

}  // namespace trackforge::nn
