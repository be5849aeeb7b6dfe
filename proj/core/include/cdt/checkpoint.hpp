#pragma once

#include "cdt/tensor.hpp"

#include <string>
#include <vector>

namespace cdt::nn {

// Flat binary parameter blob. Byte layout, all integers and doubles
// little-endian:
//
//   offset  size          field
//   0       4             magic "CDTW"
//   4       4 (u32)       format version, currently 1
//   8       4 (u32)       tensor count T
//   12      per tensor    { u32 rank R; u64 dims[R]; f64 values[prod(dims)] }
//
// Tensors are stored in network order (the order parameters() yields).
void save_parameter_blob(const std::string& path, const std::vector<Tensor>& tensors);
std::vector<Tensor> load_parameter_blob(const std::string& path);

} // namespace cdt::nn
