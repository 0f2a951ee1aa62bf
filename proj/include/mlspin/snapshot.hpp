#pragma once

#include <string>

#include "mlspin/state.hpp"

namespace mlspin {

/// Binary state snapshot. Layout: magic "MLSPIN1\0", then little-endian
/// 64-bit floats: L, N (as float), q(3), p(3), pi(3), then A then Pi,
/// component-major, node order x-fastest.
void write_snapshot(const std::string& path, const State& Y);
State read_snapshot(const std::string& path);

} // namespace mlspin
