#pragma once

#include <string>

#include "vreg/density.hpp"
#include "vreg/sieve.hpp"
#include "vreg/witness.hpp"

namespace vreg {

// Compact single-line JSON. Integers are emitted as decimal strings so that
// 64-bit values survive parsers that read numbers as doubles; reals stay
// JSON numbers.
std::string to_json(const WitnessReport& report);
std::string to_json(const DensityApproximation& approx);
std::string to_json(const RangeScanResult& result);

}  // namespace vreg
