#pragma once

#include <cstdint>
#include <ostream>

namespace jkres {

// Randomized exact property checks; one PASS/FAIL line per property.
bool selftest(std::uint64_t seed, int count, std::ostream& out);

}  // namespace jkres
