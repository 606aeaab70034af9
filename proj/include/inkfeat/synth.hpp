#ifndef INKFEAT_SYNTH_HPP
#define INKFEAT_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "inkfeat/ink.hpp"

namespace inkfeat {

// The 11 symbol classes, stable order.
const std::vector<std::string>& SymbolClasses();

// Deterministic synthetic gesture: the class template resampled to roughly
// 60 points, Gaussian jitter scaled by jitter * template-diagonal, 5 ms
// timestamps, pressure 0.5. Same (symbol_class, seed, jitter) -> same
// gesture. Throws kParseError for an unknown class or jitter outside
// [0, 0.2].
Gesture Synthesize(const std::string& symbol_class, std::uint64_t seed,
                   double jitter);

}  // namespace inkfeat

#endif  // INKFEAT_SYNTH_HPP
