#pragma once

#include <cstdint>
#include <random>

#include "insider/ctl.hpp"
#include "insider/model.hpp"

namespace testing_support {

/// Small finalized model: at most 4 locations and 4 identities, value
/// alphabets of size at most 2, random policies, at most one insider and
/// assumption. Predicates p0, p1, p2 are parameterless; q takes an identity.
insider::Model random_model(std::mt19937_64& rng);

/// Random CTL formula over p0, p1, p2 of the given depth.
insider::CtlFormula random_formula(std::mt19937_64& rng, int depth);

}  // namespace testing_support
