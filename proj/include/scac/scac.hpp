#pragma once

// Conflict-avoiding and strongly conflict-avoiding codes: difference-set
// calculus, validation, closed-form bounds, constructions, exhaustive search
// and a collision-channel simulator. Everything except io.hpp is free of
// third-party dependencies.

#include "bound_result.hpp"
#include "bounds.hpp"
#include "channel.hpp"
#include "classify.hpp"
#include "code.hpp"
#include "codeword.hpp"
#include "construct.hpp"
#include "difference.hpp"
#include "number_theory.hpp"
#include "residue_set.hpp"
#include "search.hpp"
#include "validate.hpp"
