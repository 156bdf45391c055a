#pragma once

#include "dold/types.hpp"
#include "dold/polynomial.hpp"
#include "dold/numtheory.hpp"
#include "dold/sequence.hpp"
#include "dold/doldcore.hpp"
#include "dold/literals.hpp"
#include "dold/parallel.hpp"
#include "dold/spectra_enum.hpp"
#include "dold/genus_opt.hpp"
#include "dold/matrix.hpp"
#include "dold/symplectic.hpp"
