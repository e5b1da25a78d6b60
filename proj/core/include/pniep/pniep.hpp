#pragma once

#include "pniep/construction.hpp"
#include "pniep/error.hpp"
#include "pniep/matrix.hpp"
#include "pniep/perturbation.hpp"
#include "pniep/realizability.hpp"
#include "pniep/spectral_core.hpp"
#include "pniep/spectrum.hpp"
#include "pniep/templates.hpp"
#include "pniep/tolerances.hpp"
#include "pniep/verification.hpp"
