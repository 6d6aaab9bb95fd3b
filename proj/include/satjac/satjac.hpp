#pragma once

#include "satjac/analyzer.hpp"
#include "satjac/budget.hpp"
#include "satjac/ci.hpp"
#include "satjac/combinatorics.hpp"
#include "satjac/constructions.hpp"
#include "satjac/defect.hpp"
#include "satjac/errors.hpp"
#include "satjac/groebner.hpp"
#include "satjac/hilbert.hpp"
#include "satjac/ideal.hpp"
#include "satjac/json_io.hpp"
#include "satjac/monomial.hpp"
#include "satjac/parse.hpp"
#include "satjac/polynomial.hpp"
#include "satjac/random_form.hpp"
#include "satjac/rational.hpp"
#include "satjac/render.hpp"
#include "satjac/ring.hpp"
#include "satjac/rng.hpp"
#include "satjac/spectrum.hpp"
