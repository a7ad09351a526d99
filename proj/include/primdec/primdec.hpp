#pragma once

// Everything: polynomial arithmetic, Groebner bases, ideal operations,
// monomial ideals, the theorem lab, the parser and JSON reports.

#include "primdec/errors.hpp"
#include "primdec/polyring.hpp"
#include "primdec/groebner.hpp"
#include "primdec/idealops.hpp"
#include "primdec/monomial.hpp"
#include "primdec/theoremlab.hpp"
#include "primdec/parser.hpp"
#include "primdec/report.hpp"
