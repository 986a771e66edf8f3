#pragma once

#include "base_locus.hpp"
#include "cremona.hpp"
#include "curves.hpp"
#include "divisor.hpp"
#include "field.hpp"
#include "interpolation.hpp"
#include "linalg.hpp"
#include "monomials.hpp"
#include "points.hpp"
#include "report.hpp"
#include "version.hpp"
