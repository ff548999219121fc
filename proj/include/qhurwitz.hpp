#pragma once

// Quantum weighted double Hurwitz numbers with exact arithmetic.

#include "qhurwitz/rational.hpp"
#include "qhurwitz/partition.hpp"
#include "qhurwitz/qseries.hpp"
#include "qhurwitz/beta_poly.hpp"
#include "qhurwitz/symgroup.hpp"
#include "qhurwitz/weights.hpp"
#include "qhurwitz/hurwitz.hpp"
#include "qhurwitz/tau.hpp"
