#pragma once

// Umbrella header.

#include <dicritical/numeric.hpp>
#include <dicritical/matrix.hpp>
#include <dicritical/modification.hpp>
#include <dicritical/linear_form.hpp>
#include <dicritical/solver.hpp>
#include <dicritical/polynomial.hpp>
#include <dicritical/random.hpp>
#include <dicritical/gcd.hpp>
#include <dicritical/rational_function.hpp>
#include <dicritical/chart.hpp>
#include <dicritical/candidate.hpp>
#include <dicritical/io.hpp>
#include <dicritical/scenario.hpp>
#include <dicritical/fixtures.hpp>
