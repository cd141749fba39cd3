#pragma once

#include "fundsol/errors.hpp"
#include "fundsol/finite_difference.hpp"
#include "fundsol/fundamental_solutions.hpp"
#include "fundsol/kummer.hpp"
#include "fundsol/lauricella.hpp"
#include "fundsol/operator_verify.hpp"
#include "fundsol/parallel.hpp"
#include "fundsol/quadrature.hpp"
#include "fundsol/series.hpp"
#include "fundsol/special_functions.hpp"
#include "fundsol/verification.hpp"
