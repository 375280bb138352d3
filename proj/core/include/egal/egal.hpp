#pragma once

#include "egal/deception.hpp"
#include "egal/exact_solver.hpp"
#include "egal/format.hpp"
#include "egal/ga.hpp"
#include "egal/instance_io.hpp"
#include "egal/llga.hpp"
#include "egal/model.hpp"
#include "egal/report.hpp"
#include "egal/rng.hpp"
#include "egal/robustness.hpp"
#include "egal/solver.hpp"
