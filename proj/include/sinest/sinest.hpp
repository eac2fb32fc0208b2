#pragma once

#include "sinest/acf.hpp"
#include "sinest/error.hpp"
#include "sinest/estimate.hpp"
#include "sinest/model.hpp"
#include "sinest/screening.hpp"
#include "sinest/smoothing.hpp"
#include "sinest/spectrum.hpp"
