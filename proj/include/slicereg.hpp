#pragma once

#include "slicereg/errors.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/slice_series.hpp"
#include "slicereg/majorant.hpp"
#include "slicereg/poisson.hpp"
#include "slicereg/sampling.hpp"
#include "slicereg/lipschitz.hpp"
#include "slicereg/verify.hpp"
#include "slicereg/io.hpp"
