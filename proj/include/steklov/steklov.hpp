// steklov.hpp -- umbrella header for the whole library
// SPDX-License-Identifier: MIT
#pragma once

#include "steklov/asymptotics.hpp"
#include "steklov/eigenfield.hpp"
#include "steklov/emit.hpp"
#include "steklov/errors.hpp"
#include "steklov/gegenbauer.hpp"
#include "steklov/geometry.hpp"
#include "steklov/linalg.hpp"
#include "steklov/oracle.hpp"
#include "steklov/quadrature.hpp"
#include "steklov/spectral.hpp"
#include "steklov/tridiagonal.hpp"
