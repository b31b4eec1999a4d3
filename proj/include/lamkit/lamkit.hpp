#pragma once

#include "lamkit/acceptance.hpp"
#include "lamkit/affine.hpp"
#include "lamkit/amalgam.hpp"
#include "lamkit/curves.hpp"
#include "lamkit/dynamics.hpp"
#include "lamkit/errors.hpp"
#include "lamkit/flat_surface.hpp"
#include "lamkit/io.hpp"
#include "lamkit/numeric.hpp"
#include "lamkit/obstruction.hpp"
#include "lamkit/rewriting.hpp"
#include "lamkit/traintrack.hpp"
