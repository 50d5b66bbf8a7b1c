#pragma once

#include "boson_operator.hpp"
#include "conjugation.hpp"
#include "deformed_algebra.hpp"
#include "fock_poly.hpp"
#include "polynomial_roots.hpp"
#include "scalar.hpp"
#include "spectral.hpp"
