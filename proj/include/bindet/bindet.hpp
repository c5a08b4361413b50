#pragma once

#include "bindet/ansatz.hpp"
#include "bindet/closed_forms.hpp"
#include "bindet/epsilon.hpp"
#include "bindet/families.hpp"
#include "bindet/matrix.hpp"
#include "bindet/pochhammer.hpp"
#include "bindet/poly.hpp"
#include "bindet/rat_func.hpp"
#include "bindet/rational.hpp"
#include "bindet/tilings.hpp"
#include "bindet/verify.hpp"
