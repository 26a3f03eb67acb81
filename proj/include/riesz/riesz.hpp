#pragma once

#include "riesz/errors.hpp"
#include "riesz/gram.hpp"
#include "riesz/nodal.hpp"
#include "riesz/oracle.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/reference_table.hpp"
#include "riesz/systems.hpp"
#include "riesz/theta.hpp"
