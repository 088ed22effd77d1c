#pragma once

#include <lwr/capacity.hpp>
#include <lwr/continuous.hpp>
#include <lwr/core.hpp>
#include <lwr/errors.hpp>
#include <lwr/finite.hpp>
#include <lwr/io.hpp>
#include <lwr/montecarlo.hpp>
#include <lwr/projects.hpp>
#include <lwr/robust.hpp>
#include <lwr/simplex.hpp>
