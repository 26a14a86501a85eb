#pragma once

#include "rqa/numeric.hpp"
#include "rqa/interval_config.hpp"
#include "rqa/dynamics.hpp"
#include "rqa/rqa.hpp"
#include "rqa/solenoidal.hpp"
#include "rqa/finite_omega.hpp"
#include "rqa/constructions.hpp"
#include "rqa/io.hpp"
