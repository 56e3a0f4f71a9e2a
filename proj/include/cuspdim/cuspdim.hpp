#pragma once

#include "cuspdim/arith.hpp"
#include "cuspdim/classifier.hpp"
#include "cuspdim/coset_oracle.hpp"
#include "cuspdim/gamma0.hpp"
#include "cuspdim/multiplier.hpp"
#include "cuspdim/qseries.hpp"
#include "cuspdim/rational.hpp"
#include "cuspdim/verify.hpp"
