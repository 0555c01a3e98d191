#pragma once

#include "birkhoff/birkhoff_sum.hpp"
#include "birkhoff/constructions.hpp"
#include "birkhoff/debruijn.hpp"
#include "birkhoff/dimension.hpp"
#include "birkhoff/errors.hpp"
#include "birkhoff/oracle.hpp"
#include "birkhoff/pcc_function.hpp"
#include "birkhoff/perron.hpp"
#include "birkhoff/symbol_function.hpp"
#include "birkhoff/thermo.hpp"
#include "birkhoff/word.hpp"
