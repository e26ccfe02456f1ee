#pragma once

#include "bigint.hpp"
#include "conjecture.hpp"
#include "contfrac.hpp"
#include "decomposition.hpp"
#include "determinant.hpp"
#include "hankel.hpp"
#include "laurent.hpp"
#include "nimble.hpp"
#include "orthopoly.hpp"
#include "parity.hpp"
#include "profiles.hpp"
#include "seq.hpp"
#include "series.hpp"
#include "sign.hpp"
#include "signs.hpp"
#include "symbolic.hpp"
#include "unipoly.hpp"
