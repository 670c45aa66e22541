#pragma once

#include "artin/bounds.hpp"
#include "artin/classify7.hpp"
#include "artin/error.hpp"
#include "artin/field.hpp"
#include "artin/linalg.hpp"
#include "artin/polynomial.hpp"
#include "artin/quotient.hpp"
#include "artin/random.hpp"
#include "artin/report.hpp"
#include "artin/ring_map.hpp"
#include "artin/semigroup.hpp"
#include "artin/structure.hpp"
#include "artin/verify.hpp"
