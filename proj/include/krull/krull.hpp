#pragma once

#include "krull/algebra.hpp"
#include "krull/chains.hpp"
#include "krull/error.hpp"
#include "krull/field.hpp"
#include "krull/integral.hpp"
#include "krull/normalize.hpp"
#include "krull/parse.hpp"
#include "krull/polynomial.hpp"
#include "krull/random.hpp"
