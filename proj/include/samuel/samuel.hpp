#pragma once

#include "samuel/errors.hpp"
#include "samuel/field.hpp"
#include "samuel/matrix.hpp"
#include "samuel/monomial.hpp"
#include "samuel/polynomial.hpp"
#include "samuel/parse.hpp"
#include "samuel/groebner.hpp"
#include "samuel/ideal.hpp"
#include "samuel/local.hpp"
#include "samuel/parallel.hpp"
#include "samuel/hilbert.hpp"
#include "samuel/artin.hpp"
#include "samuel/kernel.hpp"
#include "samuel/sequences.hpp"
#include "samuel/sally.hpp"
