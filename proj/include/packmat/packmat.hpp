#pragma once
// Convenience umbrella header.

#include "packmat/packed_int.hpp"
#include "packmat/big_int.hpp"
#include "packmat/dense_matrix.hpp"
#include "packmat/packing.hpp"
#include "packmat/signed_multiply.hpp"
#include "packmat/exact_decimal.hpp"
#include "packmat/decimal_multiply.hpp"
#include "packmat/complex_multiply.hpp"
#include "packmat/reference.hpp"
#include "packmat/generate.hpp"
#include "packmat/matrix_io.hpp"
#include "packmat/bench.hpp"
