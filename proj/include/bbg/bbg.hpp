#ifndef BBG_BBG_HPP
#define BBG_BBG_HPP

#include "bbg/averaging.hpp"
#include "bbg/complex.hpp"
#include "bbg/diophantine.hpp"
#include "bbg/fourier.hpp"
#include "bbg/io.hpp"
#include "bbg/precision.hpp"
#include "bbg/quadrature.hpp"
#include "bbg/rational.hpp"
#include "bbg/real.hpp"
#include "bbg/reduction.hpp"
#include "bbg/series.hpp"
#include "bbg/special.hpp"
#include "bbg/summation.hpp"
#include "bbg/types.hpp"

#endif  // BBG_BBG_HPP
