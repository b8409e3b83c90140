#ifndef NULLCONE_NULLCONE_HPP
#define NULLCONE_NULLCONE_HPP

#include "nullcone/curvature.hpp"
#include "nullcone/json_io.hpp"
#include "nullcone/matrix.hpp"
#include "nullcone/multipoly.hpp"
#include "nullcone/obstruction.hpp"
#include "nullcone/polydep.hpp"
#include "nullcone/pseudolin.hpp"
#include "nullcone/quadform.hpp"
#include "nullcone/rational.hpp"
#include "nullcone/spectral.hpp"
#include "nullcone/szaboclass.hpp"
#include "nullcone/unipoly.hpp"

#endif
