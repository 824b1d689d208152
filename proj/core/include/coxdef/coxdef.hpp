// Umbrella header.

#ifndef COXDEF_COXDEF_HPP_
#define COXDEF_COXDEF_HPP_

#include "coxdef/certify.hpp"
#include "coxdef/coxeter.hpp"
#include "coxdef/defspace.hpp"
#include "coxdef/projlin.hpp"
#include "coxdef/sampling.hpp"
#include "coxdef/scan.hpp"
#include "coxdef/vinberg.hpp"

#endif  // COXDEF_COXDEF_HPP_
