#ifndef GGL_GGL_HPP
#define GGL_GGL_HPP

#include "commands.hpp"
#include "fit.hpp"
#include "gfg.hpp"
#include "grover.hpp"
#include "linalg.hpp"
#include "pathsum.hpp"
#include "report.hpp"
#include "trotter.hpp"

#endif
