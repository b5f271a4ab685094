#pragma once

#include "sylgal/canon.hpp"
#include "sylgal/chromatic.hpp"
#include "sylgal/coloring.hpp"
#include "sylgal/constructions.hpp"
#include "sylgal/embed.hpp"
#include "sylgal/enumerate.hpp"
#include "sylgal/error.hpp"
#include "sylgal/galois.hpp"
#include "sylgal/geometry.hpp"
#include "sylgal/io.hpp"
#include "sylgal/parallel.hpp"
#include "sylgal/report.hpp"
#include "sylgal/witness.hpp"
