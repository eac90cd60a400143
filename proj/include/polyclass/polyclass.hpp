#pragma once

#include "polyclass/class_group.hpp"
#include "polyclass/constructors.hpp"
#include "polyclass/errors.hpp"
#include "polyclass/io.hpp"
#include "polyclass/linalg.hpp"
#include "polyclass/matrix.hpp"
#include "polyclass/polytope.hpp"
#include "polyclass/report.hpp"
#include "polyclass/structure.hpp"
#include "polyclass/verify.hpp"
