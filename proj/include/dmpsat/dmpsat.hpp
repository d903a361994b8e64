#pragma once

#include "dmpsat/bounds.hpp"
#include "dmpsat/canonical.hpp"
#include "dmpsat/constructions.hpp"
#include "dmpsat/enumerate.hpp"
#include "dmpsat/graph.hpp"
#include "dmpsat/graph6.hpp"
#include "dmpsat/mp.hpp"
#include "dmpsat/oracle.hpp"
#include "dmpsat/saturation.hpp"
#include "dmpsat/search.hpp"
#include "dmpsat/verify.hpp"
