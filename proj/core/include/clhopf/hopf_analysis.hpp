#pragma once

#include "clhopf/hopf_analysis/antipodeless.hpp"
#include "clhopf/hopf_analysis/crossing.hpp"
#include "clhopf/hopf_analysis/families.hpp"
#include "clhopf/hopf_analysis/gl_action.hpp"
#include "clhopf/hopf_analysis/main_theorem.hpp"
#include "clhopf/hopf_analysis/report.hpp"
#include "clhopf/hopf_analysis/splitting.hpp"
#include "clhopf/hopf_analysis/structure.hpp"
