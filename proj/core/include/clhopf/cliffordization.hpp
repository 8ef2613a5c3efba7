#pragma once

#include "clhopf/cliffordization/clifford.hpp"
#include "clhopf/cliffordization/context.hpp"
#include "clhopf/cliffordization/forms.hpp"
