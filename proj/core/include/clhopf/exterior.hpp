#pragma once

#include "clhopf/exterior/algebra.hpp"
#include "clhopf/exterior/blade.hpp"
#include "clhopf/exterior/multivector.hpp"
