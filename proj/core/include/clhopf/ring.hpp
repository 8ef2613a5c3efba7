#pragma once

#include "clhopf/ring/errors.hpp"
#include "clhopf/ring/linalg.hpp"
#include "clhopf/ring/matrix.hpp"
#include "clhopf/ring/multipoly.hpp"
#include "clhopf/ring/rational.hpp"
#include "clhopf/ring/scalar.hpp"
#include "clhopf/ring/unipoly.hpp"
