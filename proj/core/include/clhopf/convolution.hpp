#pragma once

#include "clhopf/convolution/convolution.hpp"
