#pragma once

#include "core.hpp"
#include "diagram.hpp"
#include "genfunc.hpp"
#include "inversion.hpp"
#include "necklaces.hpp"
#include "numtheory.hpp"
#include "oracle.hpp"
#include "partitions.hpp"
