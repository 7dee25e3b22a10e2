#pragma once

#include "binpoly.hpp"
#include "code.hpp"
#include "dna.hpp"
#include "errors.hpp"
#include "export.hpp"
#include "factor.hpp"
#include "poly.hpp"
#include "ring.hpp"
#include "theorems.hpp"
