#pragma once

#include "shellkit/bruhat.hpp"
#include "shellkit/core.hpp"
#include "shellkit/matroid.hpp"
#include "shellkit/promotion.hpp"
#include "shellkit/shelling.hpp"
#include "shellkit/subdivision.hpp"
