#pragma once

#include "ucf/bounds.hpp"
#include "ucf/combinatorics.hpp"
#include "ucf/constructions.hpp"
#include "ucf/errors.hpp"
#include "ucf/family.hpp"
#include "ucf/io.hpp"
#include "ucf/mask.hpp"
#include "ucf/search.hpp"
