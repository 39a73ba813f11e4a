// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fsorf/mc/estimate.hpp"
#include "fsorf/mc/ks.hpp"
#include "fsorf/mc/random.hpp"
#include "fsorf/mc/samplers.hpp"
