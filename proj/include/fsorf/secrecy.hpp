// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fsorf/secrecy/asymptotic.hpp"
#include "fsorf/secrecy/dual.hpp"
#include "fsorf/secrecy/e2e.hpp"
#include "fsorf/secrecy/quadrature.hpp"
#include "fsorf/secrecy/scenario.hpp"
#include "fsorf/secrecy/single.hpp"
