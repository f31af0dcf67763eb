// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "vacindex/asymptotics.hpp"
#include "vacindex/complex2.hpp"
#include "vacindex/errors.hpp"
#include "vacindex/lattice.hpp"
#include "vacindex/mat2.hpp"
#include "vacindex/oracle.hpp"
#include "vacindex/scalar.hpp"
#include "vacindex/serialize.hpp"
#include "vacindex/spectrum.hpp"
#include "vacindex/sym_eigen.hpp"
#include "vacindex/vacuum.hpp"
