// Copyright 2026 The supercurve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERCURVE_SUPERCURVE_HPP
#define SUPERCURVE_SUPERCURVE_HPP

#include "supercurve/arith.hpp"
#include "supercurve/canrep.hpp"
#include "supercurve/cartier.hpp"
#include "supercurve/casecheck.hpp"
#include "supercurve/curve.hpp"
#include "supercurve/error.hpp"
#include "supercurve/exprparse.hpp"
#include "supercurve/ff.hpp"
#include "supercurve/matrix.hpp"
#include "supercurve/meataxe.hpp"
#include "supercurve/poly.hpp"
#include "supercurve/ramify.hpp"

#endif  // SUPERCURVE_SUPERCURVE_HPP
