// Copyright 2026 The tropdual Authors
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

#pragma once

#include "tropdual/bivariate.hpp"
#include "tropdual/campaign.hpp"
#include "tropdual/cayley.hpp"
#include "tropdual/dual_nss.hpp"
#include "tropdual/error.hpp"
#include "tropdual/io.hpp"
#include "tropdual/matrix.hpp"
#include "tropdual/newton.hpp"
#include "tropdual/poly.hpp"
#include "tropdual/random.hpp"
#include "tropdual/rational.hpp"
#include "tropdual/semiring.hpp"
#include "tropdual/solver.hpp"
#include "tropdual/svg.hpp"
