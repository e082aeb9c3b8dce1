//  Copyright 2026 The primlat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include "primlat/error.hpp"
#include "primlat/rational.hpp"
#include "primlat/poset.hpp"
#include "primlat/lattice.hpp"
#include "primlat/classify.hpp"
#include "primlat/isomorphism.hpp"
#include "primlat/compose.hpp"
#include "primlat/enumerate.hpp"
#include "primlat/laws.hpp"
#include "primlat/ortho.hpp"
#include "primlat/negation.hpp"
#include "primlat/valuation.hpp"
#include "primlat/level.hpp"
#include "primlat/reduction.hpp"
#include "primlat/primorial.hpp"
#include "primlat/dposet.hpp"
#include "primlat/projection.hpp"
#include "primlat/probability.hpp"
#include "primlat/seqproc.hpp"
#include "primlat/text_format.hpp"
#include "primlat/dot.hpp"
#include "primlat/report.hpp"
