// Copyright 2026 The treeprop Authors
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


// Everything at once.

#ifndef TREEPROP_TREEPROP_HPP_
#define TREEPROP_TREEPROP_HPP_

#include "treeprop/array_index.hpp"
#include "treeprop/colored_order.hpp"
#include "treeprop/constructions.hpp"
#include "treeprop/dot.hpp"
#include "treeprop/error.hpp"
#include "treeprop/family.hpp"
#include "treeprop/formula.hpp"
#include "treeprop/index.hpp"
#include "treeprop/index_tree.hpp"
#include "treeprop/indiscernibility.hpp"
#include "treeprop/json_io.hpp"
#include "treeprop/oracle.hpp"
#include "treeprop/properties.hpp"
#include "treeprop/qftype.hpp"
#include "treeprop/report.hpp"
#include "treeprop/structure.hpp"

#endif  // TREEPROP_TREEPROP_HPP_
