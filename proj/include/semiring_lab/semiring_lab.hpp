//  Copyright 2026 The semiring-lab Authors
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

#ifndef SEMIRING_LAB_SEMIRING_LAB_HPP_
#define SEMIRING_LAB_SEMIRING_LAB_HPP_

#include "semiring_lab/canonical.hpp"
#include "semiring_lab/catalog.hpp"
#include "semiring_lab/congruences.hpp"
#include "semiring_lab/constructors.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/exactness.hpp"
#include "semiring_lab/hom.hpp"
#include "semiring_lab/injectivity.hpp"
#include "semiring_lab/io.hpp"
#include "semiring_lab/parallel.hpp"
#include "semiring_lab/substructures.hpp"
#include "semiring_lab/suites.hpp"
#include "semiring_lab/validate.hpp"

#endif  // SEMIRING_LAB_SEMIRING_LAB_HPP_
