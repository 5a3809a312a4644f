/*
 * Copyright 2026 The lauricella Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LAURICELLA_LAURICELLA_HPP
#define LAURICELLA_LAURICELLA_HPP

#include "lauricella/basis.hpp"
#include "lauricella/core.hpp"
#include "lauricella/error.hpp"
#include "lauricella/intersection.hpp"
#include "lauricella/pde.hpp"
#include "lauricella/quadrature.hpp"
#include "lauricella/relations.hpp"
#include "lauricella/report.hpp"
#include "lauricella/sampling.hpp"
#include "lauricella/series.hpp"
#include "lauricella/special.hpp"

#endif // LAURICELLA_LAURICELLA_HPP
