/*
   Copyright 2026 The cda Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Umbrella header. io.hpp and verify.hpp also need the vendored json.hpp on
// the include path (target cda::vendor).

#pragma once

#include "cda/albert.hpp"
#include "cda/anagram.hpp"
#include "cda/base_fields.hpp"
#include "cda/cyclic_algebra.hpp"
#include "cda/error.hpp"
#include "cda/io.hpp"
#include "cda/kummer.hpp"
#include "cda/linear_algebra.hpp"
#include "cda/random.hpp"
#include "cda/series.hpp"
#include "cda/structure_constants.hpp"
#include "cda/text_format.hpp"
#include "cda/verify.hpp"
