// Copyright 2026 The slender Authors. All rights reserved.
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

// Textual group specifications:
//
//   z | z(d) | zinv(m) | free(r) | bs(m,n) | thompson
//   direct-sum [of] {spec, spec, ...}
//   free-product [of] {spec, spec, ...}
//
// z and z(1) are the integers; z(d) for d != 1 is Z^d with the l1 norm.

#pragma once

#include <string_view>

#include "slender/bs.hpp"
#include "slender/catalog.hpp"

namespace slender::config {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GroupOptions {
  // Root search bound for Baumslag-Solitar factors.
  bs::RootBound bs_bound{2, 4};
};

catalog::AnyGroup make_group(std::string_view spec, const GroupOptions& options = {});

}  // namespace slender::config
