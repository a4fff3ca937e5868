// Copyright 2026 The Authors.
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


#ifndef SCSC_TOOLS_VERIFY_H_
#define SCSC_TOOLS_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <ostream>

namespace scsc {

// Brute-force checks on small random instances. Prints one line per check and
// returns true when all pass.
bool RunVerifySuite(std::size_t trials, std::uint64_t seed, std::ostream& out);

}  // namespace scsc

#endif  // SCSC_TOOLS_VERIFY_H_
