// Copyright 2026 The dtg Authors
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


// Small fixtures shared by the unit tests.

#ifndef DTG_TESTS_SUPPORT_HPP_
#define DTG_TESTS_SUPPORT_HPP_

#include <initializer_list>
#include <vector>

#include "dtg/dag.hpp"
#include "dtg/error.hpp"

namespace dtg::test {

inline Dag make(int n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Dag::build(n, list);
}

inline Dag p3() { return make(3, {{0, 1}, {1, 2}}); }
inline Dag p4() { return make(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Dag diamond() { return make(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }
inline Dag bipartite22() { return make(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// Eight vertices, lambda 5/3; its certificate is a forcing cycle through all
// eight vertices with five edges and three hops.
inline Dag five_thirds() {
  return make(8, {{0, 3}, {5, 1}, {6, 1}, {4, 2}, {2, 7}, {4, 7}, {6, 5}, {6, 7}});
}

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace dtg::test

#endif  // DTG_TESTS_SUPPORT_HPP_
