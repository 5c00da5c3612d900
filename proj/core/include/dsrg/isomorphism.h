// Copyright 2026 The dsrg-circulant Authors
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

// General digraph isomorphism by colour refinement and individualization.
// Independent of the floor/certificate machinery; used as its oracle.

#ifndef DSRG_ISOMORPHISM_H_
#define DSRG_ISOMORPHISM_H_

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dsrg/digraph.h"

namespace dsrg {

// Coarsest equitable colouring refining `initial` (all zero if empty).
// Colours are canonical: isomorphic inputs get equal colour sequences up to
// the vertex bijection.
std::vector<int> EquitableColoring(const AdjacencyMatrix& a,
                                   std::vector<int> initial = {});

// pi with b(pi[i], pi[j]) = a(i, j) for all i, j, if one exists.
std::optional<std::vector<int>> Isomorphism(const AdjacencyMatrix& a,
                                            const AdjacencyMatrix& b);

bool IsIsomorphism(const AdjacencyMatrix& a, const AdjacencyMatrix& b,
                   const std::vector<int>& pi);

boost::multiprecision::cpp_int AutomorphismCount(const AdjacencyMatrix& a);

}  // namespace dsrg

#endif  // DSRG_ISOMORPHISM_H_
