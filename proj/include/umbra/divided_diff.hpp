#pragma once

#include <vector>

#include "umbra/scalar.hpp"

namespace umbra {

// k-th divided difference of f over k+1 pairwise distinct nodes, by the
// standard recursive rule. Exact; vanishes whenever k > deg f.
inline Scalar divided_difference(const std::vector<Scalar>& nodes, const SPoly& f) {
  if (nodes.empty()) raise(ErrorKind::InvalidParameter, "divided difference needs nodes");
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j])
        raise(ErrorKind::RepeatedNodes,
              "repeated node " + nodes[i].str() + " in divided difference");
  std::vector<Scalar> v;
  v.reserve(nodes.size());
  for (const Scalar& x : nodes) v.push_back(f.eval(x));
  for (size_t level = 1; level < nodes.size(); ++level)
    for (size_t i = 0; i + level < nodes.size(); ++i)
      v[i] = (v[i + 1] - v[i]) / (nodes[i + level] - nodes[i]);
  return v[0];
}

}  // namespace umbra
