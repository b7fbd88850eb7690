#pragma once

#include <functional>
#include <vector>

#include "tconn/vertex_set.hpp"

namespace tconn {

/// Returned by a sink to keep going or to cancel the enumeration.
enum class Flow { Continue, Stop };

struct InducedPath {
  std::vector<Vertex> seq;
  int branch_depth = 0;

  friend bool operator==(const InducedPath&, const InducedPath&) = default;
};

using SetSink = std::function<Flow(const VertexSet&)>;
using PathSink = std::function<Flow(const InducedPath&)>;

}  // namespace tconn
