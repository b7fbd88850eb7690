#pragma once

#include <cstdint>
#include <vector>

#include "tconn/graph.hpp"
#include "tconn/sink.hpp"

namespace tconn::detail {

/**
 * Backtracking search for induced paths leaving a root vertex set.
 *
 * The root stands for a single (possibly contracted) start vertex. From a
 * subpath ending in v, the candidates are N(v) minus the closed neighborhood
 * of the earlier path vertices; a subpath that reaches a target vertex is
 * reported and not extended. Only vertices in `allowed` are ever visited or
 * counted, which lets callers search G[allowed] without building it.
 *
 * Branch depth of a reported path is |closed| - root_weight, where `closed`
 * is the closed neighborhood of every path vertex except the last one, with
 * the root counted as root_weight vertices.
 */
class PathSearch {
 public:
  PathSearch(const Graph& g, VertexSet allowed, VertexSet targets, int root_weight, int t_limit)
      : g_(g),
        allowed_(std::move(allowed)),
        targets_(std::move(targets)),
        root_weight_(root_weight),
        t_limit_(t_limit) {}

  /// `emit(tail, branch_depth)` receives the path without its root and
  /// returns Flow. Returns false if the sink stopped the search.
  template <class Emit>
  bool run(const VertexSet& root_closed, const VertexSet& root_children, Emit&& emit) {
    if (root_closed.size() - root_weight_ > t_limit_) return true;
    tail_.clear();
    for (Vertex c : root_children)
      if (!extend(c, root_closed, emit)) return false;
    return true;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  template <class Emit>
  bool extend(Vertex v, const VertexSet& closed_before, Emit& emit) {
    ++nodes_;
    tail_.push_back(v);
    bool keep_going = true;
    if (targets_.contains(v)) {
      keep_going = emit(tail_, closed_before.size() - root_weight_) == Flow::Continue;
    } else {
      const VertexSet reach = g_.neighbors(v) & allowed_;
      const VertexSet closed = closed_before | reach;
      // Branch depth only grows along a subpath.
      if (closed.size() - root_weight_ <= t_limit_) {
        for (Vertex c : reach - closed_before) {
          if (!extend(c, closed, emit)) {
            keep_going = false;
            break;
          }
        }
      }
    }
    tail_.pop_back();
    return keep_going;
  }

  const Graph& g_;
  VertexSet allowed_;
  VertexSet targets_;
  int root_weight_;
  int t_limit_;
  std::vector<Vertex> tail_;
  std::uint64_t nodes_ = 0;
};

}  // namespace tconn::detail
