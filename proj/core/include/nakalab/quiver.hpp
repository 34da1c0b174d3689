#pragma once

#include <string>
#include <vector>

namespace nakalab {

struct Arrow {
  std::string name;
  int src = 0;  // vertex index
  int tgt = 0;
};

// Finite quiver. Vertices carry user-facing integer ids; everywhere else
// the library speaks in dense indices (declaration order).
class Quiver {
public:
  Quiver() = default;
  Quiver(std::vector<int> vertex_ids, std::vector<Arrow> arrows);

  int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  int vertex_id(int index) const { return vertex_ids_[index]; }
  int vertex_index(int id) const;  // -1 if unknown
  const Arrow& arrow(int index) const { return arrows_[index]; }
  int arrow_index(const std::string& name) const;  // -1 if unknown
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<int>& vertex_ids() const { return vertex_ids_; }

  const std::vector<int>& arrows_out(int v) const { return out_[v]; }
  const std::vector<int>& arrows_in(int v) const { return in_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

  // Connectivity of the underlying undirected graph (true for empty).
  bool is_connected() const;

  Quiver opposite() const;

  bool operator==(const Quiver& o) const;

private:
  std::vector<int> vertex_ids_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
};

// A path: start vertex plus arrow indices, composed left to right.
// An empty arrow list is the trivial path at `start`.
struct Path {
  int start = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  int end(const Quiver& q) const {
    return arrows.empty() ? start : q.arrow(arrows.back()).tgt;
  }
  bool operator==(const Path& o) const = default;
};

std::string path_to_string(const Quiver& q, const Path& p);

}  // namespace nakalab
