#include "nakalab/quiver.hpp"

#include <sstream>
#include <stdexcept>

namespace nakalab {

Quiver::Quiver(std::vector<int> vertex_ids, std::vector<Arrow> arrows)
    : vertex_ids_(std::move(vertex_ids)), arrows_(std::move(arrows)) {
  out_.resize(vertex_ids_.size());
  in_.resize(vertex_ids_.size());
  for (int a = 0; a < num_arrows(); ++a) {
    const Arrow& ar = arrows_[a];
    if (ar.src < 0 || ar.src >= num_vertices() || ar.tgt < 0 || ar.tgt >= num_vertices())
      throw std::invalid_argument("arrow endpoint out of range");
    out_[ar.src].push_back(a);
    in_[ar.tgt].push_back(a);
  }
}

int Quiver::vertex_index(int id) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertex_ids_[i] == id) return i;
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows_[i].name == name) return i;
  return -1;
}

bool Quiver::is_connected() const {
  int n = num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    auto visit = [&](int w) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    };
    for (int a : out_[v]) visit(arrows_[a].tgt);
    for (int a : in_[v]) visit(arrows_[a].src);
  }
  return count == n;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const Arrow& a : arrows_) rev.push_back({a.name, a.tgt, a.src});
  return Quiver(vertex_ids_, std::move(rev));
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertex_ids_ != o.vertex_ids_) return false;
  if (arrows_.size() != o.arrows_.size()) return false;
  for (size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name != o.arrows_[i].name || arrows_[i].src != o.arrows_[i].src ||
        arrows_[i].tgt != o.arrows_[i].tgt)
      return false;
  return true;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) {
    std::ostringstream os;
    os << "e" << q.vertex_id(p.start);
    return os.str();
  }
  std::ostringstream os;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) os << ' ';
    os << q.arrow(p.arrows[i]).name;
  }
  return os.str();
}

}  // namespace nakalab
