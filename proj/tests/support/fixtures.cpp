// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "heapabs/io.hpp"

namespace heapabs::support {

std::string fixture_path(std::string_view name) {
  return std::string(HEAPABS_FIXTURE_DIR) + "/" + std::string(name);
}

std::string golden_path(std::string_view name) {
  return std::string(HEAPABS_GOLDEN_DIR) + "/" + std::string(name);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Heap fixture_heap(std::string_view name) { return parse_heap(read_text(fixture_path(name))); }

Component fixture_component(std::string_view name) {
  return fixture_heap(name).components.at(0);
}

Component make_component(Layout layout, std::initializer_list<std::string_view> edges,
                         std::initializer_list<std::string_view> nodes) {
  Component c(layout);
  for (std::string_view n : nodes) c.add_node(NodeId(std::string(n)));
  for (std::string_view e : edges) {
    if (auto pos = e.find("=>"); pos != std::string_view::npos) {
      VarId v(std::string(e.substr(0, pos)));
      NodeId n(std::string(e.substr(pos + 2)));
      c.add_var(v);
      c.add_node(n);
      c.add_edge(Edge::var(v, n));
    } else if (auto pos = e.find("-l->"); pos != std::string_view::npos) {
      NodeId a(std::string(e.substr(0, pos))), b(std::string(e.substr(pos + 4)));
      c.add_node(a);
      c.add_node(b);
      c.add_edge(Edge::labeled(a, b, Label::kLeft));
    } else if (auto pos = e.find("-r->"); pos != std::string_view::npos) {
      NodeId a(std::string(e.substr(0, pos))), b(std::string(e.substr(pos + 4)));
      c.add_node(a);
      c.add_node(b);
      c.add_edge(Edge::labeled(a, b, Label::kRight));
    } else if (auto pos = e.find("->"); pos != std::string_view::npos) {
      NodeId a(std::string(e.substr(0, pos))), b(std::string(e.substr(pos + 2)));
      c.add_node(a);
      c.add_node(b);
      c.add_edge(Edge::node(a, b));
    } else {
      throw std::invalid_argument("bad edge token " + std::string(e));
    }
  }
  return c;
}

}  // namespace heapabs::support
