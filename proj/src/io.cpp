// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "heapabs/io.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <map>
#include <set>

#include "json.hpp"

namespace heapabs {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(ErrorCode code, const std::string& message,
                               const std::string& pointer) {
  throw Error(ErrorCategory::kSchema, code, message, pointer.empty() ? "/" : pointer);
}

[[noreturn]] void model_error(ErrorCode code, const std::string& message,
                              const std::string& pointer) {
  throw Error(ErrorCategory::kModel, code, message, pointer.empty() ? "/" : pointer);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
    if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    throw Error(ErrorCategory::kParse, ErrorCode::kSyntaxError, what,
                line_column(text, e.byte));
  }
}

std::string child(const std::string& pointer, std::string_view key) {
  std::string escaped;
  for (char ch : key) {
    if (ch == '~') {
      escaped += "~0";
    } else if (ch == '/') {
      escaped += "~1";
    } else {
      escaped += ch;
    }
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

const json& expect_object(const json& j, const std::string& pointer) {
  if (!j.is_object()) schema_error(ErrorCode::kWrongType, "expected an object", pointer);
  return j;
}

const json& expect_array(const json& j, const std::string& pointer) {
  if (!j.is_array()) schema_error(ErrorCode::kWrongType, "expected an array", pointer);
  return j;
}

const std::string& expect_string(const json& j, const std::string& pointer) {
  if (!j.is_string()) schema_error(ErrorCode::kWrongType, "expected a string", pointer);
  return j.get_ref<const std::string&>();
}

std::string expect_token(const json& j, const std::string& pointer) {
  const std::string& s = expect_string(j, pointer);
  if (!is_valid_token(s)) {
    schema_error(ErrorCode::kInvalidId,
                 "identifier must be nonempty without whitespace or commas", pointer);
  }
  return s;
}

void check_fields(const json& obj, std::initializer_list<std::string_view> allowed,
                  std::initializer_list<std::string_view> required,
                  const std::string& pointer) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      schema_error(ErrorCode::kUnknownField, "unknown field '" + key + "'",
                   child(pointer, key));
    }
  }
  for (std::string_view key : required) {
    if (!obj.contains(std::string(key))) {
      schema_error(ErrorCode::kMissingField,
                   "missing field '" + std::string(key) + "'", pointer);
    }
  }
}

Label parse_label(const json& j, const std::string& pointer) {
  const std::string& s = expect_string(j, pointer);
  if (s == "l") return Label::kLeft;
  if (s == "r") return Label::kRight;
  schema_error(ErrorCode::kBadEdge, "edge label must be \"l\" or \"r\"", pointer);
}

Component parse_component(const json& j, const std::string& pointer) {
  expect_object(j, pointer);
  check_fields(j, {"layout", "variables", "nodes", "var_edges", "node_edges"},
               {"layout", "nodes"}, pointer);

  const std::string layout_ptr = child(pointer, "layout");
  auto layout = parse_layout(expect_string(j.at("layout"), layout_ptr));
  if (!layout) {
    schema_error(ErrorCode::kBadLayout, "layout must be SLL, T, C or DAG", layout_ptr);
  }
  Component c(*layout);

  if (j.contains("variables")) {
    const std::string ptr = child(pointer, "variables");
    const json& vars = expect_array(j.at("variables"), ptr);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      std::string id = expect_token(vars[i], child(ptr, i));
      if (!c.add_var(VarId(id))) {
        model_error(ErrorCode::kDuplicateId, "variable '" + id + "' declared twice",
                    child(ptr, i));
      }
    }
  }

  {
    const std::string ptr = child(pointer, "nodes");
    const json& nodes = expect_array(j.at("nodes"), ptr);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      std::string id = expect_token(nodes[i], child(ptr, i));
      if (!c.add_node(NodeId(id))) {
        model_error(ErrorCode::kDuplicateId, "node '" + id + "' declared twice",
                    child(ptr, i));
      }
    }
  }

  auto require_node = [&](const std::string& id, const std::string& ptr) {
    if (!c.has_node(NodeId(id))) {
      schema_error(ErrorCode::kUnknownNode, "undeclared node '" + id + "'", ptr);
    }
  };

  if (j.contains("var_edges")) {
    const std::string ptr = child(pointer, "var_edges");
    const json& edges = expect_array(j.at("var_edges"), ptr);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string eptr = child(ptr, i);
      const json& e = expect_array(edges[i], eptr);
      if (e.size() != 2) schema_error(ErrorCode::kBadEdge, "expected [var, node]", eptr);
      std::string var = expect_token(e[0], child(eptr, 0));
      std::string node = expect_token(e[1], child(eptr, 1));
      if (!c.has_var(VarId(var))) {
        schema_error(ErrorCode::kUnknownEndpoint, "undeclared variable '" + var + "'",
                     child(eptr, 0));
      }
      require_node(node, child(eptr, 1));
      c.add_edge(Edge::var(VarId(var), NodeId(node)));
    }
  }

  if (j.contains("node_edges")) {
    const std::string ptr = child(pointer, "node_edges");
    const json& edges = expect_array(j.at("node_edges"), ptr);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string eptr = child(ptr, i);
      const json& e = expect_array(edges[i], eptr);
      if (e.size() != 2 && e.size() != 3) {
        schema_error(ErrorCode::kBadEdge, "expected [src, dst] or [src, dst, label]", eptr);
      }
      std::string src = expect_token(e[0], child(eptr, 0));
      std::string dst = expect_token(e[1], child(eptr, 1));
      const bool labeled = e.size() == 3;
      if (labeled != (c.layout() == Layout::T)) {
        schema_error(ErrorCode::kEdgeKindMismatch,
                     labeled ? "labeled edge outside a T component"
                             : "unlabeled edge inside a T component",
                     eptr);
      }
      require_node(src, child(eptr, 0));
      require_node(dst, child(eptr, 1));
      if (labeled) {
        c.add_edge(Edge::labeled(NodeId(src), NodeId(dst), parse_label(e[2], child(eptr, 2))));
      } else {
        c.add_edge(Edge::node(NodeId(src), NodeId(dst)));
      }
    }
  }
  return c;
}

Edge parse_tagged_edge(const json& j, const std::string& pointer) {
  const json& e = expect_array(j, pointer);
  if (e.empty()) schema_error(ErrorCode::kBadEdge, "empty edge", pointer);
  const std::string& tag = expect_string(e[0], child(pointer, 0));
  if (tag == "var" && e.size() == 3) {
    return Edge::var(VarId(expect_token(e[1], child(pointer, 1))),
                     NodeId(expect_token(e[2], child(pointer, 2))));
  }
  if (tag == "node" && e.size() == 3) {
    return Edge::node(NodeId(expect_token(e[1], child(pointer, 1))),
                      NodeId(expect_token(e[2], child(pointer, 2))));
  }
  if (tag == "tree" && e.size() == 4) {
    return Edge::labeled(NodeId(expect_token(e[1], child(pointer, 1))),
                         NodeId(expect_token(e[2], child(pointer, 2))),
                         parse_label(e[3], child(pointer, 3)));
  }
  schema_error(ErrorCode::kBadEdge,
               "expected [\"var\",v,n], [\"node\",x,y] or [\"tree\",x,y,l|r]", pointer);
}

Witness parse_witness_value(const json& j, const std::string& pointer) {
  expect_object(j, pointer);
  check_fields(j, {"node_map", "edge_map"}, {"node_map", "edge_map"}, pointer);
  Witness w;

  const std::string nptr = child(pointer, "node_map");
  std::set<NodeId> images;
  for (const auto& [key, value] : expect_object(j.at("node_map"), nptr).items()) {
    const std::string kptr = child(nptr, key);
    if (!is_valid_token(key)) {
      schema_error(ErrorCode::kInvalidId,
                   "identifier must be nonempty without whitespace or commas", kptr);
    }
    NodeId to(expect_token(value, kptr));
    images.insert(to);
    w.node_map.emplace(NodeId(key), std::move(to));
  }

  const std::string eptr = child(pointer, "edge_map");
  const json& entries = expect_array(j.at("edge_map"), eptr);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string ptr = child(eptr, i);
    const json& pair = expect_array(entries[i], ptr);
    if (pair.size() != 2) schema_error(ErrorCode::kBadEdge, "expected [edge, edge]", ptr);
    Edge from = parse_tagged_edge(pair[0], child(ptr, 0));
    Edge to = parse_tagged_edge(pair[1], child(ptr, 1));
    if (!w.node_map.contains(from.dst()) ||
        (!from.is_var() && !w.node_map.contains(from.src()))) {
      schema_error(ErrorCode::kUnknownNode,
                   "edge " + from.to_string() + " names a node missing from node_map",
                   child(ptr, 0));
    }
    if (!images.contains(to.dst()) || (!to.is_var() && !images.contains(to.src()))) {
      schema_error(ErrorCode::kUnknownNode,
                   "edge " + to.to_string() + " names a node that is not an image",
                   child(ptr, 1));
    }
    if (!w.edge_map.emplace(std::move(from), std::move(to)).second) {
      model_error(ErrorCode::kDuplicateId, "edge mapped twice", ptr);
    }
  }
  return w;
}

// --- Canonical emitter -----------------------------------------------------

std::string quote(const std::string& s) {
  return json(s).dump(-1, ' ', false, json::error_handler_t::replace);
}

template <class Range, class Fn>
std::string inline_list(const Range& items, Fn&& render) {
  std::string out = "[";
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += ", ";
    first = false;
    out += render(item);
  }
  return out + "]";
}

// Writes `"key": [` + one item per line + `]`, or `"key": []`.
void block_list(std::string& out, const std::string& indent, std::string_view key,
                const std::vector<std::string>& items, bool trailing_comma) {
  out += indent + quote(std::string(key)) + ": ";
  if (items.empty()) {
    out += "[]";
  } else {
    out += "[\n";
    for (std::size_t i = 0; i < items.size(); ++i) {
      out += indent + "  " + items[i] + (i + 1 < items.size() ? ",\n" : "\n");
    }
    out += indent + "]";
  }
  out += trailing_comma ? ",\n" : "\n";
}

std::string tagged_edge(const Edge& e) {
  switch (e.kind()) {
    case EdgeKind::kVar:
      return "[\"var\", " + quote(e.var().str()) + ", " + quote(e.dst().str()) + "]";
    case EdgeKind::kNode:
      return "[\"node\", " + quote(e.src().str()) + ", " + quote(e.dst().str()) + "]";
    case EdgeKind::kLabeled:
      return "[\"tree\", " + quote(e.src().str()) + ", " + quote(e.dst().str()) + ", " +
             quote(std::string(to_string(e.label()))) + "]";
  }
  return "[]";
}

void emit_component(std::string& out, const Component& c, const std::string& indent) {
  const std::string in = indent + "  ";
  out += indent + "{\n";
  out += in + "\"layout\": " + quote(std::string(to_string(c.layout()))) + ",\n";
  out += in + "\"variables\": " +
         inline_list(c.vars(), [](const VarId& v) { return quote(v.str()); }) + ",\n";
  out += in + "\"nodes\": " +
         inline_list(c.nodes(), [](const NodeId& n) { return quote(n.str()); }) + ",\n";
  std::vector<std::string> var_edges, node_edges;
  for (const Edge& e : c.edges()) {
    if (e.is_var()) {
      var_edges.push_back("[" + quote(e.var().str()) + ", " + quote(e.dst().str()) + "]");
    } else if (e.kind() == EdgeKind::kNode) {
      node_edges.push_back("[" + quote(e.src().str()) + ", " + quote(e.dst().str()) + "]");
    } else {
      node_edges.push_back("[" + quote(e.src().str()) + ", " + quote(e.dst().str()) + ", " +
                           quote(std::string(to_string(e.label()))) + "]");
    }
  }
  block_list(out, in, "var_edges", var_edges, true);
  block_list(out, in, "node_edges", node_edges, false);
  out += indent + "}";
}

void emit_witness(std::string& out, const Witness& w, const std::string& indent) {
  const std::string in = indent + "  ";
  out += indent + "{\n";
  out += in + "\"node_map\": ";
  if (w.node_map.empty()) {
    out += "{},\n";
  } else {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [from, to] : w.node_map) {
      out += in + "  " + quote(from.str()) + ": " + quote(to.str()) +
             (++i < w.node_map.size() ? ",\n" : "\n");
    }
    out += in + "},\n";
  }
  std::vector<std::string> entries;
  for (const auto& [from, to] : w.edge_map) {
    entries.push_back("[" + tagged_edge(from) + ", " + tagged_edge(to) + "]");
  }
  block_list(out, in, "edge_map", entries, false);
  out += indent + "}";
}

// --- DOT -------------------------------------------------------------------

bool plain_dot_id(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0])) != 0) return false;
  for (char ch : s) {
    if (std::isalnum(static_cast<unsigned char>(ch)) == 0 && ch != '_') return false;
  }
  std::string lower;
  for (char ch : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  static const std::set<std::string> kKeywords = {"node",     "edge",  "graph",
                                                  "digraph", "subgraph", "strict"};
  return !kKeywords.contains(lower);
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::string dot_id(const std::string& s) { return plain_dot_id(s) ? s : dot_quote(s); }

}  // namespace

Heap parse_heap(std::string_view text) {
  const json root = parse_json(text);
  expect_object(root, "");
  check_fields(root, {"components"}, {"components"}, "");
  const json& comps = expect_array(root.at("components"), "/components");

  Heap h;
  std::map<NodeId, std::size_t> node_owner;
  std::map<VarId, std::size_t> var_owner;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string ptr = child(std::string("/components"), i);
    Component c = parse_component(comps[i], ptr);
    for (const NodeId& n : c.nodes()) {
      if (auto [it, ok] = node_owner.emplace(n, i); !ok) {
        model_error(ErrorCode::kComponentIdClash,
                    "node '" + n.str() + "' also declared in component " +
                        std::to_string(it->second),
                    ptr);
      }
    }
    for (const VarId& v : c.vars()) {
      if (auto [it, ok] = var_owner.emplace(v, i); !ok) {
        model_error(ErrorCode::kComponentIdClash,
                    "variable '" + v.str() + "' also declared in component " +
                        std::to_string(it->second),
                    ptr);
      }
    }
    h.components.push_back(std::move(c));
  }
  return h;
}

std::string serialize_heap(const Heap& h) {
  std::string out = "{\n  \"components\": ";
  if (h.components.empty()) return out + "[]\n}\n";
  out += "[\n";
  for (std::size_t i = 0; i < h.components.size(); ++i) {
    emit_component(out, h.components[i], "    ");
    out += i + 1 < h.components.size() ? ",\n" : "\n";
  }
  return out + "  ]\n}\n";
}

Witness parse_witness(std::string_view text) { return parse_witness_value(parse_json(text), ""); }

std::string serialize_witness(const Witness& w) {
  std::string out;
  emit_witness(out, w, "");
  return out + "\n";
}

std::vector<Witness> parse_witness_list(std::string_view text) {
  const json root = parse_json(text);
  expect_object(root, "");
  if (!root.contains("witnesses")) return {parse_witness_value(root, "")};
  check_fields(root, {"witnesses"}, {"witnesses"}, "");
  const json& list = expect_array(root.at("witnesses"), "/witnesses");
  std::vector<Witness> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(parse_witness_value(list[i], child(std::string("/witnesses"), i)));
  }
  return out;
}

std::string serialize_witness_list(std::span<const Witness> witnesses) {
  std::string out = "{\n  \"witnesses\": ";
  if (witnesses.empty()) return out + "[]\n}\n";
  out += "[\n";
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    emit_witness(out, witnesses[i], "    ");
    out += i + 1 < witnesses.size() ? ",\n" : "\n";
  }
  return out + "  ]\n}\n";
}

std::string export_dot(const Heap& h, const DotOptions& options) {
  std::set<std::string> node_names;
  for (const Component& c : h.components) {
    for (const NodeId& n : c.nodes()) node_names.insert(n.str());
  }
  auto var_id = [&](const VarId& v) {
    return node_names.contains(v.str()) ? dot_quote("var:" + v.str()) : dot_id(v.str());
  };

  std::string out = "digraph " + dot_id(options.graph_name) + " {\n";
  for (std::size_t i = 0; i < h.components.size(); ++i) {
    const Component& c = h.components[i];
    out += "  subgraph cluster_" + std::to_string(i) + " {\n";
    if (options.cluster_labels) {
      out += "    label=" + dot_quote(std::to_string(i) + ": " +
                                      std::string(to_string(c.layout()))) + ";\n";
    }
    for (const VarId& v : c.vars()) {
      out += "    " + var_id(v) + " [shape=circle, label=" + dot_quote(v.str()) + "];\n";
    }
    for (const NodeId& n : c.nodes()) out += "    " + dot_id(n.str()) + " [shape=oval];\n";
    for (const Edge& e : c.edges()) {
      if (e.is_var()) {
        out += "    " + var_id(e.var()) + " -> " + dot_id(e.dst().str()) + ";\n";
      } else if (e.kind() == EdgeKind::kLabeled) {
        out += "    " + dot_id(e.src().str()) + " -> " + dot_id(e.dst().str()) +
               " [label=" + dot_quote(std::string(to_string(e.label()))) + "];\n";
      } else {
        out += "    " + dot_id(e.src().str()) + " -> " + dot_id(e.dst().str()) + ";\n";
      }
    }
    out += "  }\n";
  }
  return out + "}\n";
}

}  // namespace heapabs
