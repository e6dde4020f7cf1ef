// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "heapabs/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "heapabs/abstract.hpp"
#include "heapabs/classify.hpp"
#include "heapabs/io.hpp"
#include "heapabs/witness.hpp"

namespace heapabs::cli {

namespace {

// Raised for unreadable or unwritable files.
class FileFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileFailure("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw FileFailure("error while reading '" + path + "'");
  return buffer.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw FileFailure("cannot open '" + path + "' for writing");
  file << text;
  if (!file.flush()) throw FileFailure("error while writing '" + path + "'");
}

void print_violation(std::ostream& os, std::size_t component, const Violation& v) {
  os << "component " << component << ": " << to_string(v.code) << ": " << v.detail << "\n";
}

// Parses and validates; prints every violation and returns false when the
// heap is not valid.
bool load_valid_heap(const std::string& path, Heap& heap, std::ostream& err) {
  heap = parse_heap(read_file(path));
  auto violations = validate_heap(heap);
  for (const HeapViolation& hv : violations) {
    err << path << ": ";
    print_violation(err, hv.component, hv.violation);
  }
  return violations.empty();
}

int cmd_abstract(const std::string& input, const std::string& out_path,
                 const std::string& witness_path, bool stats, std::ostream& out,
                 std::ostream& err) {
  Heap heap;
  if (!load_valid_heap(input, heap, err)) return kExitInputError;
  HeapAbstraction result = heap_abstract(heap);

  bool broken = false;
  for (std::size_t i = 0; i < heap.components.size(); ++i) {
    for (const Violation& v : verify_structure(heap.components[i], result.results[i])) {
      err << "internal: ";
      print_violation(err, i, v);
      broken = true;
    }
  }
  if (broken) return kExitInternal;

  if (stats) {
    for (std::size_t i = 0; i < heap.components.size(); ++i) {
      const Component& before = heap.components[i];
      const AbstractionResult& r = result.results[i];
      err << "component " << i << " " << to_string(before.layout()) << ": nodes "
          << before.nodes().size() << " -> " << r.output.nodes().size() << ", edges "
          << before.edges().size() << " -> " << r.output.edges().size() << ", merges "
          << r.merge_log.size() << " (bound " << r.merge_bound << ")\n";
    }
  }
  emit(serialize_heap(result.heap), out_path, out);
  if (!witness_path.empty()) {
    auto witnesses = result.witnesses();
    emit(serialize_witness_list(witnesses), witness_path, out);
  }

  // Merged DAG groups carry a self edge with no preimage, so their witness
  // cannot be onto; report it instead of hiding it.
  int status = kExitOk;
  for (std::size_t i = 0; i < heap.components.size(); ++i) {
    const AbstractionResult& r = result.results[i];
    for (const Violation& v : check_valid_abstraction(heap.components[i], r.output,
                                                      r.witness)) {
      err << "witness: ";
      print_violation(err, i, v);
      status = kExitCheckFailed;
    }
  }
  return status;
}

int cmd_classify(const std::string& input, std::ostream& out, std::ostream& err) {
  Heap heap;
  if (!load_valid_heap(input, heap, err)) return kExitInputError;
  for (std::size_t i = 0; i < heap.components.size(); ++i) {
    for (const auto& [node, cls] : classify(heap.components[i])) {
      out << i << " " << node.str() << (cls.special() ? " special" : " ordinary");
      for (NodeReason reason : cls.reasons()) out << " " << to_string(reason);
      out << "\n";
    }
  }
  return kExitOk;
}

bool same_shape(const Heap& source, const Heap& target, std::ostream& err) {
  if (source.components.size() == target.components.size()) return true;
  err << "source has " << source.components.size() << " components, target has "
      << target.components.size() << "\n";
  return false;
}

int cmd_check_witness(const std::string& source_path, const std::string& target_path,
                      const std::string& witness_path, std::ostream& out,
                      std::ostream& err) {
  Heap source, target;
  if (!load_valid_heap(source_path, source, err)) return kExitInputError;
  if (!load_valid_heap(target_path, target, err)) return kExitInputError;
  auto witnesses = parse_witness_list(read_file(witness_path));
  if (!same_shape(source, target, err)) return kExitCheckFailed;
  if (witnesses.size() != source.components.size()) {
    err << "expected " << source.components.size() << " witnesses, got "
        << witnesses.size() << "\n";
    return kExitCheckFailed;
  }
  bool ok = true;
  for (std::size_t i = 0; i < source.components.size(); ++i) {
    auto violations =
        check_valid_abstraction(source.components[i], target.components[i], witnesses[i]);
    if (violations.empty()) {
      out << "component " << i << ": valid\n";
    }
    for (const Violation& v : violations) print_violation(out, i, v);
    ok = ok && violations.empty();
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_check_valid(const std::string& source_path, const std::string& target_path,
                    std::size_t budget, std::ostream& out, std::ostream& err) {
  Heap source, target;
  if (!load_valid_heap(source_path, source, err)) return kExitInputError;
  if (!load_valid_heap(target_path, target, err)) return kExitInputError;
  if (!same_shape(source, target, err)) return kExitCheckFailed;
  bool ok = true;
  for (std::size_t i = 0; i < source.components.size(); ++i) {
    auto w = find_witness_bruteforce(source.components[i], target.components[i], budget);
    out << "component " << i << (w ? ": witness found\n" : ": no witness\n");
    ok = ok && w.has_value();
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_validate(const std::string& input, std::ostream& out, std::ostream& err) {
  Heap heap;
  if (!load_valid_heap(input, heap, err)) return kExitInputError;
  for (std::size_t i = 0; i < heap.components.size(); ++i) {
    out << "component " << i << " " << to_string(heap.components[i].layout()) << ": ok\n";
  }
  return kExitOk;
}

int cmd_export_dot(const std::string& input, const std::string& out_path,
                   std::ostream& out, std::ostream& err) {
  Heap heap;
  if (!load_valid_heap(input, heap, err)) return kExitInputError;
  emit(export_dot(heap), out_path, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heap abstraction for SLL, tree, cycle and DAG components", "heapabs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string input, source, target, witness_file, out_path, witness_out;
  bool stats = false;
  std::size_t budget = kDefaultNodeBudget;
  std::function<int()> action;

  auto* abs = app.add_subcommand("abstract", "Abstract every component of a heap");
  abs->add_option("heap", input, "Heap file")->required();
  abs->add_option("--out", out_path, "Write the abstract heap here instead of stdout");
  abs->add_option("--witness", witness_out, "Write the witness list here");
  abs->add_flag("--stats", stats, "Print per-component counts to stderr");
  abs->callback([&] {
    action = [&] { return cmd_abstract(input, out_path, witness_out, stats, out, err); };
  });

  auto* cls = app.add_subcommand("classify", "Print each node's class and reasons");
  cls->add_option("heap", input, "Heap file")->required();
  cls->callback([&] { action = [&] { return cmd_classify(input, out, err); }; });

  auto* cw = app.add_subcommand("check-witness", "Check a witness list between two heaps");
  cw->add_option("source", source, "Source heap")->required();
  cw->add_option("target", target, "Target heap")->required();
  cw->add_option("witness", witness_file, "Witness list file")->required();
  cw->callback([&] {
    action = [&] { return cmd_check_witness(source, target, witness_file, out, err); };
  });

  auto* cv = app.add_subcommand("check-valid", "Search for a witness by brute force");
  cv->add_option("source", source, "Source heap")->required();
  cv->add_option("target", target, "Target heap")->required();
  cv->add_option("--budget", budget, "Largest source component searched")
      ->capture_default_str();
  cv->callback([&] {
    action = [&] { return cmd_check_valid(source, target, budget, out, err); };
  });

  auto* val = app.add_subcommand("validate", "Validate every component of a heap");
  val->add_option("heap", input, "Heap file")->required();
  val->callback([&] { action = [&] { return cmd_validate(input, out, err); }; });

  auto* dot = app.add_subcommand("export-dot", "Render a heap as Graphviz DOT");
  dot->add_option("heap", input, "Heap file")->required();
  dot->add_option("--out", out_path, "Write here instead of stdout");
  dot->callback([&] { action = [&] { return cmd_export_dot(input, out_path, out, err); }; });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return action();
  } catch (const FileFailure& e) {
    err << "heapabs: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "heapabs: " << e.what() << "\n";
    return e.category() == ErrorCategory::kInternal ? kExitInternal : kExitInputError;
  } catch (const std::exception& e) {
    err << "heapabs: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace heapabs::cli
