// triplehom: invariants, trace checking, search and rewriting from the shell.
//
// Exit codes: 0 ok or pass, 1 a check ran and failed, 2 bad input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "triplehom/error.hpp"
#include "triplehom/gauss.hpp"
#include "triplehom/homotopy.hpp"
#include "triplehom/invariants.hpp"
#include "triplehom/render.hpp"
#include "triplehom/search.hpp"

using namespace triplehom;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

// An argument is a file if one exists at that path, "-" is stdin, anything
// else is inline text.
std::string read_source(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot read " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

bool looks_like_trace(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    return line.compare(p, 4, "init") == 0;
  }
  return false;
}

GaussDiagram load_diagram(const std::string& arg, int base) {
  GaussDiagram d = parse_gauss_code(read_source(arg));
  return base >= 0 ? d.with_base(base) : d;
}

Trace load_trace(const std::string& arg) { return parse_trace(read_source(arg)); }

void write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::r1: return "R1";
    case MoveKind::r2: return "R2";
    case MoveKind::r3: return "R3";
    case MoveKind::triple_braid: return "T3 braid";
    case MoveKind::triple_star: return "T3 star";
  }
  return "?";
}

struct Common {
  int max_crossings = 6;
  int max_depth = 6;
  long node_budget = 200000;
  int base = -1;
  std::string format = "text";
  bool quiet = false;
};

int cmd_invariants(const std::string& input, const Common& c) {
  GaussDiagram d = load_diagram(input, c.base);
  const int w = writhe(d), v = v2(d), o = v2_oracle(d);
  if (!c.quiet) {
    std::cout << "code: " << (d.crossing_count() == 0 ? "(unknot)" : serialize(d)) << '\n';
    std::cout << "crossings: " << d.crossing_count() << "\nv2 oracle: " << o << '\n';
  }
  std::cout << "writhe=" << w << " v2=" << v << " arf=" << arf(d) << " oracle_agrees=" << (v == o ? "true" : "false")
            << '\n';
  return v == o ? kOk : kFailed;
}

int cmd_check(const std::string& input, const Common& c) {
  Trace t = load_trace(input);
  auto steps = validate(t);
  const int index = trace_index(t);
  const bool regular = is_regular(t), closed = is_closed(t);
  bool has_star = false;
  for (const MoveEvent& e : t.events) has_star = has_star || e.kind == MoveKind::triple_star;

  int status = kOk;
  std::ostringstream summary;
  summary << "events=" << t.events.size() << " index=" << index << " regular=" << (regular ? "true" : "false")
          << " closed=" << (closed ? "true" : "false");
  if (has_star) {
    if (!c.quiet)
      std::cout << "star-like moves present; W is defined for braid-like moves only (try: rewrite --star-to-braid)\n";
    summary << " theorem2=skipped";
  } else {
    Theorem2Report r = check_theorem2(t);
    if (!c.quiet) {
      std::cout << "step  kind      ind  W\n";
      for (const EventCheck& e : r.events) {
        std::string k = kind_name(e.kind);
        k.resize(9, ' ');
        std::cout << (e.step < 10 ? "   " : e.step < 100 ? "  " : " ") << e.step << "  " << k << ' '
                  << (e.index < 0 ? "" : " ") << e.index << "  " << e.w << '\n';
      }
    }
    summary << " w_total=" << r.w_total << " dv2=" << (r.v2_end - r.v2_start) << " theorem2=" << (r.pass ? "pass" : "fail");
    if (!r.pass) status = kFailed;
  }
  if (closed && regular && index != 0) {
    summary << " loop_index=fail";
    status = kFailed;
  }
  std::cout << summary.str() << '\n';
  return status;
}

int cmd_search(const std::string& from, const std::string& to, bool indices, bool braid_only, const std::string& out,
               const Common& c) {
  SearchBounds b;
  b.max_crossings = c.max_crossings;
  b.max_depth = c.max_depth;
  b.node_budget = c.node_budget;
  b.braid_only = braid_only;
  GaussDiagram start = load_diagram(from, c.base);
  if (indices) {
    UnknottingResult r = unknotting_indices(start, b);
    std::cout << "indices=";
    bool first = true;
    for (int i : r.indices) {
      std::cout << (first ? "" : ",") << i;
      first = false;
    }
    if (r.indices.empty()) std::cout << "none";
    std::cout << " exhausted=" << (r.exhausted ? "true" : "false") << '\n';
    if (!c.quiet)
      for (const Trace& w : r.witnesses) std::cout << "# index " << trace_index(w) << '\n' << serialize_trace(w);
    return r.indices.empty() ? kFailed : kOk;
  }
  GaussDiagram goal = to.empty() ? GaussDiagram() : parse_gauss_code(read_source(to));
  SearchResult r = find_triple_homotopy(start, goal, b);
  if (r.status != SearchStatus::found) {
    std::cout << (r.status == SearchStatus::budget_exhausted ? "not found: node budget exhausted"
                                                             : "not found within bounds")
              << " (" << r.nodes << " nodes)\n";
    return kFailed;
  }
  if (!c.quiet) std::cerr << "found: " << r.trace->events.size() << " events, index " << trace_index(*r.trace) << ", "
                          << r.nodes << " nodes\n";
  write_out(serialize_trace(*r.trace), out);
  return kOk;
}

struct RewriteArgs {
  bool star_to_braid = false;
  bool reverse = false;
  int commute = -1;
  std::string then;
  std::string sum_with;
  std::string out;
};

int cmd_rewrite(const std::string& input, const RewriteArgs& a, const Common& c) {
  Trace t = load_trace(input);
  const int before = trace_index(t);
  int chosen = int(a.star_to_braid) + int(a.reverse) + int(a.commute >= 0) + int(!a.then.empty()) +
               int(!a.sum_with.empty());
  if (chosen != 1) throw ParseError("rewrite needs exactly one of --star-to-braid, --reverse, --commute, --then, --sum-with");
  if (a.star_to_braid) t = star_to_braid(t);
  if (a.reverse) t = reverse(t);
  if (a.commute >= 0) t = commute_disjoint(t, a.commute);
  if (!a.then.empty()) t = compose(t, load_trace(a.then));
  if (!a.sum_with.empty()) t = connect_sum_trace(t, parse_gauss_code(read_source(a.sum_with)));
  if (!c.quiet) std::cerr << "index " << before << " -> " << trace_index(t) << ", " << t.events.size() << " events\n";
  write_out(serialize_trace(t), a.out);
  return kOk;
}

RenderFormat parse_format(const std::string& f) {
  if (f == "text") return RenderFormat::text;
  if (f == "svg") return RenderFormat::svg;
  throw ParseError("unknown format " + f + " (text or svg)");
}

int cmd_render(const std::string& input, const std::string& out, const Common& c) {
  const RenderFormat f = parse_format(c.format);
  const std::string text = read_source(input);
  if (looks_like_trace(text)) {
    write_out(render_trace(parse_trace(text), f), out);
  } else {
    GaussDiagram d = parse_gauss_code(text);
    write_out(render_diagram(c.base >= 0 ? d.with_base(c.base) : d, f), out);
  }
  return kOk;
}

int cmd_sum(const std::string& a, const std::string& b, const Common& c) {
  GaussDiagram s = connected_sum(load_diagram(a, c.base), parse_gauss_code(read_source(b)));
  std::cout << serialize(s) << '\n';
  if (!c.quiet) std::cerr << "writhe " << writhe(s) << ", v2 " << v2(s) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss diagrams, v2 and triple homotopies"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--max-crossings", c.max_crossings, "crossing cap during search")->check(CLI::PositiveNumber);
    s->add_option("--max-depth", c.max_depth, "event cap during search")->check(CLI::PositiveNumber);
    s->add_option("--node-budget", c.node_budget, "states explored before giving up")->check(CLI::PositiveNumber);
    s->add_option("--base", c.base, "base point gap of the input diagram")->check(CLI::NonNegativeNumber);
    s->add_option("--format", c.format, "text or svg")->check(CLI::IsMember({"text", "svg"}));
    s->add_flag("--quiet", c.quiet, "machine-readable lines only");
  };

  std::string input, second, out;
  bool indices = false, braid_only = false;
  RewriteArgs rw;

  auto* inv = app.add_subcommand("invariants", "writhe, v2 (two ways) and arf of a GC code or file");
  inv->add_option("code", input, "GC code, file, or - for stdin")->default_val("-");
  auto* check = app.add_subcommand("check", "validate a trace and check W = v2(end) - v2(start)");
  check->add_option("trace", input, "trace file")->required();
  auto* search = app.add_subcommand("search", "breadth-first search for a triple homotopy");
  search->add_option("start", input, "start diagram")->required();
  search->add_option("goal", second, "goal diagram (default: unknot)");
  search->add_flag("--indices", indices, "report the indices of all unknottings found");
  search->add_flag("--braid-only", braid_only, "no star-like triple moves");
  search->add_option("-o,--output", out, "write the trace here");
  auto* rewrite = app.add_subcommand("rewrite", "index-preserving trace rewrites");
  rewrite->add_option("trace", input, "trace file")->required();
  rewrite->add_flag("--star-to-braid", rw.star_to_braid, "replace star-like moves by R2, braid-like, R2");
  rewrite->add_flag("--reverse", rw.reverse, "run the trace backwards");
  rewrite->add_option("--commute", rw.commute, "swap events k and k+1");
  rewrite->add_option("--then", rw.then, "append a second trace");
  rewrite->add_option("--sum-with", rw.sum_with, "connected sum of every step with a knot");
  rewrite->add_option("-o,--output", rw.out, "write the trace here");
  auto* render = app.add_subcommand("render", "draw a diagram or every frame of a trace");
  render->add_option("input", input, "GC code, diagram file or trace file")->required();
  render->add_option("-o,--output", out, "write here");
  auto* sum = app.add_subcommand("sum", "connected sum of two knots, spliced at the first one's base point");
  sum->add_option("first", input, "GC code or file")->required();
  sum->add_option("second", second, "GC code or file")->required();
  for (auto* s : {inv, check, search, rewrite, render, sum}) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*inv) return cmd_invariants(input, c);
    if (*check) return cmd_check(input, c);
    if (*search) return cmd_search(input, second, indices, braid_only, out, c);
    if (*rewrite) return cmd_rewrite(input, rw, c);
    if (*render) return cmd_render(input, out, c);
    if (*sum) return cmd_sum(input, second, c);
  } catch (const ValidationError& e) {
    std::cerr << "invalid trace at step " << e.step() << ": " << e.reason() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
