#include "cli.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "markseq/construction.hpp"
#include "markseq/decomposition.hpp"
#include "markseq/digraph.hpp"
#include "markseq/errors.hpp"
#include "markseq/io.hpp"
#include "markseq/oracle.hpp"
#include "markseq/realizability.hpp"
#include "markseq/transform.hpp"

namespace markseq::cli {
namespace {

using nlohmann::json;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string slurp(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

std::string slurp_file(const std::string& path, std::istream& in) {
  if (path == "-") return slurp(in);
  std::ifstream file(path);
  if (!file) {
    throw ValidationError(ValidationKind::BadDimensions, "cannot open file: " + path);
  }
  return slurp(file);
}

/// Entries come either inline (possibly split across several shell words) or
/// from --input. A sort notice goes to err so piped stdout stays clean.
MarkSequence read_sequence(const std::vector<std::string>& inline_entries,
                           const std::string& input_file, int k, Streams& io) {
  std::string text;
  if (!input_file.empty()) {
    if (!inline_entries.empty()) {
      throw ValidationError(ValidationKind::BadDimensions,
                            "sequence entries given both inline and via --input");
    }
    text = slurp_file(input_file, io.in);
  } else {
    for (const auto& word : inline_entries) {
      text += word;
      text += ' ';
    }
  }
  MarkSequence seq = parse_sequence(text, k);
  if (seq.input_reordered()) {
    io.err << "note: entries were reordered into non-decreasing order\n";
  }
  return seq;
}

KDigraph read_digraph(const std::string& source, Streams& io) {
  if (source == "-" || source.empty()) return digraph_from_text(slurp(io.in));
  return load_digraph(source);
}

void write_digraph(const KDigraph& d, const std::string& format, std::ostream& out) {
  if (format == "dot") {
    out << digraph_to_dot(d);
  } else if (format == "matrix") {
    out << digraph_to_matrix_text(d);
  } else {
    out << digraph_to_json(d) << '\n';
  }
}

std::string joined(const std::vector<int>& values, const char* sep) {
  std::string s;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

struct SequenceOpts {
  std::vector<std::string> entries;
  std::string input;
  int k = 0;
};

struct CheckOpts : SequenceOpts {
  bool tournament = false;
  bool oriented = false;
  bool verify = false;
  bool json_out = false;
  int jobs = 1;
};

struct RealizeOpts : SequenceOpts {
  std::string method = "flow";
  std::string format = "json";
  bool strict = false;
  bool verify = false;
};

struct DigraphOpts {
  std::string source = "-";
  std::string format = "json";
  bool trace = false;
  bool verify = false;
  bool json_out = false;
};

struct DecomposeOpts : SequenceOpts {
  std::string digraph_file;
  bool verify = false;
  bool json_out = false;
};

struct UniqueOpts : SequenceOpts {
  bool verify = false;
  bool json_out = false;
  int jobs = 1;
};

struct OracleSetOpts {
  int n = 0;
  int k = 0;
  int jobs = 1;
  bool json_out = false;
};

struct OracleSeqOpts : SequenceOpts {
  int jobs = 1;
  bool json_out = false;
};

json report_json(const RealizabilityReport& rep, const MarkSequence& seq) {
  json j{{"realizable", rep.realizable},
         {"k", seq.k()},
         {"entries", seq.entries()},
         {"prefix_sums", rep.prefix_sums},
         {"bounds", rep.bound_values},
         {"equality_points", rep.equality_points}};
  j["failing_prefix"] = rep.failing_prefix ? json(*rep.failing_prefix) : json(nullptr);
  j["reason"] = rep.failure_reason ? json(*rep.failure_reason) : json(nullptr);
  return j;
}

void print_report(const RealizabilityReport& rep, std::ostream& out) {
  if (rep.realizable) {
    out << "realizable; equality points:";
    for (int t : rep.equality_points) out << ' ' << t;
    out << '\n';
  } else {
    out << "not realizable: " << *rep.failure_reason << " (t=" << *rep.failing_prefix
        << ")\n";
  }
}

int run_check(const CheckOpts& o, Streams& io) {
  MarkSequence seq = read_sequence(o.entries, o.input, o.k, io);
  if (o.tournament) {
    TournamentReport rep = check_tournament_marks(seq);
    if (o.json_out) {
      json j{{"is_tournament_sequence", rep.is_tournament_sequence}};
      j["scores"] = rep.scores ? json(*rep.scores) : json(nullptr);
      j["failure"] = rep.failure_reason ? json(to_string(*rep.failure_reason)) : json(nullptr);
      io.out << j.dump() << '\n';
    } else if (rep.is_tournament_sequence) {
      io.out << "tournament marks; scores:";
      for (int s : *rep.scores) io.out << ' ' << s;
      io.out << '\n';
    } else {
      io.out << "not tournament marks: " << to_string(*rep.failure_reason) << '\n';
    }
    return rep.is_tournament_sequence ? 0 : 1;
  }
  RealizabilityReport rep = o.oriented ? check_oriented_marks(seq) : check_realizable(seq);
  if (o.verify) {
    try {
      bool brute = true;
      try {
        oracle::min_arc_count_bruteforce(seq, o.jobs);
      } catch (const NotRealizableError&) {
        brute = false;
      }
      if (brute != rep.realizable) {
        io.err << "verify failed: exhaustive search says "
               << (brute ? "realizable" : "not realizable")
               << " but the prefix test disagrees\n";
        return 3;
      }
      io.err << "verify ok: exhaustive search agrees\n";
    } catch (const TooLargeError& e) {
      io.err << "verify skipped: " << e.what() << '\n';
    }
  }
  if (o.json_out) {
    io.out << report_json(rep, seq).dump() << '\n';
  } else {
    print_report(rep, io.out);
  }
  return rep.realizable ? 0 : 1;
}

int run_realize(const RealizeOpts& o, Streams& io) {
  MarkSequence seq = read_sequence(o.entries, o.input, o.k, io);
  std::optional<KDigraph> d;
  if (o.method == "flow") {
    d = realize_flow(seq);
  } else {
    HhVariant variant = o.method == "hh24" ? HhVariant::OnesFirst : HhVariant::TwosFirst;
    try {
      d = realize_hh(seq, variant, o.verify);
    } catch (const IllDefinedStepError& e) {
      if (o.strict) {
        io.err << "ill-defined reduction step: " << e.what() << '\n';
        return 2;
      }
      io.err << "notice: reduction step ill-defined (" << e.what()
             << "); falling back to flow\n";
      d = realize_flow(seq);
    }
  }
  if (o.verify) {
    if (!(compute_marks(*d) == seq)) {
      io.err << "verify failed: constructed digraph has different marks\n";
      return 3;
    }
    io.err << "verify ok: marks match\n";
  }
  write_digraph(*d, o.format, io.out);
  return 0;
}

int run_minimize(const DigraphOpts& o, Streams& io) {
  KDigraph d = read_digraph(o.source, io);
  MinimizeResult res = minimize_arcs(d);
  if (o.trace) {
    for (const auto& move : res.trace) io.err << to_string(move) << '\n';
  }
  if (o.verify) {
    if (!(compute_marks(res.digraph) == compute_marks(d))) {
      io.err << "verify failed: minimization changed the marks\n";
      return 3;
    }
    for (const auto& move : enumerate_moves(res.digraph)) {
      if (move.direction == MoveDirection::Reduce) {
        io.err << "verify failed: reducing move still applies: " << to_string(move) << '\n';
        return 3;
      }
    }
    io.err << "verify ok: marks preserved, no reducing move applies\n";
  }
  write_digraph(res.digraph, o.format, io.out);
  return 0;
}

int run_marks(const DigraphOpts& o, Streams& io) {
  KDigraph d = read_digraph(o.source, io);
  MarkSequence m = compute_marks(d);
  if (o.json_out) {
    io.out << json{{"n", m.n()}, {"k", m.k()}, {"marks", m.entries()}}.dump() << '\n';
  } else {
    io.out << joined(m.entries(), " ") << '\n';
  }
  return 0;
}

int verify_sequence_decomposition(const Decomposition& dec, const MarkSequence& seq,
                                  Streams& io) {
  if (!(dec.reassembled() == seq)) {
    io.err << "verify failed: reassembling the components does not recover the input\n";
    return 3;
  }
  for (const auto& comp : dec.components) {
    if (!is_irreducible_sequence(MarkSequence(comp.entries, dec.k))) {
      io.err << "verify failed: component [" << joined(comp.entries, ",")
             << "] is further decomposable\n";
      return 3;
    }
  }
  io.err << "verify ok: reassembly and irreducibility hold\n";
  return 0;
}

int run_decompose_digraph(const DecomposeOpts& o, Streams& io) {
  KDigraph d = read_digraph(o.digraph_file, io);
  DigraphDecomposition dec = decompose_digraph(d);
  std::vector<std::vector<int>> comp_marks;
  for (const auto& comp : dec.components) {
    comp_marks.push_back(compute_marks(comp.digraph).entries());
  }
  if (o.verify) {
    Decomposition sdec = decompose_sequence(compute_marks(d));
    if (sdec.components.size() != dec.components.size()) {
      io.err << "verify failed: sequence and digraph splits have different sizes\n";
      return 3;
    }
    for (size_t c = 0; c < dec.components.size(); ++c) {
      if (comp_marks[c] != sdec.components[c].entries) {
        io.err << "verify failed: component " << c
               << " marks do not match the sequence split\n";
        return 3;
      }
      bool irreducible = false;
      try {
        irreducible = is_irreducible_digraph_exhaustive(dec.components[c].digraph);
      } catch (const TooLargeError&) {
        io.err << "verify note: component " << c
               << " too large for subset enumeration, using the prefix test\n";
        irreducible = is_irreducible_digraph(dec.components[c].digraph);
      }
      if (!irreducible) {
        io.err << "verify failed: component " << c << " admits a further split\n";
        return 3;
      }
    }
    // Cross arcs must be forced: k from every later-component vertex to every
    // earlier-component vertex, none back.
    for (size_t hi = 1; hi < dec.components.size(); ++hi) {
      for (size_t lo = 0; lo < hi; ++lo) {
        for (int v : dec.components[hi].vertices) {
          for (int u : dec.components[lo].vertices) {
            if (d.multiplicity(v, u) != d.k() || d.multiplicity(u, v) != 0) {
              io.err << "verify failed: arcs between components " << lo << " and " << hi
                     << " are not forced\n";
              return 3;
            }
          }
        }
      }
    }
    io.err << "verify ok: splits agree, components irreducible, cross arcs forced\n";
  }
  if (o.json_out) {
    json comps = json::array();
    int at = 1;
    for (size_t c = 0; c < dec.components.size(); ++c) {
      int size = static_cast<int>(dec.components[c].vertices.size());
      comps.push_back(json{{"range", {at, at + size - 1}},
                           {"offset", at - 1},
                           {"vertices", dec.components[c].vertices},
                           {"entries", comp_marks[c]}});
      at += size;
    }
    io.out << json{{"k", dec.k}, {"components", comps}}.dump() << '\n';
  } else {
    int at = 1;
    for (size_t c = 0; c < dec.components.size(); ++c) {
      int size = static_cast<int>(dec.components[c].vertices.size());
      io.out << "range=[" << at << ".." << at + size - 1 << "] offset=" << at - 1
             << " vertices=[" << joined(dec.components[c].vertices, ",") << "] sequence=["
             << joined(comp_marks[c], ",") << "]\n";
      at += size;
    }
  }
  return 0;
}

int run_decompose(const DecomposeOpts& o, Streams& io) {
  if (!o.digraph_file.empty()) return run_decompose_digraph(o, io);
  if (o.k <= 0) {
    throw ValidationError(ValidationKind::BadK, "-k is required when decomposing a sequence");
  }
  MarkSequence seq = read_sequence(o.entries, o.input, o.k, io);
  Decomposition dec = decompose_sequence(seq);
  if (o.verify) {
    if (int code = verify_sequence_decomposition(dec, seq, io)) return code;
  }
  if (o.json_out) {
    json comps = json::array();
    for (const auto& comp : dec.components) {
      comps.push_back(json{{"range", {comp.first, comp.last}},
                           {"offset", comp.offset},
                           {"entries", comp.entries}});
    }
    io.out << json{{"k", dec.k}, {"components", comps}}.dump() << '\n';
  } else {
    for (const auto& comp : dec.components) {
      io.out << "range=[" << comp.first << ".." << comp.last << "] offset=" << comp.offset
             << " sequence=[" << joined(comp.entries, ",") << "]\n";
    }
  }
  return 0;
}

int run_unique(const UniqueOpts& o, Streams& io) {
  MarkSequence seq = read_sequence(o.entries, o.input, o.k, io);
  UniqueReport rep = is_uniquely_realizable(seq);
  if (o.verify) {
    try {
      oracle::RealizationCount rc = oracle::count_realizations(seq, o.jobs);
      if ((rc.iso_classes == 1) != rep.unique) {
        io.err << "verify failed: exhaustive count finds " << rc.iso_classes
               << " classes up to relabeling\n";
        return 3;
      }
      io.err << "verify ok: exhaustive count agrees\n";
    } catch (const TooLargeError& e) {
      io.err << "verify skipped: " << e.what() << '\n';
    }
  }
  if (o.json_out) {
    json comps = json::array();
    for (const auto& comp : rep.decomposition.components) {
      comps.push_back(json{{"range", {comp.first, comp.last}},
                           {"offset", comp.offset},
                           {"entries", comp.entries}});
    }
    json j{{"unique", rep.unique}, {"components", comps}};
    j["witness_index"] =
        rep.witness_index ? json(static_cast<long long>(*rep.witness_index)) : json(nullptr);
    io.out << j.dump() << '\n';
  } else if (rep.unique) {
    io.out << "uniquely realizable\n";
  } else {
    const auto& witness = rep.decomposition.components[*rep.witness_index];
    io.out << "not uniquely realizable; witness component: ["
           << joined(witness.entries, ",") << "]\n";
  }
  return rep.unique ? 0 : 1;
}

int run_oracle_sequences(const OracleSetOpts& o, Streams& io) {
  std::set<MarkSequence> sequences = oracle::realizable_set_bruteforce(o.n, o.k, o.jobs);
  if (o.json_out) {
    json list = json::array();
    for (const auto& seq : sequences) list.push_back(seq.entries());
    io.out << json{{"n", o.n},
                   {"k", o.k},
                   {"count", static_cast<long long>(sequences.size())},
                   {"sequences", list}}
                  .dump()
           << '\n';
  } else {
    for (const auto& seq : sequences) io.out << joined(seq.entries(), " ") << '\n';
  }
  return 0;
}

int run_oracle_count(const OracleSeqOpts& o, Streams& io) {
  MarkSequence seq = read_sequence(o.entries, o.input, o.k, io);
  oracle::RealizationCount rc = oracle::count_realizations(seq, o.jobs);
  if (o.json_out) {
    io.out << json{{"labeled", rc.labeled}, {"iso_classes", rc.iso_classes}}.dump() << '\n';
  } else {
    io.out << "labeled=" << rc.labeled << " iso_classes=" << rc.iso_classes << '\n';
  }
  return 0;
}

int run_oracle_minarcs(const OracleSeqOpts& o, Streams& io) {
  MarkSequence seq = read_sequence(o.entries, o.input, o.k, io);
  long long fewest = oracle::min_arc_count_bruteforce(seq, o.jobs);
  if (o.json_out) {
    io.out << json{{"min_arcs", fewest}}.dump() << '\n';
  } else {
    io.out << "min_arcs=" << fewest << '\n';
  }
  return 0;
}

int run_convert(const DigraphOpts& o, Streams& io) {
  write_digraph(read_digraph(o.source, io), o.format, io.out);
  return 0;
}

void add_sequence_options(CLI::App* cmd, SequenceOpts& o, bool k_required = true) {
  cmd->add_option("entries", o.entries, "sequence entries, comma or space separated");
  auto* k = cmd->add_option("-k", o.k, "arc bound per vertex pair");
  if (k_required) k->required();
  cmd->add_option("-i,--input", o.input, "read entries from FILE, one per line ('-' = stdin)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"mark sequence toolkit for k-digraphs"};
  app.name("markseq");
  app.require_subcommand(1);

  CheckOpts check_opts;
  auto* check = app.add_subcommand("check", "test whether a sequence is realizable");
  add_sequence_options(check, check_opts);
  auto* tflag =
      check->add_flag("--tournament", check_opts.tournament, "test for tournament marks");
  auto* oflag = check->add_flag("--oriented", check_opts.oriented,
                                "treat the sequence as oriented-graph marks (k must be 1)");
  tflag->excludes(oflag);
  check->add_flag("--verify", check_opts.verify, "cross-check against exhaustive enumeration");
  check->add_flag("--json", check_opts.json_out, "machine-readable output");
  check->add_option("--jobs", check_opts.jobs, "worker threads for exhaustive checks")
      ->capture_default_str();

  RealizeOpts realize_opts;
  auto* realize = app.add_subcommand("realize", "construct a digraph with the given marks");
  add_sequence_options(realize, realize_opts);
  realize->add_option("--method", realize_opts.method, "construction method")
      ->check(CLI::IsMember({"flow", "hh24", "hh25"}))
      ->capture_default_str();
  realize->add_flag("--strict", realize_opts.strict,
                    "fail instead of falling back to flow on an ill-defined reduction step");
  realize->add_flag("--verify", realize_opts.verify,
                    "re-check the result's marks (and each reduction level)");
  realize->add_option("--format", realize_opts.format, "output form")
      ->check(CLI::IsMember({"json", "dot", "matrix"}))
      ->capture_default_str();

  DigraphOpts minimize_opts;
  auto* minimize =
      app.add_subcommand("minimize", "reduce a digraph's arcs with mark-preserving moves");
  minimize->add_option("digraph", minimize_opts.source,
                       "digraph file, JSON or matrix text ('-' = stdin)")
      ->capture_default_str();
  minimize->add_flag("--trace", minimize_opts.trace, "list the applied moves on stderr");
  minimize->add_flag("--verify", minimize_opts.verify,
                     "re-check mark preservation and fixpointness");
  minimize->add_option("--format", minimize_opts.format, "output form")
      ->check(CLI::IsMember({"json", "dot", "matrix"}))
      ->capture_default_str();

  DigraphOpts marks_opts;
  auto* marks = app.add_subcommand("marks", "mark sequence of a digraph");
  marks->add_option("digraph", marks_opts.source,
                    "digraph file, JSON or matrix text ('-' = stdin)")
      ->capture_default_str();
  marks->add_flag("--json", marks_opts.json_out, "machine-readable output");

  DecomposeOpts decompose_opts;
  auto* decompose =
      app.add_subcommand("decompose", "split a sequence or digraph into irreducible parts");
  add_sequence_options(decompose, decompose_opts, /*k_required=*/false);
  decompose->add_option("--digraph", decompose_opts.digraph_file,
                        "decompose the digraph in FILE instead ('-' = stdin)");
  decompose->add_flag("--verify", decompose_opts.verify,
                      "re-check reassembly, irreducibility, and forced cross arcs");
  decompose->add_flag("--json", decompose_opts.json_out, "machine-readable output");

  UniqueOpts unique_opts;
  auto* unique =
      app.add_subcommand("unique", "test whether exactly one digraph has these marks");
  add_sequence_options(unique, unique_opts);
  unique->add_flag("--verify", unique_opts.verify, "cross-check by counting realizations");
  unique->add_flag("--json", unique_opts.json_out, "machine-readable output");
  unique->add_option("--jobs", unique_opts.jobs, "worker threads for exhaustive checks")
      ->capture_default_str();

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive enumeration tools");
  oracle_cmd->require_subcommand(1);

  OracleSetOpts oracle_set_opts;
  auto* oracle_sequences =
      oracle_cmd->add_subcommand("sequences", "every realizable sequence for given n and k");
  oracle_sequences->add_option("-n", oracle_set_opts.n, "vertex count")->required();
  oracle_sequences->add_option("-k", oracle_set_opts.k, "arc bound per vertex pair")
      ->required();
  oracle_sequences->add_option("--jobs", oracle_set_opts.jobs, "worker threads")
      ->capture_default_str();
  oracle_sequences->add_flag("--json", oracle_set_opts.json_out, "machine-readable output");

  OracleSeqOpts oracle_count_opts;
  auto* oracle_count =
      oracle_cmd->add_subcommand("count", "count the digraphs realizing a sequence");
  add_sequence_options(oracle_count, oracle_count_opts);
  oracle_count->add_option("--jobs", oracle_count_opts.jobs, "worker threads")
      ->capture_default_str();
  oracle_count->add_flag("--json", oracle_count_opts.json_out, "machine-readable output");

  OracleSeqOpts oracle_minarcs_opts;
  auto* oracle_minarcs =
      oracle_cmd->add_subcommand("minarcs", "fewest arcs over all realizations");
  add_sequence_options(oracle_minarcs, oracle_minarcs_opts);
  oracle_minarcs->add_option("--jobs", oracle_minarcs_opts.jobs, "worker threads")
      ->capture_default_str();
  oracle_minarcs->add_flag("--json", oracle_minarcs_opts.json_out, "machine-readable output");

  DigraphOpts convert_opts;
  auto* convert = app.add_subcommand("convert", "re-serialize a digraph");
  convert->add_option("digraph", convert_opts.source,
                      "digraph file, JSON or matrix text ('-' = stdin)")
      ->capture_default_str();
  convert->add_option("--format", convert_opts.format, "output form")
      ->check(CLI::IsMember({"json", "dot", "matrix"}))
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("markseq");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(check_opts, io);
    if (realize->parsed()) return run_realize(realize_opts, io);
    if (minimize->parsed()) return run_minimize(minimize_opts, io);
    if (marks->parsed()) return run_marks(marks_opts, io);
    if (decompose->parsed()) return run_decompose(decompose_opts, io);
    if (unique->parsed()) return run_unique(unique_opts, io);
    if (oracle_sequences->parsed()) return run_oracle_sequences(oracle_set_opts, io);
    if (oracle_count->parsed()) return run_oracle_count(oracle_count_opts, io);
    if (oracle_minarcs->parsed()) return run_oracle_minarcs(oracle_minarcs_opts, io);
    if (convert->parsed()) return run_convert(convert_opts, io);
  } catch (const ValidationError& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 2;
  } catch (const NotRealizableError& e) {
    err << "not realizable: " << e.what() << '\n';
    return 1;
  } catch (const NegativeEntryProducedError& e) {
    err << "not realizable: " << e.what() << '\n';
    return 1;
  } catch (const IllDefinedStepError& e) {
    err << "ill-defined reduction step: " << e.what() << '\n';
    return 2;
  } catch (const InapplicableMoveError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const TooLargeError& e) {
    err << "too large: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace markseq::cli
