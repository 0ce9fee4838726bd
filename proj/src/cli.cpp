#include "hh/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hh/enumerator.hpp"
#include "hh/io.hpp"

namespace hh::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Digraph load(std::string const& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return parse_digraph(text);
  } catch (ParseError const& e) {
    throw UsageError(path + ":" + e.what());
  } catch (std::exception const& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(std::string const& text, std::string const& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + out_path + "'");
  file << text;
}

int parse_int(std::string const& s, char const* what) {
  try {
    std::size_t used = 0;
    int const v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (std::exception const&) {
    throw UsageError(std::string("invalid ") + what + " '" + s + "'");
  }
}

Digraph generate(std::string const& family, std::vector<std::string> const& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw UsageError("family '" + family + "' takes " + std::to_string(count) + " parameter(s)");
  };
  try {
    if (family == "kKn") {
      need(2);
      return k_copies(parse_int(params[0], "k"), make_complete(parse_int(params[1], "n")));
    }
    if (family == "kC3") {
      need(1);
      return k_copies(parse_int(params[0], "k"), make_cycle(3));
    }
    if (family == "Cn") {
      need(1);
      return make_cycle(parse_int(params[0], "n"));
    }
    if (family == "one-loop") {
      need(0);
      return make_loop_vertex();
    }
  } catch (std::invalid_argument const& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family '" + family + "' (expected kKn, kC3, Cn or one-loop)");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide and classify homomorphism-homogeneous digraphs", "hhcheck"};
  app.require_subcommand(1);

  std::string input;
  auto* check = app.add_subcommand("check", "Decide homomorphism-homogeneity; print the verdict");
  check->add_option("file", input, "Digraph file ('-' for stdin)")->required();
  auto* classify = app.add_subcommand("classify", "Closed-form family of an irreflexive digraph");
  classify->add_option("file", input, "Digraph file ('-' for stdin)")->required();
  auto* witness = app.add_subcommand("witness", "Print a non-extendable homomorphism, or 'hh'");
  witness->add_option("file", input, "Digraph file ('-' for stdin)")->required();

  int enum_n = 0;
  bool irreflexive = false;
  std::string kind;
  std::string out_path;
  auto* enumerate = app.add_subcommand("enumerate", "List digraphs up to isomorphism");
  enumerate->add_option("--n", enum_n, "Vertex count")->required();
  enumerate->add_flag("--irreflexive", irreflexive, "Only digraphs without loops");
  enumerate->add_option("--kind", kind, "Restrict to one shape")
      ->check(CLI::IsMember({"graph", "proper", "improper"}));
  enumerate->add_option("--out", out_path, "Write the stream to this file");

  int max_n = 0;
  bool allow_n6 = false;
  auto* verify = app.add_subcommand("verify", "Exhaustive census: brute force vs closed form");
  verify->add_option("--max-n", max_n, "Largest vertex count")->required();
  verify->add_flag("--allow-n6", allow_n6, "Permit --max-n 6 (long run, progress on stderr)");
  verify->add_option("--out", out_path, "Write the JSON report here; print the table instead");

  std::string family;
  std::vector<std::string> params;
  auto* gen = app.add_subcommand("gen", "Write a member of a standard family");
  gen->add_option("family", family, "kKn | kC3 | Cn | one-loop")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--out", out_path, "Write the digraph to this file");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (CLI::CallForHelp const& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (check->parsed()) {
      Verdict const v = is_hh(load(input));
      out << to_json(v).dump() << '\n';
      return v.hh ? kOk : kNegative;
    }
    if (classify->parsed()) {
      Family const f = classify_hh_irreflexive(load(input));
      out << to_json(f).dump() << '\n';
      return f.is_hh() ? kOk : kNegative;
    }
    if (witness->parsed()) {
      Verdict const v = is_hh(load(input));
      if (v.hh) {
        out << "hh\n";
        return kOk;
      }
      out << to_json(*v.witness).dump() << '\n';
      return kNegative;
    }
    if (enumerate->parsed()) {
      EnumFilter filter;
      filter.irreflexive_only = irreflexive;
      if (kind == "graph") filter.shape = Shape::graph;
      if (kind == "proper") filter.shape = Shape::proper;
      if (kind == "improper") filter.shape = Shape::improper;
      std::vector<Digraph> ds;
      try {
        ds = enumerate_digraphs(enum_n, filter);
      } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
      }
      emit(write_digraph_stream(ds), out_path, out);
      return kOk;
    }
    if (verify->parsed()) {
      if (max_n < 1 || max_n > kMaxEnumerationVertices)
        throw UsageError("--max-n must lie in 1.." + std::to_string(kMaxEnumerationVertices));
      if (max_n == kMaxEnumerationVertices && !allow_n6)
        throw UsageError("--max-n 6 takes a long time; pass --allow-n6 to run it");
      CensusOptions options;
      std::mutex progress_lock;
      std::size_t last_reported = 0;
      if (max_n == kMaxEnumerationVertices) {
        options.progress = [&](int n, std::size_t done, std::size_t total) {
          std::lock_guard lock(progress_lock);
          if (done == total || done >= last_reported + 50000 || done < last_reported) {
            last_reported = done;
            err << "progress n=" << n << " " << done << "/" << total << '\n';
          }
        };
      }
      CensusReport const report = verify_corollary(max_n, options);
      if (out_path.empty()) {
        out << to_json(report).dump(2) << '\n';
      } else {
        emit(to_json(report).dump(2) + "\n", out_path, out);
        out << summary_table(report);
      }
      bool clean = report.disagreement_count() == 0;
      for (auto const& row : report.rows) clean = clean && row.bad_witnesses == 0;
      return clean ? kOk : kNegative;
    }
    if (gen->parsed()) {
      emit(write_digraph(generate(family, params)), out_path, out);
      return kOk;
    }
  } catch (UsageError const& e) {
    err << "hhcheck: " << e.what() << '\n';
    return kUsage;
  } catch (ScopeError const& e) {
    err << "hhcheck: scope error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hh::cli
