#pragma once

// Command-line front end. Machine-readable lines carry a leading tag
// (#RESULT, #CERT, #PASS, #FAIL, #VIOLATION, #WITNESS, #NOTE); everything
// else is prose for humans. Timing goes to the error stream so that stdout
// is byte-identical across --jobs values.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "dmpsat/dmpsat.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace dmpsat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// `-` reads stdin, an existing path reads one graph6 per line, anything else is a graph6 literal.
inline auto read_graphs(const std::string & source, std::istream & in) -> std::vector<Graph> {
  if (source == "-")
    return read_graph6_stream(in);
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream file(source);
    if (!file)
      throw UsageError("cannot open " + source);
    return read_graph6_stream(file);
  }
  return {graph6_decode(source)};
}

inline auto parse_range(const std::string & text) -> std::pair<int, int> {
  const auto dots = text.find("..");
  auto whole = [](const std::string & part) {
    std::size_t used = 0;
    const int value = std::stoi(part, &used);
    if (used != part.size())
      throw std::invalid_argument(part);
    return value;
  };
  try {
    if (dots == std::string::npos) {
      const int v = whole(text);
      return {v, v};
    }
    const int lo = whole(text.substr(0, dots));
    const int hi = whole(text.substr(dots + 2));
    if (lo > hi)
      throw UsageError("empty range " + text);
    return {lo, hi};
  } catch (const std::logic_error &) {
    throw UsageError("bad range '" + text + "', expected A..B");
  }
}

inline auto join(const std::vector<int> & values, char sep) -> std::string {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out.push_back(sep);
    out += std::to_string(values[i]);
  }
  return out;
}

inline auto format_edge(Edge e) -> std::string {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

inline auto command_mp(const std::string & source, std::istream & in, std::ostream & out) -> int {
  for (const auto & g : read_graphs(source, in)) {
    const auto witness = mp_witness(g);
    out << graph6_encode(g) << ": mp = " << witness.size() << ", witness " << join(witness.vertices, ' ')
        << " (degrees " << join(witness.degrees, ' ') << ")\n";
    out << "#RESULT mp=" << witness.size() << " witness=" << join(witness.vertices, ',')
        << " degrees=" << join(witness.degrees, ',') << '\n';
  }
  return kExitOk;
}

inline auto command_saturated(const std::string & source, std::optional<int> k, bool fast, std::istream & in,
                              std::ostream & out) -> int {
  for (const auto & g : read_graphs(source, in)) {
    const SaturationOptions options{fast};
    const auto report = k ? is_k_saturated(g, *k, options) : is_saturated(g, options);
    out << graph6_encode(g) << ": mp = " << report.mp_value << ", " << (report.saturated ? "saturated" : "not saturated");
    if (k)
      out << ", " << (*report.k_saturated ? "" : "not ") << *k << "-saturated";
    out << " (" << report.non_edges_checked << " non-edges checked)\n";
    out << "#RESULT mp=" << report.mp_value << " saturated=" << (report.saturated ? "true" : "false");
    if (k)
      out << " k=" << *k << " k_saturated=" << (*report.k_saturated ? "true" : "false");
    out << " non_edges=" << report.non_edges_checked << '\n';
    for (const auto & v : report.violations)
      out << "#VIOLATION saturated edge=" << format_edge(v.edge) << " mp_after=" << v.mp_after << '\n';
    for (const auto & v : report.k_violations)
      out << "#VIOLATION k edge=" << format_edge(v.edge) << " mp_after=" << v.mp_after << '\n';
    for (const auto & w : report.witnesses)
      out << "#WITNESS edge=" << format_edge(w.edge) << " path=" << join(w.path.vertices, ',') << '\n';
  }
  return kExitOk;
}

inline auto print_search(const SearchResult & result, std::ostream & out, std::ostream & err) -> void {
  const std::string label = "h(" + std::to_string(result.n) + "," + std::to_string(result.k) + ")";
  if (result.h_value)
    out << label << " = " << *result.h_value << " (" << result.certificates.size() << " extremal classes, "
        << result.classes_examined << " classes examined)\n";
  else
    out << label << ": no " << result.k << "-saturated graph on " << result.n << " vertices\n";
  out << "#RESULT n=" << result.n << " k=" << result.k
      << " h=" << (result.h_value ? std::to_string(*result.h_value) : std::string("none"))
      << " certificates=" << result.certificates.size() << " classes=" << result.classes_examined << '\n';
  if (has_exact_h(result.n, result.k)) {
    const int expected = exact_h(result.n, result.k);
    out << "#CHECK closed_form=" << expected << " match=" << (result.h_value == expected ? "true" : "false") << '\n';
  } else {
    out << "#NOTE exploratory: no closed form is known for k=" << result.k
        << "; this value was computed by exhaustive search\n";
  }
  for (const auto & cert : result.certificates)
    out << "#CERT " << cert.graph6() << '\n';
  err << label << " searched in " << std::fixed << std::setprecision(3) << result.elapsed.count() << " s\n";
}

inline auto write_certificates(const std::string & path, const std::vector<SearchResult> & results) -> void {
  std::ofstream file(path);
  if (!file)
    throw UsageError("cannot write " + path);
  for (const auto & result : results)
    for (const auto & cert : result.certificates)
      file << cert.graph6() << '\n';
}

inline auto run(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err)
    -> int {
  CLI::App app{"Degree-monotone path saturation toolkit"};
  app.require_subcommand(1);

  std::string source;
  auto * mp_cmd = app.add_subcommand("mp", "Print mp(G) and a longest degree-monotone path");
  mp_cmd->add_option("graph", source, "graph6 string, file of graph6 lines, or - for stdin")->required();

  std::optional<int> sat_k;
  bool fast = false;
  auto * sat_cmd = app.add_subcommand("saturated", "Decide saturation, or k-saturation with --k");
  sat_cmd->add_option("graph", source, "graph6 string, file of graph6 lines, or - for stdin")->required();
  sat_cmd->add_option("--k", sat_k, "Test k-saturation")->check(CLI::Range(2, 1 << 20));
  sat_cmd->add_flag("--fast", fast, "Stop once every verdict is decided");

  int search_n = 0;
  std::optional<int> search_k;
  int jobs = 1;
  std::string certs_path;
  bool no_known_k = false;
  auto * search_cmd = app.add_subcommand("search-h", "Exact h(n,k) by exhaustive isomorph-free search");
  search_cmd->add_option("--n", search_n, "Vertex count (largest n with --no-known-k)")
      ->required()
      ->check(CLI::Range(1, kEnumerationMaxVertices));
  search_cmd->add_option("--k", search_k, "Target path length")->check(CLI::Range(2, 1 << 20));
  search_cmd->add_option("--certs", certs_path, "Write extremal graphs (graph6) to this file");
  search_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  search_cmd->add_flag("--no-known-k", no_known_k, "Sweep k = 5, 6 for every order up to --n");

  std::string family_name;
  FamilySpec spec;
  auto * construct_cmd = app.add_subcommand("construct", "Emit a named construction as graph6");
  construct_cmd->add_option("family", family_name, "Family name")->required();
  construct_cmd->add_option("--t", spec.t, "Clique size for p3xkt and cone");
  construct_cmd->add_option("--n", spec.n, "Order parameter");
  construct_cmd->add_option("--copies", spec.copies, "Disjoint copies")->check(CLI::Range(1, kMaxVertices));
  construct_cmd->add_flag("--cone", spec.coned, "Cone the base graph before copying");

  std::string claim_name;
  std::optional<int> verify_max_n;
  auto * verify_cmd = app.add_subcommand("verify", "Run verification suites (exit 1 on any counterexample)");
  verify_cmd->add_option("claim", claim_name, "Claim name or 'all'")->required();
  verify_cmd->add_option("--max-n", verify_max_n, "Largest enumerated order")
      ->check(CLI::Range(1, kEnumerationMaxVertices));
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  int oracle_max_n = 7;
  auto * oracle_cmd = app.add_subcommand("oracle-check", "Compare mp against the brute-force oracle on all graphs");
  oracle_cmd->add_option("--max-n", oracle_max_n, "Largest order")->check(CLI::Range(1, kOracleMaxVertices));
  oracle_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  std::string k_range = "2..6";
  std::string n_range = "3..12";
  bool compute = false;
  auto * table_cmd = app.add_subcommand("table", "Emit bound table as TSV");
  table_cmd->add_option("--k-range", k_range, "k range A..B");
  table_cmd->add_option("--n-range", n_range, "n range C..D");
  table_cmd->add_flag("--compute", compute, "Add a column with h(n,k) computed by exhaustive search");
  table_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mp_cmd)
      return command_mp(source, in, out);

    if (*sat_cmd)
      return command_saturated(source, sat_k, fast, in, out);

    if (*search_cmd) {
      std::vector<SearchResult> results;
      if (no_known_k) {
        if (search_k)
          throw UsageError("--no-known-k sweeps k itself; drop --k");
        for (int k = 5; k <= 6; ++k)
          for (int n = 1; n <= search_n; ++n)
            results.push_back(h_search(n, k, {jobs}));
      } else {
        if (!search_k)
          throw UsageError("search-h needs --k (or --no-known-k)");
        results.push_back(h_search(search_n, *search_k, {jobs}));
      }
      for (const auto & result : results)
        print_search(result, out, err);
      if (!certs_path.empty())
        write_certificates(certs_path, results);
      return kExitOk;
    }

    if (*construct_cmd) {
      const auto family = family_from_name(family_name);
      if (!family) {
        std::string names;
        for (const auto & entry : kFamilyNames)
          names += " " + std::string(entry.name);
        throw UsageError("unknown family '" + family_name + "'; known:" + names);
      }
      spec.family = *family;
      out << graph6_encode(build(spec)) << '\n';
      return kExitOk;
    }

    if (*verify_cmd) {
      std::vector<Claim> claims;
      if (claim_name == "all") {
        for (const auto & info : kClaims)
          claims.push_back(info.claim);
      } else if (auto claim = claim_from_name(claim_name)) {
        claims.push_back(*claim);
      } else {
        std::string names;
        for (const auto & info : kClaims)
          names += " " + std::string(info.name);
        throw UsageError("unknown claim '" + claim_name + "'; known:" + names);
      }
      bool all_passed = true;
      for (auto claim : claims) {
        const auto report = verify(claim, VerifyOptions{verify_max_n, jobs});
        if (report.passed()) {
          out << "#PASS " << report.name << " cases=" << report.cases << '\n';
        } else {
          all_passed = false;
          for (const auto & c : report.counterexamples)
            out << "#FAIL " << report.name << ' ' << c.graph6 << ' ' << c.detail << '\n';
          out << report.name << ": " << report.counterexamples.size() << " counterexamples in " << report.cases
              << " cases\n";
        }
      }
      return all_passed ? kExitOk : kExitFailure;
    }

    if (*oracle_cmd) {
      std::size_t graphs = 0;
      std::size_t mismatches = 0;
      for (int n = 1; n <= oracle_max_n; ++n)
        for (const auto & form : enumerate_forms(n, std::nullopt, jobs)) {
          const Graph g = form.graph();
          ++graphs;
          const int fast_value = mp(g);
          const int slow_value = mp_oracle(g);
          if (fast_value != slow_value) {
            ++mismatches;
            out << "#FAIL " << graph6_encode(g) << " mp=" << fast_value << " oracle=" << slow_value << '\n';
          }
        }
      out << "#RESULT oracle-check max_n=" << oracle_max_n << " graphs=" << graphs << " mismatches=" << mismatches
          << '\n';
      return mismatches == 0 ? kExitOk : kExitFailure;
    }

    if (*table_cmd) {
      const auto [k_lo, k_hi] = parse_range(k_range);
      const auto [n_lo, n_hi] = parse_range(n_range);
      if (k_lo < 2 || n_lo < 1)
        throw UsageError("table needs k >= 2 and n >= 1");
      if (compute && n_hi > kEnumerationMaxVertices)
        throw UsageError("--compute supports n <= " + std::to_string(kEnumerationMaxVertices));
      auto cell = [](const std::optional<int> & v) { return v ? std::to_string(*v) : std::string("-"); };
      out << "n\tk\tlower\tupper\texact\tsources" << (compute ? "\tcomputed" : "") << '\n';
      for (const auto & row : bound_table(k_lo, k_hi, n_lo, n_hi)) {
        std::string sources;
        for (const auto & s : row.sources)
          sources += (sources.empty() ? "" : ",") + s;
        out << row.n << '\t' << row.k << '\t' << row.lower << '\t' << cell(row.upper) << '\t' << cell(row.exact)
            << '\t' << (sources.empty() ? "-" : sources);
        if (compute)
          out << '\t' << cell(h_search(row.n, row.k, {jobs}).h_value);
        out << '\n';
      }
      return kExitOk;
    }
  } catch (const std::invalid_argument & e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range & e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace dmpsat::cli
