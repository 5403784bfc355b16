#include "unfold/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "unfold/bform.hpp"
#include "unfold/certify.hpp"
#include "unfold/digraph.hpp"
#include "unfold/errors.hpp"
#include "unfold/report.hpp"

namespace unfold {

namespace {

constexpr long long kStatsReferenceKMax = 49;
constexpr std::size_t kStatsReferenceTotal = 1436;
constexpr double kStatsReferenceFraction = 0.74;

// Destination for command output: --out PATH or the caller's stream.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : os_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw InvalidInput("cannot open output file " + path);
    os_ = file_.get();
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

std::string join(const std::vector<std::int64_t>& xs, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string set_text(const std::vector<std::int64_t>& xs) { return "{" + join(xs) + "}"; }

void print_certificate(std::ostream& os, const Certificate& c) {
  const auto& t = c.trace;
  std::vector<std::int64_t> gens(t.a_generators.members().begin(), t.a_generators.members().end());
  std::string rel;
  for (const auto& [d1, d2] : t.relations) rel += (rel.empty() ? "" : " ") + ("(" + std::to_string(d1) + "," + std::to_string(d2) + ")");
  std::string cls;
  for (const auto& c2 : t.classes) cls += (cls.empty() ? "" : " ") + set_text(c2);

  auto line = [&](const char* key, const std::string& value) { os << std::left << std::setw(24) << key << value << '\n'; };
  line("triangle", c.sys.str());
  line("genus", std::to_string(c.genus));
  line("stratum", "H" + c.stratum.str());
  line("marked_points", std::to_string(c.stratum.marked_points));
  line("rank_lower_bound", std::to_string(c.rank_lower_bound));
  line("full_rank", c.full_rank_certified ? "true" : "false");
  line("hyperelliptic_excluded", c.hyperelliptic_excluded ? "true" : "false");
  line("verdict", std::string(verdict_name(c.verdict)));
  line("D", set_text(t.divisors));
  line("E", rel.empty() ? "{}" : rel);
  line("A_generators", set_text(gens));
  line("A_closure_size", std::to_string(t.a_closure.size()) + " of " + std::to_string(euler_phi(c.sys.k())));
  line("classes", cls);
}

OutputFormat parse_format(const std::string& name) {
  if (name == "tsv") return OutputFormat::Tsv;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw InvalidInput("unknown format " + name);
}

struct StatsBlock {
  std::size_t total = 0;
  std::size_t dense = 0;
  double fraction() const { return total ? static_cast<double>(dense) / static_cast<double>(total) : 0.0; }
};

StatsBlock count_dense(long long k_max, EnumerationFilters f, unsigned workers) {
  StatsBlock s;
  if (k_max < 3) return s;
  for (const auto& e : enumerate_certificates(k_max, f, workers)) {
    ++s.total;
    if (e.cert.verdict == Verdict::DenseInStratumComponent) ++s.dense;
  }
  return s;
}

void print_block(std::ostream& os, const std::string& label, const StatsBlock& s) {
  char frac[32];
  std::snprintf(frac, sizeof frac, "%.6f", s.fraction());
  os << "convention  " << label << '\n'
     << "  triangles " << s.total << '\n'
     << "  dense     " << s.dense << '\n'
     << "  fraction  " << frac << '\n';
}

int cmd_stats(std::ostream& os, long long k_max, unsigned workers) {
  const auto reduced = count_dense(k_max, {true, true, false}, workers);
  const auto primitive = count_dense(k_max, {true, true, true}, workers);
  os << "k_max " << k_max << '\n';
  print_block(os, "odd k, distinct q, every triple (common factors reduced)", reduced);
  print_block(os, "odd k, distinct q, gcd(q1,q2,q3) = 1", primitive);
  if (k_max == kStatsReferenceKMax) {
    for (const auto& [label, s] : {std::pair{"every triple", reduced}, std::pair{"gcd 1", primitive}}) {
      const bool ok = s.total == kStatsReferenceTotal && s.fraction() >= kStatsReferenceFraction;
      os << "check " << label << ": total " << s.total << (s.total == kStatsReferenceTotal ? " == " : " != ")
         << kStatsReferenceTotal << ", fraction " << (s.fraction() >= kStatsReferenceFraction ? ">= " : "< ")
         << kStatsReferenceFraction << (ok ? "  ok" : "  WARNING: differs from reference") << '\n';
    }
  }
  return kExitOk;
}

int cmd_digraph_verify(std::ostream& os, std::ostream& err, int count, std::uint64_t seed, std::size_t max_v,
                       std::size_t max_e) {
  if (count < 0) throw InvalidInput("--random must be non-negative");
  std::mt19937_64 rng(seed);
  int passed = 0;
  for (int i = 0; i < count; ++i) {
    const auto g = random_strongly_connected(rng, max_v, max_e);
    const auto expected = g.num_edges() - g.num_vertices() + 1;
    std::string why;
    if (!is_strongly_connected(g)) why = "generator produced a digraph that is not strongly connected";
    const auto dim = loop_space_dim(g);
    if (why.empty() && dim != expected) why = "dim " + std::to_string(dim) + " != |E|-|V|+1 = " + std::to_string(expected);
    if (why.empty()) {
      const auto loops = embedded_loops(g);
      const auto h = contract_loop(g, loops.front());
      if (!is_strongly_connected(h))
        why = "contraction broke strong connectivity";
      else if (loop_space_dim(h) + 1 != dim)
        why = "contraction changed dim by other than 1";
    }
    if (why.empty()) {
      ++passed;
    } else {
      err << "instance " << i << " failed: " << why << '\n' << g.to_text();
    }
  }
  os << passed << "/" << count << " pass\n";
  return passed == count ? kExitOk : kExitCheckFailed;
}

int cmd_digraph_dim(std::ostream& os, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file " + path);
  const auto g = Digraph::parse(in);
  const auto dim = loop_space_dim(g);
  const auto formula = static_cast<long long>(g.num_edges()) - static_cast<long long>(g.num_vertices()) + 1;
  os << "loop_space_dim " << dim << '\n' << "|E|-|V|+1 " << formula << '\n';
  if (g.num_vertices() == 0 || !is_strongly_connected(g)) {
    os << "note: not strongly connected, no equality expected\n";
    return kExitOk;
  }
  if (static_cast<long long>(dim) != formula) {
    os << "MISMATCH on a strongly connected digraph\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_bform(std::ostream& os, std::ostream& err, const std::string& a1, const std::string& a2, int e1, int e2,
              double tol) {
  QuadratureOptions opt;
  opt.tol = tol;
  auto print = [&](const QuadratureResult& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "value %.15g %+.15gi\nerror_estimate %.3e\n", r.value.real(), r.value.imag(),
                  r.error_estimate);
    os << buf << "regions " << r.regions_evaluated << "\nevaluations " << r.evaluations << '\n';
  };
  try {
    const auto r = planar_integral(ExactFraction::parse(a1), ExactFraction::parse(a2), e1, e2, opt);
    print(r);
    os << "nonvanishing " << (nonvanishing(r) ? "true" : "false") << '\n';
    return kExitOk;
  } catch (const QuadratureBudgetExceeded& e) {
    print(e.partial());
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace

std::string dense_table(long long k_max, unsigned workers) {
  std::map<std::int64_t, std::vector<std::string>> by_k;
  if (k_max >= 3) {
    for (const auto& e : enumerate_certificates(k_max, {true, true, true}, workers)) {
      if (e.cert.verdict != Verdict::DenseInStratumComponent) continue;
      by_k[e.cert.sys.k()].push_back("(" + join({e.q1, e.q2, e.q3}) + ")");
    }
  }
  std::ostringstream os;
  std::size_t total = 0;
  for (const auto& [k, rows] : by_k) {
    os << "k=" << k << " (" << rows.size() << "):";
    for (const auto& r : rows) os << ' ' << r;
    os << '\n';
    total += rows.size();
  }
  os << "total " << total << '\n';
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Full-rank certification for rational triangle unfoldings", args.empty() ? "unfold" : args.front()};
  app.require_subcommand(1);

  std::string out_path;
  unsigned workers = 0;

  auto* certify = app.add_subcommand("certify", "certify one triangle q1 q2 q3 (angles q_i*pi/k)");
  std::vector<std::int64_t> triple;
  bool reduce = false, json = false;
  std::string format = "tsv";
  certify->add_option("q", triple, "angle numerators")->expected(3)->required();
  certify->add_flag("--reduce", reduce, "divide out a common factor instead of rejecting it");
  certify->add_flag("--json", json, "print the certificate as JSON");

  auto* enumerate = app.add_subcommand("enumerate", "certify every triangle with k <= k-max");
  long long k_max = 0;
  bool odd = true, distinct = true, gcd_one = true;
  enumerate->add_option("--k-max", k_max, "largest k")->required();
  enumerate->add_flag("--odd,!--any-k", odd, "odd k only (default on)");
  enumerate->add_flag("--distinct,!--allow-isosceles", distinct, "distinct q_i only (default on)");
  enumerate->add_flag("--gcd-one,!--allow-common-factor", gcd_one,
                      "skip triples with a common factor (default on); when off they are certified reduced");
  enumerate->add_option("--format", format, "tsv, csv or json")->check(CLI::IsMember({"tsv", "csv", "json"}));
  enumerate->add_option("--out", out_path, "output file");
  enumerate->add_option("--workers", workers, "worker threads (0 = all cores)");

  auto* table = app.add_subcommand("table", "dense-orbit triangles grouped by k");
  table->add_option("--k-max", k_max, "largest k")->required();
  table->add_option("--out", out_path, "output file");
  table->add_option("--workers", workers, "worker threads (0 = all cores)");

  auto* stats = app.add_subcommand("stats", "count certified triangles with odd k <= k-max and distinct q_i");
  stats->add_option("--k-max", k_max, "largest k")->required();
  stats->add_option("--out", out_path, "output file");
  stats->add_option("--workers", workers, "worker threads (0 = all cores)");

  auto* digraph = app.add_subcommand("digraph", "loop space checks on directed graphs");
  digraph->require_subcommand(1);
  auto* verify = digraph->add_subcommand("verify", "random strongly connected digraphs");
  int random_count = 0;
  std::uint64_t seed = 0;
  std::size_t max_v = 8, max_e = 14;
  verify->add_option("--random", random_count, "number of digraphs")->required();
  verify->add_option("--seed", seed, "generator seed");
  verify->add_option("--max-vertices", max_v, "vertex bound");
  verify->add_option("--max-edges", max_e, "edge bound");
  auto* dim = digraph->add_subcommand("dim", "loop space dimension of a graph file");
  std::string graph_path;
  dim->add_option("--file", graph_path, "graph file: 'V E' then E lines 'tail tip'")->required();

  auto* bform = app.add_subcommand("bform", "planar integral of z^e1 (z-1)^e2 |z|^(2a1-2) |z-1|^(2a2-2)");
  std::string a1, a2;
  int e1 = 0, e2 = 0;
  double tol = 1e-8;
  bform->add_option("--a1", a1, "alpha_1 as p/q")->required();
  bform->add_option("--a2", a2, "alpha_2 as p/q")->required();
  bform->add_option("--eps1", e1, "0 or 1");
  bform->add_option("--eps2", e2, "0 or 1");
  bform->add_option("--tol", tol, "absolute error target");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*certify) {
      const auto sys = make_angle_system(std::vector<std::int64_t>(triple), reduce ? GcdMode::Reduce : GcdMode::Strict);
      if (!sys.is_triangle()) throw InvalidInput("certify needs three numerators");
      const auto cert = make_certificate(sys);
      if (json)
        out << certificate_to_json(cert).dump(2) << '\n';
      else
        print_certificate(out, cert);
      return kExitOk;
    }
    if (*enumerate) {
      const auto fmt = parse_format(format);
      const auto rows = enumerate_certificates(k_max, {odd, distinct, gcd_one}, workers);
      Sink sink(out, out_path);
      if (fmt != OutputFormat::Json) *sink << table_header(fmt) << '\n';
      for (const auto& r : rows) *sink << table_row(fmt, r.q1, r.q2, r.q3, r.cert) << '\n';
      return kExitOk;
    }
    if (*table) {
      if (k_max < 0) throw InvalidInput("--k-max must be non-negative");
      const auto text = dense_table(k_max, workers);
      Sink sink(out, out_path);
      *sink << text;
      return kExitOk;
    }
    if (*stats) {
      if (k_max < 0) throw InvalidInput("--k-max must be non-negative");
      Sink sink(out, out_path);
      return cmd_stats(*sink, k_max, workers);
    }
    if (*verify) return cmd_digraph_verify(out, err, random_count, seed, max_v, max_e);
    if (*dim) return cmd_digraph_dim(out, graph_path);
    if (*bform) return cmd_bform(out, err, a1, a2, e1, e2, tol);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace unfold
