// Batch front-end: parse a job description (flags plus an optional
// key-value generators file), run the Groebner / resolution / series /
// verification pipelines, and emit deterministic line-oriented reports.
//
// Exit codes: 0 success (all checks pass), 1 verification failure,
// 2 usage / parse / domain errors.  Error paths emit a single structured
// diagnostic instead of a partial table.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "homres/closed_forms.hpp"
#include "homres/hochschild.hpp"
#include "homres/oracle.hpp"
#include "homres/parse.hpp"
#include "homres/series.hpp"

using namespace homres;

namespace {

struct Job {
  int n = 0;
  bool commutative = true;
  unsigned long p = 0;  // 0 = rationals
  MonomialOrder ord{MonomialOrder::DegLex};
  std::vector<std::string> gens;
  // pre-oriented rewriting rules (lhs, rhs); mutually exclusive with gens
  std::vector<std::pair<std::string, std::string>> rules;
  std::string task;
  int D = 5;
  int d = 10;
  std::string flavor = "auto";  // auto | commutative | anick
  bool dump = false;
  std::string format = "text";  // text | records
};

struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void set_ring(Job& job, const std::string& v) {
  auto c = v.find(':');
  std::string kind = (c == std::string::npos) ? v : v.substr(0, c);
  if (kind == "comm")
    job.commutative = true;
  else if (kind == "free")
    job.commutative = false;
  else
    throw usage_error("ring must be comm:<n> or free:<n>, got '" + v + "'");
  if (c == std::string::npos) throw usage_error("ring is missing the variable count");
  job.n = std::stoi(v.substr(c + 1));
  if (job.n <= 0) throw usage_error("ring needs a positive variable count");
}

void set_field(Job& job, const std::string& v) {
  if (v == "Q") {
    job.p = 0;
    return;
  }
  if (v.size() > 1 && v[0] == 'F') {
    job.p = std::stoul(v.substr(1));
    if (job.p >= 2) return;
  }
  throw usage_error("field must be Q or F<p>, got '" + v + "'");
}

void set_order(Job& job, const std::string& v) {
  if (v == "deglex")
    job.ord = MonomialOrder{MonomialOrder::DegLex};
  else if (v == "degrevlex")
    job.ord = MonomialOrder{MonomialOrder::DegRevLex};
  else
    throw usage_error("order must be deglex or degrevlex, got '" + v + "'");
}

// Generators file: `key: value` lines for job settings, every other
// non-empty non-comment line is a generator in the shared polynomial
// grammar.  Flags given on the command line take precedence.
void load_job_file(Job& job, const std::string& path, const std::map<std::string, bool>& given) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open generators file '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto c = line.find(':');
    // ring values also contain ':', so a key is the part before the first one
    std::string key = (c == std::string::npos) ? "" : trim(line.substr(0, c));
    if (key == "ring") {
      if (!given.at("ring")) set_ring(job, trim(line.substr(c + 1)));
    } else if (key == "field") {
      if (!given.at("field")) set_field(job, trim(line.substr(c + 1)));
    } else if (key == "order") {
      if (!given.at("order")) set_order(job, trim(line.substr(c + 1)));
    } else if (key == "task") {
      if (!given.at("task")) job.task = trim(line.substr(c + 1));
    } else if (key == "flavor") {
      if (!given.at("flavor")) job.flavor = trim(line.substr(c + 1));
    } else if (key == "max-hdeg") {
      if (!given.at("max-hdeg")) job.D = std::stoi(trim(line.substr(c + 1)));
    } else if (key == "max-deg") {
      if (!given.at("max-deg")) job.d = std::stoi(trim(line.substr(c + 1)));
    } else if (key == "rule") {
      std::string body = trim(line.substr(c + 1));
      auto arrow = body.find("->");
      if (arrow == std::string::npos)
        throw usage_error("rule lines read `rule: lhs -> rhs`, got '" + body + "'");
      job.rules.emplace_back(trim(body.substr(0, arrow)), trim(body.substr(arrow + 2)));
    } else if (key.empty()) {
      job.gens.push_back(line);
    } else {
      throw usage_error("unknown key '" + key + "' in generators file");
    }
  }
}

ReductionSystem complete_system(const Job& job) {
  Ring r{job.n, job.commutative, Field{job.p}};
  if (!job.rules.empty()) {
    // an explicitly supplied, already-confluent rewriting system (e.g. a
    // sorting-order basis); only degree-compatibility is checked
    if (!job.gens.empty())
      throw usage_error("a job mixes generator lines with rule: lines; use one or the other");
    ReductionSystem rs(r, job.ord);
    for (const auto& [lhs, rhs] : job.rules) {
      Polynomial lp = parse_polynomial(lhs, r);
      if (lp.terms().size() != 1 || !lp.terms().begin()->second.is_one())
        throw usage_error("rule left side must be a single monomial: '" + lhs + "'");
      rs.add_rule_unchecked(lp.terms().begin()->first, parse_polynomial(rhs, r));
    }
    rs.set_reduced(true);
    return rs;
  }
  std::vector<Polynomial> ps;
  for (const auto& g : job.gens) ps.push_back(parse_polynomial(g, r));
  if (ps.empty()) {
    ReductionSystem rs(r, job.ord);
    rs.set_reduced(true);
    return rs;
  }
  return job.commutative ? buchberger(ps, job.ord) : noncomm_complete(ps, job.ord, job.d);
}

Flavor pick_flavor(const Job& job) {
  if (job.flavor == "commutative") return Flavor::Commutative;
  if (job.flavor == "anick") return Flavor::Anick;
  if (job.flavor == "auto") return job.commutative ? Flavor::Commutative : Flavor::Anick;
  throw usage_error("flavor must be auto, commutative or anick, got '" + job.flavor + "'");
}

std::string header(const Job& job) {
  std::ostringstream h;
  h << "# homres task=" << job.task << " ring=" << (job.commutative ? "comm" : "free") << ":"
    << job.n << " field=" << (job.p ? "F" + std::to_string(job.p) : "Q")
    << " order=" << (job.ord.kind == MonomialOrder::DegLex ? "deglex" : "degrevlex")
    << " flavor=" << job.flavor << " max-hdeg=" << job.D << " max-deg=" << job.d << "\n";
  return h.str();
}

bool records(const Job& job) { return job.format == "records"; }

std::string mdeg_str(const std::vector<int>& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s;
}

std::string rank_row(const BasedComplex<QuotientElem>& cx, int D) {
  std::string row;
  for (int i = 0; i <= D; ++i) row += (i ? "," : "") + std::to_string(cx.rank(i));
  return row;
}

RationalSeries job_series(const ReductionSystem& R, Flavor fl, int d) {
  if (fl == Flavor::Anick) return automaton_series(build_automaton(R));
  return commutative_upper_bound(R, d);
}

// ---------------------------------------------------------------------------
// Tasks
// ---------------------------------------------------------------------------

void run_groebner(const Job& job, const ReductionSystem& R, std::ostream& out) {
  for (const auto& rule : R.rules()) {
    if (records(job))
      out << "rule " << rule.lhs.str() << " -> " << rule.rhs.str() << "\n";
    else
      out << rule.lhs.str() << " -> " << rule.rhs.str() << "\n";
  }
  if (R.fully_complete())
    out << (records(job) ? "complete unbounded" : "complete: unbounded") << "\n";
  else
    out << (records(job) ? "complete " : "complete: up to degree ") << R.complete_up_to_degree()
        << "\n";
}

void run_resolve(const Job& job, const ReductionSystem& R, std::ostream& out) {
  ResolutionComplex res = build_resolution(R, pick_flavor(job), job.D, job.d);
  for (int i = 0; i <= job.D; ++i) out << "rank " << i << " " << res.cx.rank(i) << "\n";
  out << "minimal " << (res.minimal ? "true" : "false") << "\n";
  if (records(job))
    for (int i = 0; i <= job.D; ++i)
      for (const auto& cell : res.cx.cells(i))
        out << "cell " << i << " " << cell.label << " " << mdeg_str(cell.multidegree) << "\n";
  if (job.dump) out << dump_complex(res.cx);
}

void run_betti(const Job& job, const ReductionSystem& R, std::ostream& out) {
  ResolutionComplex res = build_resolution(R, pick_flavor(job), job.D, job.d);
  if (!res.minimal)
    out << "note ranks of a non-minimal resolution bound the Betti numbers from above\n";
  for (int i = 0; i <= job.D; ++i) out << "betti " << i << " " << res.cx.rank(i) << "\n";
  out << "betti-row " << rank_row(res.cx, job.D) << "\n";
}

void run_poincare(const Job& job, const ReductionSystem& R, std::ostream& out) {
  Flavor fl = pick_flavor(job);
  RationalSeries S = job_series(R, fl, job.d);
  out << "series " << S.str() << "\n";
  BettiTable tab = series_truncate(S, job.d);
  std::string row;
  for (int i = 0; i <= job.D; ++i) {
    out << "rank " << i << " " << tab.total(i) << "\n";
    row += (i ? "," : "") + std::to_string(tab.total(i));
  }
  out << "rank-row " << row << "\n";
  out << "note ranks are exact for homological degree + internal degree <= " << job.d << "\n";
}

void run_hochschild(const Job& job, const ReductionSystem& R, std::ostream& out) {
  BimoduleResolution res = hochschild_resolution(R, pick_flavor(job), job.D, job.d);
  std::string row;
  for (int i = 0; i <= job.D; ++i) {
    out << "rank " << i << " " << res.cx.rank(i) << "\n";
    row += (i ? "," : "") + std::to_string(res.cx.rank(i));
  }
  out << "rank-row " << row << "\n";
  out << "minimal " << (res.minimal ? "true" : "false") << "\n";
  if (records(job) && res.minimal) {
    BettiTable tab = hh_hilbert(res);
    for (const auto& [key, r] : tab.ranks)
      out << "betti " << key.first << " " << mdeg_str(key.second) << " " << r << "\n";
  }
  if (job.dump) out << dump_complex(res.cx);
}

int run_verify(const Job& job, const ReductionSystem& R, std::ostream& out) {
  Flavor fl = pick_flavor(job);
  std::string fail_detail;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    out << "check " << name << " " << (ok ? "pass" : "fail") << "\n";
    if (!ok && fail_detail.empty()) fail_detail = name + ": " + detail;
    return ok;
  };

  // 1. the coordinate matching is acyclic on the truncated complex
  BarComplex B = normalized_bar(R, job.D, job.d);
  Matching m = (fl == Flavor::Anick) ? anick_matching(B) : commutative_matching(B);
  auto violation = validate_matching(B.cx, m);
  report("matching", !violation,
         violation ? violation->condition + ": " + violation->detail : "");

  // 2. boundary squared, on the full complex and the assembled resolution
  ResolutionComplex res;
  bool dd = !B.cx.check_boundary_squared().has_value();
  std::string dd_detail = dd ? "" : "full complex";
  if (dd) {
    try {
      res = build_resolution(R, fl, job.D, job.d);
    } catch (const domain_error& e) {
      dd = false;
      dd_detail = e.what();
    }
  }
  report("boundary-squared", dd, dd_detail);
  if (!dd) {
    out << "result fail " << fail_detail << "\n";
    return 1;
  }

  // 3. the reduction-rule differential equals the path-sum Morse differential
  bool morse_ok = !violation;
  std::string morse_detail = violation ? "matching invalid" : "";
  if (morse_ok) {
    auto M = morse_complex(B.cx, m, QuotientElem::of_scalar(Scalar(1, R.ring().field), &R));
    for (int i = 1; morse_ok && i < job.D; ++i)
      for (int ms = 0; morse_ok && ms < M.morse.rank(i); ++ms) {
        const BarTuple& e = B.tuples[i][M.critical[i][ms]];
        std::map<BarTuple, QuotientElem> got;
        for (const auto& [mt, c] : M.morse.column(i, ms))
          got.emplace(B.tuples[i - 1][M.critical[i - 1][mt]], c);
        auto want = reduction_differential(res.cells, e);
        if (got != want) {
          morse_ok = false;
          morse_detail = "differential of " + bar_label(e);
        }
      }
  }
  report("morse-differential", morse_ok, morse_detail);

  // 4. ranks (minimal case) or homology of the specialized complex match
  // the brute-force Tor computation
  TorTable oracle = tor_residue_field(R, job.D - 1, job.d);
  bool oracle_ok = true;
  std::string oracle_detail;
  if (res.minimal) {
    oracle_ok = cell_counts(res.cx, job.D - 1) == oracle;
    if (!oracle_ok) oracle_detail = "minimal ranks differ from Tor dimensions";
  } else {
    auto hr = homology_ranks(specialize(res.cx));
    for (int i = 0; i < job.D; ++i)
      if (hr[i] != oracle.total(i)) {
        oracle_ok = false;
        oracle_detail = "homology rank differs from Tor in degree " + std::to_string(i);
        break;
      }
  }
  report("oracle", oracle_ok, oracle_detail);

  // 5. the rational series expands to the chain-cell counts on the common
  // truncation window
  int T = std::min(job.D, job.d);
  BettiTable expect = restrict_total(chain_table(enumerate_chains(R, fl, T, T)), T);
  BettiTable got = series_truncate(job_series(R, fl, T), T);
  report("series", got == expect, "series truncation differs from chain counts");

  out << "betti-row " << rank_row(res.cx, job.D) << "\n";
  if (fail_detail.empty()) {
    out << "result pass\n";
    return 0;
  }
  out << "result fail " << fail_detail << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  Job job;
  std::string gens_file, ring_s, field_s = "Q", order_s = "deglex";
  CLI::App app{"homres: resolutions of quotient algebras via acyclic matchings"};
  app.add_option("--task", job.task, "groebner | resolve | betti | poincare | hochschild | verify");
  app.add_option("--ring", ring_s, "comm:<n> or free:<n>");
  app.add_option("--field", field_s, "Q or F<p> (default Q)");
  app.add_option("--order", order_s, "deglex or degrevlex (default deglex)");
  app.add_option("--gens-file", gens_file,
                 "generators file: one polynomial per line plus optional key: value settings");
  app.add_option("--max-hdeg", job.D, "homological degree bound (default 5)");
  app.add_option("--max-deg", job.d, "internal degree bound (default 10)");
  app.add_option("--flavor", job.flavor, "auto | commutative | anick (default auto)");
  app.add_flag("--dump-complex", job.dump, "append the differential, one entry per line");
  app.add_option("--format", job.format, "text | records (default text)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error usage " << e.what() << "\n";
    return 2;
  }

  std::ostringstream out;  // assembled in full before printing: no partial tables
  try {
    std::map<std::string, bool> given;
    for (const char* k : {"ring", "field", "order", "task", "flavor", "max-hdeg", "max-deg"})
      given[k] = app.count("--" + std::string(k)) > 0;
    if (!ring_s.empty()) set_ring(job, ring_s);
    set_field(job, field_s);
    set_order(job, order_s);
    if (!gens_file.empty()) load_job_file(job, gens_file, given);
    if (job.n <= 0) throw usage_error("no ring given (use --ring or a ring: line)");
    if (job.D <= 0 || job.d <= 0) throw usage_error("bounds must be positive");
    if (job.format != "text" && job.format != "records")
      throw usage_error("format must be text or records");

    ReductionSystem R = complete_system(job);
    out << header(job);
    int code = 0;
    if (job.task == "groebner")
      run_groebner(job, R, out);
    else if (job.task == "resolve")
      run_resolve(job, R, out);
    else if (job.task == "betti")
      run_betti(job, R, out);
    else if (job.task == "poincare")
      run_poincare(job, R, out);
    else if (job.task == "hochschild")
      run_hochschild(job, R, out);
    else if (job.task == "verify")
      code = run_verify(job, R, out);
    else
      throw usage_error("unknown task '" + job.task + "'");
    std::cout << out.str();
    return code;
  } catch (const usage_error& e) {
    std::cerr << "error usage " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "error parse at position " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const incomplete_basis& e) {
    std::cerr << "error incomplete-basis " << e.what() << " (rerun with --max-deg >= "
              << e.needed_degree << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error domain " << e.what() << "\n";
    return 2;
  }
}
