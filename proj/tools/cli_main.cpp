// Command line driver.  Every subcommand renders one table or report to
// stdout (or --output); exit 0 on success, 1 when a mathematical check
// fails, 2 on malformed input or flags.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/gradedlog.hpp"
#include "wittkit/jsonio.hpp"
#include "wittkit/lambda1.hpp"
#include "wittkit/necklace.hpp"
#include "wittkit/numth.hpp"
#include "wittkit/qseries.hpp"
#include "wittkit/rational.hpp"
#include "wittkit/ring.hpp"
#include "wittkit/supersym.hpp"
#include "wittkit/symfunc.hpp"
#include "wittkit/witt.hpp"

using namespace wittkit;
using nlohmann::json;

namespace {

RingPtr ring_from_flag(const std::string& spec) {
  if (spec == "int") return Ring::integers();
  if (spec == "rat") return Ring::rationals();
  if (spec.rfind("free:", 0) == 0) {
    long cap = 0;
    try {
      std::size_t used = 0;
      cap = std::stol(spec.substr(5), &used);
      if (used != spec.size() - 5) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
      throw ConfigError("bad ring spec: " + spec);
    }
    if (cap < 1 || cap > 64) throw ConfigError("free ring degree out of range: " + spec);
    return Ring::free_lambda(cap);
  }
  throw ConfigError("unknown ring: " + spec + " (expected int, rat or free:D)");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

std::string csv_field(const std::string& s) {
  bool plain = !s.empty();
  for (char c : s)
    plain = plain && (std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
                      c == '_' || c == '/' || c == '.');
  if (plain) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render(const std::string& format) const {
    if (format == "json") {
      json doc;
      doc["columns"] = header;
      doc["rows"] = json::array();
      for (const auto& r : rows) doc["rows"].push_back(r);
      return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == "csv") {
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t j = 0; j < r.size(); ++j) out << (j ? "," : "") << csv_field(r[j]);
        out << "\n";
      };
      line(header);
      for (const auto& r : rows) line(r);
      return out.str();
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
    for (const auto& r : rows)
      for (std::size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (j) out << "  ";
        out << r[j];
        if (j + 1 < r.size()) out << std::string(width[j] - r[j].size(), ' ');
      }
      out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out.str();
  }
};

int emit_checks(const std::vector<IdentityCheck>& checks, const std::string& format,
                const std::string& out_path) {
  bool all = true;
  for (const auto& c : checks) all = all && c.ok;
  if (format == "json") {
    json doc;
    doc["all_ok"] = all;
    doc["checks"] = json::array();
    for (const auto& c : checks) doc["checks"].push_back({{"name", c.name}, {"ok", c.ok}});
    write_out(out_path, doc.dump(2) + "\n");
  } else if (format == "csv") {
    std::ostringstream out;
    out << "name,ok\n";
    for (const auto& c : checks)
      out << csv_field(c.name) << "," << (c.ok ? "true" : "false") << "\n";
    write_out(out_path, out.str());
  } else {
    std::ostringstream out;
    for (const auto& c : checks) out << (c.ok ? "pass  " : "FAIL  ") << c.name << "\n";
    out << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    write_out(out_path, out.str());
  }
  return all ? 0 : 1;
}

// --- witt-table ----------------------------------------------------------

int run_witt_table(long n, const std::string& ring_spec, const std::string& format,
                   const std::string& out_path) {
  if (n < 1 || n > 64) throw ConfigError("order out of range (1..64)");
  auto R = ring_from_flag(ring_spec);
  std::vector<Elem> coords;
  for (long k = 1; k <= n; ++k) {
    // symbolic rings get multiples of the first generator so the ghost shows
    // genuine polynomial structure
    if (R->uses_poly())
      coords.push_back(Elem(R, Poly::variable(1)).scaled(Rat(k)));
    else
      coords.push_back(Elem::integer(R, k));
  }
  WittVec x(R, coords);
  auto ghost = x.ghost();
  Table t;
  t.header = {"n", "coordinate", "ghost"};
  for (long k = 1; k <= n; ++k)
    t.rows.push_back({std::to_string(k), x.coord(k).str(), ghost[k - 1].str()});
  write_out(out_path, t.render(format));
  return WittVec::from_ghost(R, ghost) == x ? 0 : 1;
}

// --- necklace-table ------------------------------------------------------

int run_necklace_table(long r, long n, const std::string& format,
                       const std::string& out_path) {
  if (n < 1 || n > 40) throw ConfigError("order out of range (1..40)");
  auto Z = Ring::integers();
  Elem base = Elem::integer(Z, r);
  std::vector<Elem> counts(n + 1, Elem::zero(Z));
  for (long k = 1; k <= n; ++k) counts[k] = necklace_poly(base, k);
  Table t;
  t.header = {"n", "count", "ghost"};
  bool ok = true;
  for (long k = 1; k <= n; ++k) {
    Elem ghost = Elem::zero(Z);
    for (long d : divisors(k)) ghost = ghost + counts[d].scaled(Rat(d));
    // the ghost side of a constant alphabet is the plain power
    ok = ok && ghost == base.pow(static_cast<unsigned>(k));
    t.rows.push_back({std::to_string(k), counts[k].str(), ghost.str()});
  }
  write_out(out_path, t.render(format));
  return ok ? 0 : 1;
}

// --- plethysm-check ------------------------------------------------------

Poly cli_geometric(long k, int sign, long cap) {
  Poly out = Poly::constant(1);
  Poly pw = Poly::constant(1);
  Poly step = Poly::variable(static_cast<VarId>(k)).scaled(Rat(sign));
  for (long j = 1; j * k <= cap; ++j) {
    pw = sym_mul(pw, step, cap);
    out += pw;
  }
  return out;
}

int run_plethysm_check(long degree, const std::string& format, const std::string& out_path) {
  if (degree < 2 || degree > 24) throw ConfigError("degree out of range (2..24)");
  const long cap = degree;
  Grading g = power_grading(cap);
  auto pv = [](long k) { return Poly::variable(static_cast<VarId>(k)); };
  std::vector<IdentityCheck> checks;
  auto add = [&](std::string name, bool ok) { checks.push_back({std::move(name), ok}); };

  Poly sample;
  for (long k = 1; k <= cap; ++k) sample += pv(k);
  sample += sym_mul(pv(1), sample, cap);
  add("power to complete and back",
      convert_basis(convert_basis(sample, SymBasis::Power, SymBasis::Complete, cap),
                    SymBasis::Complete, SymBasis::Power, cap) == sample);
  add("power to elementary and back",
      convert_basis(convert_basis(sample, SymBasis::Power, SymBasis::Elementary, cap),
                    SymBasis::Elementary, SymBasis::Power, cap) == sample);

  bool comp = true;
  for (long a = 1; a <= cap; ++a)
    for (long b = 1; a * b <= cap; ++b)
      comp = comp && plethysm(pv(a), pv(b), cap) == pv(a * b);
  add("composition multiplies power indices", comp);

  Poly f;
  for (long k = 1; k <= cap; ++k) f += pv(k).scaled(Rat(1, k));
  add("exp then log is the identity",
      log1p_series(exp_series(f, g) - Poly::constant(1), g) == f);
  add("log then exp is the identity",
      exp_series(log1p_series(f, g), g) == Poly::constant(1) + f);

  Poly H = complete_series(cap), E = signed_complete_series(cap);
  Poly L = moebius_series(cap), Lt = signed_moebius_series(cap);
  add("complete series splits over the cyclic layers",
      plethysm(H, L, cap) == cli_geometric(1, 1, cap));
  add("signed layers give the alternating split",
      plethysm(H, Lt, cap) == cli_geometric(1, -1, cap));
  add("elementary series over the layers",
      plethysm(E, L, cap) ==
          sym_mul(Poly::constant(1) - pv(1), cli_geometric(2, 1, cap), cap));
  add("elementary series over the signed layers",
      plethysm(E, Lt, cap) ==
          sym_mul(Poly::constant(1) + pv(1), cli_geometric(2, -1, cap), cap));

  bool higher = true;
  for (long k : {2L, 3L}) {
    Poly target = Poly::constant(1);
    for (long l : divisors(k)) target = sym_mul(target, cli_geometric(l, 1, cap), cap);
    higher = higher && plethysm(H, lk_series(k, cap), cap) == target;
  }
  add("higher layer series compose with the complete family", higher);

  bool collapse = true;
  for (long s = 1; s <= std::min(cap, 12L); ++s)
    for (long k = 1; k <= 12; ++k) {
      long total = 0;
      for (long d : divisors(s)) total += ramanujan_sum(k, d);
      collapse = collapse && total == (k % s == 0 ? s : 0);
    }
  add("divisor sums of the exponential sums collapse", collapse);

  add("ghost substitution fixes the structure polynomials",
      slot_fixed_point_check(std::min(cap, 8L)));

  return emit_checks(checks, format, out_path);
}

// --- supersym ------------------------------------------------------------

int run_supersym(long a, long b, long n, const std::string& format,
                 const std::string& out_path) {
  if (a < 0 || b < 0 || a + b < 1 || a > 6 || b > 6)
    throw ConfigError("alphabet sizes out of range (0..6, not both zero)");
  if (n < 1 || n > 12) throw ConfigError("degree out of range (1..12)");
  auto fam = supersym_generators(static_cast<unsigned>(a), static_cast<unsigned>(b),
                                 static_cast<unsigned>(n));
  std::vector<IdentityCheck> checks;
  auto member = [&](const std::vector<Poly>& v) {
    bool ok = true;
    for (long k = 1; k <= n; ++k)
      ok = ok && is_supersymmetric(v[k], static_cast<unsigned>(a), static_cast<unsigned>(b));
    return ok;
  };
  checks.push_back({"power family is supersymmetric", member(fam.sigma)});
  checks.push_back({"complete family is supersymmetric", member(fam.h)});
  checks.push_back({"elementary family is supersymmetric", member(fam.e)});
  checks.push_back({"first factor family is supersymmetric", member(fam.q)});
  checks.push_back({"second factor family is supersymmetric", member(fam.t)});
  checks.push_back({"layer family is supersymmetric", member(fam.l)});

  // multiplying the peeled factors back together recovers both series
  std::vector<Poly> hq(n + 1), et(n + 1);
  hq[0] = et[0] = Poly::constant(1);
  for (long m = 1; m <= n; ++m)
    for (long j = m; j <= n; ++j) {
      hq[j] += fam.q[m] * hq[j - m];
      et[j] += fam.t[m] * et[j - m];
    }
  bool hq_ok = true, et_ok = true;
  for (long j = 0; j <= n; ++j) {
    hq_ok = hq_ok && hq[j] == fam.h[j];
    et_ok = et_ok && et[j] == fam.e[j];
  }
  checks.push_back({"factor product re-expands the complete family", hq_ok});
  checks.push_back({"factor product re-expands the elementary family", et_ok});

  bool conv_ok = true;
  for (long m = 1; m <= n; ++m) {
    Poly conv;
    for (long k = 0; k <= m; ++k) {
      Poly term = fam.e[k] * fam.h[m - k];
      conv += (m - k) % 2 ? -term : term;
    }
    conv_ok = conv_ok && conv.is_zero();
  }
  checks.push_back({"complete and elementary families convolve to one", conv_ok});

  return emit_checks(checks, format, out_path);
}

// --- freelie -------------------------------------------------------------

int run_freelie(long rank, long cap, const std::string& module_path,
                const std::string& ring_spec, const std::string& format,
                const std::string& out_path) {
  if (rank < 1 || rank > 8) throw ConfigError("rank out of range (1..8)");
  if (cap < 1 || cap > 40) throw ConfigError("cap out of range (1..40)");
  auto R = ring_from_flag(ring_spec);
  GradedSeries h = read_graded_series(slurp(module_path), R, static_cast<unsigned>(rank),
                                      static_cast<unsigned>(cap));
  GradedSeries dims = lie_components(h);
  if (format == "json") {
    write_out(out_path, write_graded_series(dims));
    return 0;
  }
  Table t;
  t.header = {"degree", "parity", "dimension"};
  for (const auto& [idx, value] : dims.terms()) {
    std::string alpha;
    for (std::size_t i = 0; i < idx.alpha.size(); ++i)
      alpha += (i ? " " : "") + std::to_string(idx.alpha[i]);
    t.rows.push_back({alpha, std::to_string(idx.parity), value.str()});
  }
  write_out(out_path, t.render(format));
  return 0;
}

// --- replicable-check ----------------------------------------------------

int run_replicable_check(const std::string& in_path, long order, long amax,
                         const std::string& out_path) {
  if (order < 1 || order > 256) throw ConfigError("order out of range (1..256)");
  if (amax < 1 || amax > 8) throw ConfigError("replicate count out of range (1..8)");
  QSeries f = read_qseries(slurp(in_path));
  if (f.order() < static_cast<unsigned>(order))
    throw ConfigError("series carries only " + std::to_string(f.order()) +
                      " coefficients, order " + std::to_string(order) + " requested");
  QSeries g = f.truncated(static_cast<unsigned>(order));
  HTable table(g);
  ReplicableReport rep = is_replicable(table);

  json doc;
  doc["order"] = order;
  doc["replicable"] = rep.replicable;
  doc["violations"] = json::array();
  doc["replicates"] = json::object();
  int code = rep.replicable ? 0 : 1;
  if (rep.replicable) {
    ReplicateFamily fam(g, static_cast<unsigned>(amax));
    for (unsigned s = 1; s <= fam.count(); ++s) {
      json tail = json::array();
      const QSeries& r = fam.replicate(s);
      for (unsigned k = 1; k <= r.order(); ++k) tail.push_back(format_rational(r.coeff(k)));
      doc["replicates"][std::to_string(s)] = tail;
    }
    doc["consistent"] = fam.consistent();
    if (!fam.consistent()) code = 1;
  } else {
    doc["violations"].push_back(
        {rep.witness[0], rep.witness[1], rep.witness[2], rep.witness[3]});
    // no family was extracted, so there is nothing to pronounce consistent
    doc["consistent"] = nullptr;
  }
  write_out(out_path, doc.dump(2) + "\n");
  return code;
}

// --- moonshine-demo ------------------------------------------------------

int run_moonshine(long order, const std::string& format, const std::string& out_path) {
  if (order < 8 || order > 128) throw ConfigError("order out of range (8..128)");
  QSeries jj = j_invariant(static_cast<unsigned>(order));
  std::vector<IdentityCheck> checks;
  checks.push_back({"first coefficient is 196884", jj.coeff(1) == Rat(196884)});

  HTable table(jj);
  checks.push_back({"duplication scan is clean", is_replicable(table).replicable});

  unsigned amax = order >= 9 ? 3 : 2;
  FamilyReport fam = completely_replicable_check(jj, amax);
  checks.push_back({"replicates substitute back into the table", fam.substitution_ok});
  bool reps_ok = true;
  for (const auto& [s, r] : fam.replicate_checks) reps_ok = reps_ok && r.replicable;
  checks.push_back({"every replicate passes its own scan", reps_ok});

  LogCheckReport lg = log_identity_check(jj, static_cast<unsigned>(std::min(order, 12L)));
  checks.push_back({"coefficient table matches the kernel logarithm", lg.log_identity_ok});
  checks.push_back({"direct multiset formula agrees", lg.multiset_ok});

  unsigned half = static_cast<unsigned>(std::min((order + 1) / 2, 8L));
  ProductReport pr = difference_product_check(jj, half, half);
  checks.push_back({"two variable product telescopes", pr.ok});

  return emit_checks(checks, format, out_path);
}

// --- diagram-check -------------------------------------------------------

Elem random_elem(const RingPtr& r, std::mt19937_64& rng, bool symbolic) {
  long num = static_cast<long>(rng() % 19) - 9;
  if (r->uses_poly()) {
    if (!symbolic) return Elem::integer(r, num);
    VarId v = static_cast<VarId>(1 + rng() % r->var_count());
    return Elem(r, Poly::variable(v)).scaled(Rat(num));
  }
  if (!r->integral()) {
    Rat value(num, static_cast<long>(1 + rng() % 3));
    value.canonicalize();
    return Elem::rational(r, value);
  }
  return Elem::integer(r, num);
}

int run_diagram_check(long n, const std::string& ring_spec, const std::string& format,
                      const std::string& out_path) {
  if (n < 2 || n > 24) throw ConfigError("order out of range (2..24)");
  auto R = ring_from_flag(ring_spec);
  if (R->uses_poly() && n > 16) throw ConfigError("symbolic rings are capped at order 16");
  std::mt19937_64 rng(905);
  auto coords = [&](std::size_t m) {
    std::vector<Elem> c;
    // two symbolic slots keep polynomial growth in hand on free rings
    for (std::size_t i = 0; i < m; ++i) c.push_back(random_elem(R, rng, i < 2));
    return c;
  };
  WittVec a(R, coords(n)), b(R, coords(n));
  std::vector<IdentityCheck> checks;

  auto ga = a.ghost(), gb = b.ghost();
  auto gsum = (a + b).ghost(), gprod = (a * b).ghost();
  bool add_ok = true, mul_ok = true;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    add_ok = add_ok && gsum[i] == ga[i] + gb[i];
    mul_ok = mul_ok && gprod[i] == ga[i] * gb[i];
  }
  checks.push_back({"ghost map is additive", add_ok});
  checks.push_back({"ghost map is multiplicative", mul_ok});
  checks.push_back({"ghost inversion recovers the vector", WittVec::from_ghost(R, ga) == a});

  NeckVec na = necklace_from_witt(a), nb = necklace_from_witt(b);
  checks.push_back({"transfer is additive", necklace_from_witt(a + b) == na + nb});
  checks.push_back({"transfer respects the coupled product", necklace_from_witt(a * b) == na * nb});
  checks.push_back({"transfer round trips", witt_from_necklace(na) == a});
  checks.push_back({"both ghost legs agree", na.ghost() == ga});

  auto ea = exp_map(a), eb = exp_map(b);
  checks.push_back({"series leg is additive", exp_map(a + b) == ea.oplus(eb)});
  checks.push_back({"series leg respects the coupled product", exp_map(a * b) == ea.star1(eb)});
  checks.push_back({"series leg round trips", exp_inverse(ea) == a});
  checks.push_back({"triangle through the transfer commutes", sym_map(na) == ea});

  checks.push_back({"shift transports to the series side",
                    exp_map(a.verschiebung(2)) == ea.verschiebung(2)});
  checks.push_back({"trace transports to the series side",
                    exp_map(a.frobenius(2)) == ea.frobenius(2)});

  auto dl = ea.dlog();
  bool dlog_ok = true;
  for (std::size_t i = 0; i < dl.size(); ++i) dlog_ok = dlog_ok && dl[i] == ga[i];
  checks.push_back({"log derivative reads off the ghost", dlog_ok});

  return emit_checks(checks, format, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for Witt vectors, necklace algebras and principal q-series"};
  app.require_subcommand(1);
  auto fmt_check = CLI::IsMember({"text", "csv", "json"});

  struct {
    long n = 8;
    std::string ring = "int", format = "text", output;
  } wt;
  auto* wt_cmd = app.add_subcommand("witt-table", "coordinates and ghost components side by side");
  wt_cmd->add_option("--n", wt.n, "truncation order");
  wt_cmd->add_option("--ring", wt.ring, "coefficient ring: int, rat or free:D");
  wt_cmd->add_option("--format", wt.format, "text, csv or json")->check(fmt_check);
  wt_cmd->add_option("--output", wt.output, "write here instead of stdout");

  struct {
    long r = 2, n = 8;
    std::string format = "text", output;
  } nt;
  auto* nt_cmd = app.add_subcommand("necklace-table", "necklace counts of a constant alphabet with their ghost sums");
  nt_cmd->add_option("--r", nt.r, "alphabet size");
  nt_cmd->add_option("--n", nt.n, "truncation order");
  nt_cmd->add_option("--format", nt.format, "text, csv or json")->check(fmt_check);
  nt_cmd->add_option("--output", nt.output, "write here instead of stdout");

  struct {
    long degree = 8;
    std::string format = "text", output;
  } pc;
  auto* pc_cmd = app.add_subcommand("plethysm-check", "symmetric function identities up to a degree");
  pc_cmd->add_option("--degree", pc.degree, "truncation degree");
  pc_cmd->add_option("--format", pc.format, "text, csv or json")->check(fmt_check);
  pc_cmd->add_option("--output", pc.output, "write here instead of stdout");

  struct {
    long a = 2, b = 2, n = 6;
    std::string format = "text", output;
  } ss;
  auto* ss_cmd = app.add_subcommand("supersym", "generator families of the supersymmetric algebra");
  ss_cmd->add_option("--a", ss.a, "first alphabet size");
  ss_cmd->add_option("--b", ss.b, "second alphabet size");
  ss_cmd->add_option("--n", ss.n, "degree bound");
  ss_cmd->add_option("--format", ss.format, "text, csv or json")->check(fmt_check);
  ss_cmd->add_option("--output", ss.output, "write here instead of stdout");

  struct {
    long rank = 2, cap = 8;
    std::string module_path, ring = "rat", format = "text", output;
  } fl;
  auto* fl_cmd = app.add_subcommand("freelie", "graded dimensions generated by a module file");
  fl_cmd->add_option("--rank", fl.rank, "number of grading directions");
  fl_cmd->add_option("--cap", fl.cap, "height cap");
  fl_cmd->add_option("--module", fl.module_path, "JSON term list of the generating module")->required();
  fl_cmd->add_option("--ring", fl.ring, "coefficient ring: int, rat or free:D");
  fl_cmd->add_option("--format", fl.format, "text, csv or json")->check(fmt_check);
  fl_cmd->add_option("--output", fl.output, "write here instead of stdout");

  struct {
    std::string input, output;
    long order = 8, replicates = 1;
  } rc_opt;
  auto* rc_cmd = app.add_subcommand("replicable-check", "duplication scan and replicate extraction for a series file");
  rc_cmd->add_option("--input", rc_opt.input, "JSON series tail")->required();
  rc_cmd->add_option("--order", rc_opt.order, "number of coefficients to scan");
  rc_cmd->add_option("--replicates", rc_opt.replicates, "how many replicate layers to extract");
  rc_cmd->add_option("--output", rc_opt.output, "write here instead of stdout");

  struct {
    long order = 24;
    std::string format = "text", output;
  } md;
  auto* md_cmd = app.add_subcommand("moonshine-demo", "full battery on the modular expansion");
  md_cmd->add_option("--order", md.order, "number of coefficients");
  md_cmd->add_option("--format", md.format, "text, csv or json")->check(fmt_check);
  md_cmd->add_option("--output", md.output, "write here instead of stdout");

  struct {
    long n = 12;
    std::string ring = "int", format = "text", output;
  } dc;
  auto* dc_cmd = app.add_subcommand("diagram-check", "commutation of the ghost, transfer and series legs");
  dc_cmd->add_option("--n", dc.n, "truncation order");
  dc_cmd->add_option("--ring", dc.ring, "coefficient ring: int, rat or free:D");
  dc_cmd->add_option("--format", dc.format, "text, csv or json")->check(fmt_check);
  dc_cmd->add_option("--output", dc.output, "write here instead of stdout");

  int rc = 0;
  wt_cmd->callback([&] { rc = run_witt_table(wt.n, wt.ring, wt.format, wt.output); });
  nt_cmd->callback([&] { rc = run_necklace_table(nt.r, nt.n, nt.format, nt.output); });
  pc_cmd->callback([&] { rc = run_plethysm_check(pc.degree, pc.format, pc.output); });
  ss_cmd->callback([&] { rc = run_supersym(ss.a, ss.b, ss.n, ss.format, ss.output); });
  fl_cmd->callback([&] {
    rc = run_freelie(fl.rank, fl.cap, fl.module_path, fl.ring, fl.format, fl.output);
  });
  rc_cmd->callback([&] {
    rc = run_replicable_check(rc_opt.input, rc_opt.order, rc_opt.replicates, rc_opt.output);
  });
  md_cmd->callback([&] { rc = run_moonshine(md.order, md.format, md.output); });
  dc_cmd->callback([&] { rc = run_diagram_check(dc.n, dc.ring, dc.format, dc.output); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const IntegralityError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const TruncationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PivotError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
