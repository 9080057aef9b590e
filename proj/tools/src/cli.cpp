#include "posmap_tools/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "posmap/abelian.hpp"
#include "posmap/certify.hpp"
#include "posmap/choi.hpp"
#include "posmap/choifamily.hpp"
#include "posmap/symmetry.hpp"
#include "posmap_tools/matrix_file.hpp"

namespace posmap::tools {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", std::abs(v) < 1e-15 ? 0.0 : v);
  return buf;
}

std::string fmt(Complex z) {
  if (std::abs(z.imag()) < 1e-15) return fmt(z.real());
  std::string out = fmt(z.real());
  out += z.imag() < 0.0 ? "-" : "+";
  return out + fmt(std::abs(z.imag())) + "i";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

json to_json(std::span<const Complex> v) {
  json a = json::array();
  for (const Complex& z : v) a.push_back({z.real(), z.imag()});
  return a;
}

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_vector(std::ostream& out, std::span<const Complex> v) {
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << fmt(v[i]);
  out << "]";
}

void print_matrix(std::ostream& out, const ComplexMatrix& m, const std::string& indent) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent;
    print_vector(out, std::span<const Complex>(m.entries().data() + i * m.cols(), m.cols()));
    out << "\n";
  }
}

struct SearchFlags {
  std::uint64_t seed = 0;
  std::size_t restarts = 100;
  double tol = 1e-9;

  SeeSawOptions options() const {
    SeeSawOptions o;
    o.restarts = restarts;
    o.tol = tol;
    o.seed = seed;
    return o;
  }
};

void add_search_flags(CLI::App* cmd, SearchFlags& flags) {
  cmd->add_option("--seed", flags.seed, "Base seed of the random restarts")->capture_default_str();
  cmd->add_option("--restarts", flags.restarts, "Random restarts of the see-saw")
      ->capture_default_str();
  cmd->add_option("--tol", flags.tol, "Witness and convergence tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

// analyze

int cmd_analyze(const std::string& path, const SearchFlags& flags, bool as_json,
                std::ostream& out) {
  const BipartiteOperator rho = read_matrix_file(path).as_operator();
  const SeeSawOptions options = flags.options();
  const bool square = rho.dim1() == rho.dim2();

  json report;
  report["dim1"] = rho.dim1();
  report["dim2"] = rho.dim2();
  const bool hermitian = is_hermitian(rho.matrix(), 1e-10);
  report["hermitian"] = hermitian;
  report["trace"] = rho.trace().real();

  std::optional<BlockPositivityCertificate> cert;
  if (square) {
    const DMembershipReport mem = membership_D(rho, options);
    report["trace_ok"] = mem.trace_ok;
    report["unital"] = mem.unital;
    report["member_D"] = std::string(to_string(mem.verdict));
    cert = mem.block_positive;
  } else if (hermitian) {
    cert = block_positivity(rho, options);
  }
  if (cert) {
    report["block_positive"] = !cert->has_witness();
    report["min_product_value"] = cert->min_value_found;
    report["restarts"] = cert->restarts_used;
    report["converged_restarts"] = cert->converged_restarts;
    if (cert->has_witness()) {
      report["witness"] = {{"x", to_json(*cert->witness_x)}, {"y", to_json(*cert->witness_y)}};
    }
  }

  const InvolutionClass inv = classify_involution(rho);
  report["involution"] = std::string(to_string(inv.kind));
  if (inv.kind != InvolutionKind::Neither) {
    report["rank_p"] = inv.rank_p;
    report["rank_q"] = inv.rank_q;
  }
  if (hermitian) {
    report["cp"] = is_cp(rho);
    report["cocp"] = is_cocp(rho);
    if (square) report["alpha_estimate"] = alpha_norm(rho, options).value;
  }

  if (as_json) {
    out << report.dump(2) << "\n";
    return kExitOk;
  }
  out << "dimensions: " << rho.dim1() << " x " << rho.dim2() << "\n";
  out << "hermitian: " << yes_no(hermitian) << "\n";
  out << "trace: " << fmt(rho.trace().real()) << "\n";
  if (square) {
    out << "trace_ok: " << yes_no(report["trace_ok"].get<bool>()) << "\n";
    out << "unital: " << yes_no(report["unital"].get<bool>()) << "\n";
  }
  if (cert) {
    out << "block_positive: " << yes_no(!cert->has_witness()) << " (min product value "
        << fmt(cert->min_value_found) << ", " << cert->converged_restarts << "/"
        << cert->restarts_used << " restarts converged)\n";
    if (cert->has_witness()) {
      out << "witness_x: ";
      print_vector(out, *cert->witness_x);
      out << "\nwitness_y: ";
      print_vector(out, *cert->witness_y);
      out << "\n";
    }
  }
  if (square) out << "member_D: " << report["member_D"].get<std::string>() << "\n";
  out << "involution: " << to_string(inv.kind);
  if (inv.kind != InvolutionKind::Neither) {
    out << " (rank p " << inv.rank_p << ", rank q " << inv.rank_q << ")";
  }
  out << "\n";
  if (hermitian) {
    out << "cp: " << yes_no(report["cp"].get<bool>()) << "\n";
    out << "cocp: " << yes_no(report["cocp"].get<bool>()) << "\n";
    if (square) out << "alpha_estimate: " << fmt(report["alpha_estimate"].get<double>()) << "\n";
  }
  return kExitOk;
}

// gen

double parse_double(const std::string& s, const char* what) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || !std::isfinite(v)) throw UsageError(std::string("bad ") + what + ": " + s);
  return v;
}

std::size_t parse_count(const std::string& s, const char* what) {
  std::size_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw UsageError(std::string("bad ") + what + ": " + s);
  }
  return v;
}

MatrixFile generate(const std::string& name, const std::vector<std::string>& params,
                    std::uint64_t seed) {
  auto need = [&](std::size_t count, const char* usage) {
    if (params.size() != count) throw UsageError(std::string("usage: gen ") + usage);
  };
  auto index = [&](const std::string& s, std::size_t limit) {
    const std::size_t i = parse_count(s, "index");
    if (i < 1 || i > limit) {
      throw UsageError("index must lie in 1.." + std::to_string(limit));
    }
    return i - 1;
  };

  if (name == "w") {
    need(1, "w N");
    const std::size_t n = parse_count(params[0], "dimension");
    if (n < 1) throw UsageError("dimension must be positive");
    return MatrixFile::from_operator(transposition_choi(n));
  }
  if (name == "max_ent") {
    need(1, "max_ent N");
    const std::size_t n = parse_count(params[0], "dimension");
    if (n < 1) throw UsageError("dimension must be positive");
    return MatrixFile::from_operator(max_entangled_choi(n));
  }
  if (name == "wminus") {
    need(0, "wminus");
    return MatrixFile::from_operator(w_minus());
  }
  if (name == "r") {
    need(0, "r");
    return MatrixFile::from_operator(r_matrix());
  }
  if (name == "rho_lambda") {
    need(1, "rho_lambda LAMBDA");
    return MatrixFile::from_operator(rho_lambda(parse_double(params[0], "lambda")));
  }
  if (name == "choi_classic") {
    need(0, "choi_classic");
    return MatrixFile::from_operator(choi_map_classic());
  }
  if (name == "p_tensor_id") {
    need(0, "p_tensor_id");
    return MatrixFile::from_operator(product_with_identity(ComplexMatrix::unit(3, 0, 0), 3));
  }
  if (name == "random_symmetry") {
    if (params.size() > 1) throw UsageError("usage: gen random_symmetry [N] --seed S");
    const std::size_t n = params.empty() ? 3 : parse_count(params[0], "dimension");
    if (n < 1) throw UsageError("dimension must be positive");
    return MatrixFile::from_operator(random_symmetry_in_D(n, seed));
  }
  if (name == "partial_fixture") {
    need(1, "partial_fixture K (K = 1 or 2)");
    const std::size_t k = index(params[0], 2);
    return MatrixFile::from_operator(partial_symmetry_fixture(
        k == 0 ? PartialFixture::EmbeddedSwapPlusE12E3 : PartialFixture::EmbeddedSwapPlusE3E3));
  }
  if (name == "s0") {
    need(0, "s0");
    return MatrixFile::from_operator(s0_symmetry());
  }
  if (name == "k3dcex") {
    need(1, "k3dcex I (I = 1..3)");
    return MatrixFile::plain(example_3dcex_family().K[index(params[0], 3)]);
  }
  if (name == "choi_k") {
    need(1, "choi_k I (I = 1..3)");
    return MatrixFile::plain(restrict_to_diagonal(choi_map_classic()).K[index(params[0], 3)]);
  }
  if (name == "unit") {
    need(2, "unit N I");
    const std::size_t n = parse_count(params[0], "dimension");
    if (n < 1) throw UsageError("dimension must be positive");
    const std::size_t i = index(params[1], n);
    return MatrixFile::plain(ComplexMatrix::unit(n, i, i));
  }
  throw UsageError("unknown fixture name: " + name);
}

// reduce

int cmd_reduce(const std::string& path, double tol, bool as_json, std::ostream& out) {
  const BipartiteOperator s = read_matrix_file(path).as_operator();
  try {
    const ReductionResult r = reduce_to_transposition(s, tol);
    if (as_json) {
      json doc{{"reducible", true},
               {"u", to_json(r.u)},
               {"v", to_json(r.v)},
               {"entangled_vector", to_json(r.entangled_vector)},
               {"reconstruction_error", r.reconstruction_error}};
      out << doc.dump(2) << "\n";
    } else {
      out << "reducible: yes\nU:\n";
      print_matrix(out, r.u, "  ");
      out << "V:\n";
      print_matrix(out, r.v, "  ");
      out << "entangled_vector: ";
      print_vector(out, r.entangled_vector);
      out << "\nreconstruction_error: " << fmt(r.reconstruction_error) << "\n";
    }
    return kExitOk;
  } catch (const NotReducible& e) {
    if (as_json) {
      out << json{{"reducible", false}, {"reason", std::string(to_string(e.reason()))}}.dump(2)
          << "\n";
    } else {
      out << "reducible: no\nreason: " << to_string(e.reason()) << "\n";
    }
    return kExitNegative;
  }
}

// sweep-choi

int cmd_sweep(double step, const SearchFlags& flags, const std::string& out_path, bool segment,
              std::ostream& out, std::ostream& err) {
  std::ostringstream csv;
  std::size_t flagged = 0;
  std::size_t rows_written = 0;
  if (segment) {
    csv << "lambda,expected,verdict,min_value\n";
    for (const SegmentRow& row : sweep_rho_lambda(11, flags.options())) {
      const bool ok = (row.verdict == MembershipVerdict::Member) == row.expected_member;
      if (!ok) ++flagged;
      csv << shortest(row.lambda) << "," << (row.expected_member ? "member" : "non_member") << ","
          << to_string(row.verdict) << "," << shortest(row.min_value) << "\n";
      ++rows_written;
    }
  } else {
    if (!(step > 0.0)) throw UsageError("--grid-step must be positive");
    csv << "a,b,c,cond,cert,min_value\n";
    for (const SweepRow& row : sweep_choi_family(step, flags.options())) {
      if (row.disagreement) {
        ++flagged;
        err << "disagreement at a=" << shortest(row.params.a) << " b=" << shortest(row.params.b)
            << " c=" << shortest(row.params.c) << "\n";
      }
      csv << shortest(row.params.a) << "," << shortest(row.params.b) << ","
          << shortest(row.params.c) << "," << (row.condition ? "true" : "false") << ","
          << (row.certifier ? "true" : "false") << "," << shortest(row.min_value) << "\n";
      ++rows_written;
    }
  }

  if (out_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + out_path);
    file << csv.str();
    out << "rows: " << rows_written << "\ndisagreements: " << flagged << "\n";
  }
  return flagged ? kExitDisagreement : kExitOk;
}

// arveson

int cmd_arveson(const std::vector<std::string>& paths, double tol, bool as_json,
                std::ostream& out) {
  std::vector<ComplexMatrix> family;
  for (const std::string& p : paths) {
    ComplexMatrix m = read_matrix_file(p).matrix;
    if (!family.empty() && m.rows() != family.front().rows()) {
      throw UsageError("all operators must have the same size");
    }
    if (!is_hermitian(m, 1e-10)) throw UsageError(p + " is not Hermitian");
    family.push_back(std::move(m));
  }
  const ArvesonDecomposition given = ArvesonDecomposition::from_family(std::move(family));
  const std::size_t m = given.sum.rows();
  const bool unital = max_abs(given.sum - ComplexMatrix::identity(m)) <= tol;

  std::optional<ArvesonDecomposition> renormed;
  std::string renorm_error;
  if (!unital) {
    try {
      renormed = renormalize(given);
    } catch (const Error& e) {
      renorm_error = e.what();
    }
  }
  const ArvesonDecomposition& k = renormed ? *renormed : given;
  const ArvesonVerdict verdict = arveson_extreme_check(k, tol);
  const bool independent = weak_independence(k, tol);
  const bool cstar = is_cstar_extreme(k, std::max(tol, 1e-10));

  std::vector<std::pair<std::pair<std::size_t, std::size_t>, ComplexMatrix>> products;
  for (std::size_t i = 0; i < k.K.size(); ++i)
    for (std::size_t j = i + 1; j < k.K.size(); ++j) {
      ComplexMatrix prod = k.K[i] * k.K[j];
      if (max_abs(prod) > tol) products.push_back({{i + 1, j + 1}, std::move(prod)});
    }

  if (as_json) {
    json doc;
    doc["ranks"] = given.ranks;
    doc["sum_is_identity"] = unital;
    if (renormed) {
      json fam = json::array();
      for (const ComplexMatrix& ki : renormed->K) fam.push_back(to_json(ki));
      doc["renormalized"] = std::move(fam);
    }
    if (!renorm_error.empty()) doc["renormalize_error"] = renorm_error;
    doc["verdict"] = std::string(to_string(verdict));
    doc["weakly_independent"] = independent;
    doc["cstar_extreme"] = cstar;
    json prods = json::array();
    for (const auto& [ij, prod] : products)
      prods.push_back({{"i", ij.first}, {"j", ij.second}, {"product", to_json(prod)}});
    doc["nonzero_products"] = std::move(prods);
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  out << "operators: " << given.K.size() << " of size " << m << "\n";
  out << "ranks:";
  for (std::size_t r : given.ranks) out << " " << r;
  out << "\nsum_is_identity: " << yes_no(unital) << "\n";
  if (renormed) {
    out << "renormalized family S^{-1/2} K_i S^{-1/2}:\n";
    for (std::size_t i = 0; i < renormed->K.size(); ++i) {
      out << "  K~" << i + 1 << ":\n";
      print_matrix(out, renormed->K[i], "    ");
    }
  }
  if (!renorm_error.empty()) out << "renormalize: " << renorm_error << "\n";
  out << "verdict: " << to_string(verdict) << "\n";
  out << "weakly_independent: " << yes_no(independent) << "\n";
  out << "cstar_extreme: " << yes_no(cstar) << "\n";
  const std::string tag = renormed ? "K~" : "K";
  for (const auto& [ij, prod] : products) {
    out << tag << ij.first << " " << tag << ij.second << ":\n";
    print_matrix(out, prod, "  ");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analysis of positive maps through their Choi matrices", "posmap"};
  app.require_subcommand(1);

  SearchFlags search;
  bool as_json = false;
  std::string path;
  std::string out_path;

  auto* analyze = app.add_subcommand("analyze", "Membership, involution, CP/coCP and alpha report");
  analyze->add_option("file", path, "Matrix file")->required();
  add_search_flags(analyze, search);
  analyze->add_flag("--json", as_json, "Machine-readable output");

  std::string gen_name;
  std::vector<std::string> gen_params;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Write a fixture matrix file");
  gen->add_option("name", gen_name,
                  "w N | wminus | r | rho_lambda L | choi_classic | max_ent N | p_tensor_id | "
                  "random_symmetry [N] | partial_fixture K | s0 | k3dcex I | choi_k I | unit N I")
      ->required();
  gen->add_option("params", gen_params, "Fixture parameters");
  gen->add_option("--seed", gen_seed, "Seed for random fixtures")->capture_default_str();
  gen->add_option("--out", out_path, "Output path (stdout when omitted)");

  double reduce_tol = 1e-9;
  auto* reduce = app.add_subcommand("reduce", "Local-unitary reduction to the swap operator");
  reduce->add_option("file", path, "Matrix file")->required();
  reduce->add_option("--tol", reduce_tol, "Rank-one and Schmidt tolerance")->capture_default_str();
  reduce->add_flag("--json", as_json, "Machine-readable output");

  double step = 0.25;
  bool segment = false;
  auto* sweep = app.add_subcommand("sweep-choi", "Cross-check positivity conditions of phi_abc");
  sweep->add_option("--grid-step", step, "Grid step on [0,3]^3")->capture_default_str();
  add_search_flags(sweep, search);
  sweep->add_option("--out", out_path, "CSV path (stdout when omitted)");
  sweep->add_flag("--segment", segment, "Scan rho_lambda on 11 points instead");

  std::vector<std::string> paths;
  double arveson_tol = 1e-9;
  auto* arveson = app.add_subcommand("arveson", "Extremality of a family K_1..K_k");
  arveson->add_option("files", paths, "Matrix files")->required();
  arveson->add_option("--tol", arveson_tol, "Tolerance")->capture_default_str();
  arveson->add_flag("--json", as_json, "Machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(path, search, as_json, out);
    if (*gen) {
      const std::string text = serialize_matrix_file(generate(gen_name, gen_params, gen_seed));
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        file << text;
      }
      return kExitOk;
    }
    if (*reduce) return cmd_reduce(path, reduce_tol, as_json, out);
    if (*sweep) return cmd_sweep(step, search, out_path, segment, out, err);
    if (*arveson) return cmd_arveson(paths, arveson_tol, as_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace posmap::tools
