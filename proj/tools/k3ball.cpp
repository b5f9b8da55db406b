// k3ball: command-line front end for the lattice toolkit and verification suite.
#include "k3ball/checks.hpp"
#include "k3ball/disc_form.hpp"
#include "k3ball/eigen_ball.hpp"
#include "k3ball/models.hpp"
#include "k3ball/points.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace k3ball;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad seed \"" + text + "\" (expected e.g. 0x4B334C)");
  }
}

// Named model, catalog expression ("U+V+A4"), or a JSON file {"rank": n, "gram": [[...]]}.
IntLattice load_lattice(const std::string& spec) {
  const auto names = model_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return model(spec);
  if (spec == "config") return curve_config().span.lattice;
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw UsageError(spec + ": " + e.what());
    }
    if (!j.contains("gram") || !j["gram"].is_array()) throw UsageError(spec + ": missing \"gram\" array");
    const auto& g = j["gram"];
    std::size_t n = g.size();
    if (j.contains("rank") && j["rank"].get<std::size_t>() != n) throw UsageError(spec + ": rank does not match gram size");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!g[i].is_array() || g[i].size() != n) throw UsageError(spec + ": gram is not square");
      for (std::size_t k = 0; k < n; ++k) {
        const auto& x = g[i][k];
        if (x.is_number_integer()) m(i, k) = x.get<std::int64_t>();
        else if (x.is_string()) m(i, k) = BigInt(x.get<std::string>());
        else throw UsageError(spec + ": gram entries must be integers");
      }
    }
    return IntLattice(m, std::filesystem::path(spec).stem().string());
  }
  try {
    return catalog_lattice(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError("unknown lattice \"" + spec + "\": " + e.what());
  }
}

std::string render_complex(std::complex<double> z) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return out.str();
}

// a x + b y, dropping zero terms and unit coefficients.
std::string linear_form(const Rational& a, const Rational& b) {
  std::string out;
  auto term = [&](const Rational& c, const char* var) {
    if (c == 0) return;
    Rational m = abs(c);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (m != 1) out += to_string(m);
    out += var;
  };
  term(a, "x");
  term(b, "y");
  return out.empty() ? "0" : out;
}

int cmd_verify(const std::string& suite, const std::string& seed_text, unsigned jobs, const std::string& format,
               bool timing) {
  std::uint64_t seed = parse_seed(seed_text);
  std::vector<CheckReport> reports;
  try {
    reports = run_suite(suite, seed, jobs == 0 ? 1 : jobs, timing);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (format == "json")
    std::cout << reports_to_json(reports).dump(2) << "\n";
  else
    std::cout << reports_to_text(reports);
  return all_passed(reports) ? 0 : 1;
}

int cmd_lattice(const std::string& spec, bool inv, bool disc, const std::optional<std::string>& enumerate) {
  IntLattice l = load_lattice(spec);
  if (!inv && !disc && !enumerate) inv = true;
  if (inv) {
    auto i = invariants(l);
    std::cout << "rank      " << i.rank << "\n"
              << "det       " << i.det << "\n"
              << "signature (" << i.signature.positive << "," << i.signature.negative << ")\n"
              << "even      " << (i.even ? "yes" : "no") << "\n";
  }
  if (disc) {
    if (!l.even()) throw UsageError("discriminant form needs an even lattice");
    DiscForm d(l);
    std::cout << "A_L       ";
    if (d.invariant_factors().empty()) std::cout << "0";
    for (std::size_t k = 0; k < d.invariant_factors().size(); ++k)
      std::cout << (k ? " + " : "") << "Z/" << d.invariant_factors()[k];
    std::cout << "  (order " << d.order() << ")\n";
    for (std::size_t g = 0; g < d.invariant_factors().size(); ++g) {
      std::cout << "  q(g" << g + 1 << ") = " << to_string(d.q(d.generator(g))) << "  b:";
      for (std::size_t h = 0; h < d.invariant_factors().size(); ++h)
        std::cout << " " << to_string(d.b(d.generator(g), d.generator(h)));
      std::cout << "\n";
    }
  }
  if (enumerate) {
    BigInt norm;
    try {
      norm = BigInt(*enumerate);
    } catch (const std::exception&) {
      throw UsageError("bad norm \"" + *enumerate + "\"");
    }
    if (!is_negative_definite(l.gram())) throw UsageError("--enumerate needs a negative definite lattice");
    auto vecs = enumerate_norm_vectors(l, norm);
    std::cout << vecs.size() << " vectors of norm " << norm << " up to sign\n";
    for (const auto& v : vecs) {
      std::cout << " ";
      for (const auto& x : v) std::cout << " " << x;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_classify(const std::string& text) {
  PointConfig c = [&] {
    try {
      return PointConfig::parse(text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  auto cls = classify(c);
  std::cout << "class     " << to_string(cls.stability) << "\n"
            << "partition " << partition_string(cls.partition) << "\n";
  if (cls.stability != Stability::Stable) return 0;
  auto lat = case_lattices(cls.partition);
  std::cout << "lattices  " << lat.picard << ", " << lat.transcendental << "\n";
  auto eq = equations(c);
  if (eq.normalized) {
    std::cout << "normalize (x:y) -> (" << linear_form(eq.normalization[0], eq.normalization[1]) << " : "
              << linear_form(eq.normalization[2], eq.normalization[3]) << ")\n";
  }
  std::cout << "lambda   ";
  for (const auto& l : eq.lambdas) std::cout << " " << to_string(l);
  std::cout << "\nf5       ";
  for (const auto& f : eq.f5) std::cout << " " << to_string(f);
  std::cout << "\nsingular ";
  for (const auto& s : eq.singular_members) std::cout << " " << to_string(s.root) << ":" << s.type;
  std::cout << "\n";
  return 0;
}

int cmd_ball(int k) {
  if (k < 1 || k > 4) throw UsageError("--eigen must be 1, 2, 3 or 4");
  EigenBasis b = eigenspace(k);
  EigenForm f = eigen_form(b);
  Signature s = eigen_signature(f);
  std::cout << "eigenvalue z^" << k << " = " << render_complex(Cyclotomic::zeta_power(k).embed()) << "\n"
            << "dimension  " << b.basis.size() << "\n"
            << "signature  (" << s.positive << "," << s.negative << ")\n"
            << "form /5 on the echelon basis:\n";
  for (std::size_t i = 0; i < f.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < f.matrix.cols(); ++j) std::cout << "  [" << f.matrix(i, j).pretty() << "]";
    std::cout << "\n";
  }
  std::cout << "numeric:\n";
  for (std::size_t i = 0; i < f.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < f.matrix.cols(); ++j) std::cout << "  " << render_complex(f.matrix(i, j).embed());
    std::cout << "\n";
  }
  return 0;
}

int cmd_disc(const std::string& spec) {
  IntLattice l = load_lattice(spec);
  if (!l.even()) throw UsageError("discriminant form needs an even lattice");
  DiscForm d(l);
  Census c = census(d);
  std::cout << "type    count\n";
  std::cout << std::left << std::setw(8) << "(00)" << c.zero_element << "\n";
  for (const auto& [v, n] : c.ordered_rows())
    std::cout << std::left << std::setw(8) << ("(" + to_string(v) + ")") << n << "\n";
  std::cout << "total   " << c.total() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice computations for the moduli of five points on the projective line"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string suite = "all", seed = "0x4B334C", format = "text";
  unsigned jobs = 1;
  bool timing = false;
  verify->add_option("--suite", suite, "check id, dotted prefix, glob, or all");
  verify->add_option("--seed", seed, "RNG seed (hex or decimal)");
  verify->add_option("--jobs", jobs, "checks run concurrently")->check(CLI::Range(1u, 64u));
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timing", timing, "record wall time per check (breaks byte-identical output)");

  auto* lattice = app.add_subcommand("lattice", "invariants of a named, catalog or JSON lattice");
  std::string lat_spec;
  bool inv = false, disc = false;
  std::optional<std::string> enumerate;
  lattice->add_option("lattice", lat_spec, "model name, catalog expression or JSON file")->required();
  lattice->add_flag("--invariants", inv);
  lattice->add_flag("--disc", disc);
  lattice->add_option("--enumerate", enumerate, "list vectors of this norm (definite lattices)");

  auto* cls = app.add_subcommand("classify", "stability of five points on P^1");
  std::string points;
  cls->add_option("--points", points, "five tokens: a/b, integer or inf")->required();

  auto* ball = app.add_subcommand("ball", "hermitian form on a rho-eigenspace");
  int k = 1;
  ball->add_option("--eigen", k, "eigenvalue exponent 1..4")->required();

  auto* dsc = app.add_subcommand("disc", "discriminant form census");
  std::string disc_spec;
  bool table = false;
  dsc->add_option("lattice", disc_spec)->required();
  dsc->add_flag("--table", table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(suite, seed, jobs, format, timing);
    if (*lattice) return cmd_lattice(lat_spec, inv, disc, enumerate);
    if (*cls) return cmd_classify(points);
    if (*ball) return cmd_ball(k);
    if (*dsc) return cmd_disc(disc_spec);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
