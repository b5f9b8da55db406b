// Acceptance driver: one PASS/FAIL line per criterion. `--only N` restricts to one criterion.
#include "k3ball/checks.hpp"

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>

using namespace k3ball;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> checks;
  double max_seconds;  // 0: no bound
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "curve span rank/det, S0, relations, A_S", {"config.relations", "config.span", "config.s0"}, 1.0},
      {2, "three discriminant generators", {"disc.s.generators"}, 0},
      {3, "discriminant isomorphisms and anti-isometries",
       {"disc.s.model", "disc.anti.s_t", "disc.anti.s1_t1", "disc.anti.s2_t2"}, 30.0},
      {4, "lattices M and N", {"lattice.m", "lattice.n"}, 1.0},
      {5, "order-5 isometry rho", {"rho"}, 0},
      {6, "isotropic sweep", {"sweep.isotropic"}, 0},
      {7, "root orbit sweep", {"sweep.roots"}, 0},
      {8, "hermitian module and phi", {"hermitian.matrix", "hermitian.phi"}, 0},
      {9, "hermitian reflections", {"reflection.e1", "reflection.sampled"}, 0},
      {10, "eigenvector norms and eigen signatures", {"eigen.norms", "eigen.signatures"}, 0},
      {11, "census, |O(q_T)|, reflection group, lines", {"census", "orthogonal.order", "reflection.group", "lines"}, 60.0},
      {12, "gluing and extension of isometry pairs", {"glue", "glue.extend"}, 0},
      {13, "classifier and case lattices", {"classify"}, 0},
      {14, "byte-identical verify reports", {}, 0},
  };
  return list;
}

std::string capture(const std::string& cmd, int& status) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  status = pclose(pipe.release());
  return out;
}

bool run_criterion(const Criterion& c, const std::string& cli, std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  if (c.number == 14) {
    const std::string cmd = cli + " verify --suite all --seed 0x4B334C --format json";
    int s1 = 0, s2 = 0;
    std::string a = capture(cmd, s1), b = capture(cmd, s2);
    ok = !a.empty() && a == b;
    detail = std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different");
  } else {
    std::vector<CheckReport> reports;
    for (const auto& id : c.checks) {
      auto r = run_suite(id, kDefaultSeed);
      reports.insert(reports.end(), r.begin(), r.end());
    }
    for (const auto& r : reports) {
      if (r.status == CheckStatus::Pass) continue;
      ok = false;
      detail += (detail.empty() ? "" : "; ") + r.check + " " + r.witness.dump();
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.max_seconds > 0 && secs > c.max_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time bound");
  }
  char t[32];
  std::snprintf(t, sizeof t, "%.2fs", secs);
  detail = detail.empty() ? t : detail + " (" + t + ")";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  std::string cli = K3BALL_CLI;
  app.add_option("--only", only, "run one criterion")->check(CLI::Range(1, 14));
  app.add_option("--cli", cli, "path to the k3ball executable");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (const auto& c : criteria()) {
    if (only && c.number != only) continue;
    std::string detail;
    bool ok = run_criterion(c, cli, detail);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " -- " << detail << std::endl;
    failed += !ok;
  }
  return failed ? 1 : 0;
}
