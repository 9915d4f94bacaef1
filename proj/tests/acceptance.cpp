// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "cyclo/contact.hpp"
#include "cyclo/hoch.hpp"
#include "cyclo/liebi.hpp"
#include "cyclo/linfty.hpp"
#include "cyclo/specfile.hpp"

using namespace cyclo;

namespace {

// Time limits in seconds; all comparisons are exact.
constexpr double kAinfLimit = 5.0;  // per fixture
constexpr double kSquareLimit = 60.0;
constexpr double kBialgebraLimit = 120.0;
constexpr double kContactLimit = 30.0;
constexpr int kSquareN = 6;
constexpr int kDualityN = 5;
constexpr int kLedgerN = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name + ".json";
}

SpecFile load(const std::string& name, std::optional<Field> f = std::nullopt) {
  return load_spec(fixture(name), f);
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
};

int failures = 0;

void criterion(const std::string& name, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double t = seconds_since(t0);
  if (limit > 0 && t >= limit) o.require(false, "time limit");
  std::ostringstream head;
  head << (o.pass ? "PASS " : "FAIL ") << name << "  [" << std::fixed << std::setprecision(2)
       << t << "s";
  if (limit > 0) head << " < " << limit << "s";
  head << ", exact]";
  std::cout << head.str() << "\n";
  for (auto& n : o.notes) std::cout << "    " << n << "\n";
  if (!o.pass) ++failures;
}

const std::vector<std::string> kValid{"lambda-eps", "cycpair", "cycodd", "cl-fuk-toy"};

struct Mutant {
  std::string fixture;
  std::set<std::string> validators;
  std::set<std::string> families;
};

const std::vector<Mutant> kMutants{
    {"cycpair-flip", {"cyclic"}, {"chain-compat", "coboundary-compat"}},
    {"cycpair-drop", {"cyclic"}, {"chain-compat", "coboundary-compat"}},
    {"cycpair-selfloop", {"ainf", "star"}, {"coboundary-compat"}},
    {"cycpair-degshift", {"ainf", "star"}, {"degree"}},
    {"cycpair-parity",
     {"ainf", "star"},
     {"skew", "jacobi", "chain-compat", "co-jacobi", "coboundary-compat", "drinfeld",
      "involutivity", "degree"}},
    {"cycpair-weight",
     {"star"},
     {"skew", "jacobi", "chain-compat", "co-jacobi", "coboundary-compat", "drinfeld",
      "involutivity"}},
    {"cycpair-mode",
     {"star"},
     {"skew", "jacobi", "chain-compat", "co-jacobi", "coboundary-compat", "drinfeld",
      "involutivity"}},
};

int arity_of(const SpecFile& s) {
  if (s.options.max_arity > 0) return s.options.max_arity;
  return s.cyclic ? s.cyc.max_length() : s.direct.max_arity();
}

/// Failing validator names; every failure must carry a witness.
std::set<std::string> failing_validators(const SpecFile& s, bool& witnessed) {
  std::vector<ValidationReport> reps{check_ainf(s.category(), arity_of(s))};
  if (s.cyclic) {
    reps.push_back(check_cyclic(s.cyc));
    reps.push_back(check_star(s.cyc));
  }
  std::set<std::string> out;
  witnessed = true;
  for (auto& r : reps)
    if (!r.pass) {
      out.insert(r.check);
      witnessed &= !r.witnesses.empty();
    }
  return out;
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (auto& x : s) out += (out.empty() ? "" : ",") + x;
  return "{" + out + "}";
}

bool same_betti(const BettiTable& a, const BettiTable& b) {
  auto at = [](const BettiTable& t, int k) {
    auto it = t.find(k);
    return it == t.end() ? 0L : static_cast<long>(it->second);
  };
  std::set<int> keys;
  for (auto& [k, v] : a) keys.insert(k);
  for (auto& [k, v] : b) keys.insert(k);
  for (int k : keys)
    if (at(a, k) != at(b, k)) return false;
  return true;
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

int main() {
  criterion("A-infinity gate (each fixture < 5s)", 0, [](Outcome& o) {
    for (auto name : {"lambda-eps", "cycpair"}) {
      auto t0 = Clock::now();
      auto s = load(name);
      auto r = check_ainf(s.category(), arity_of(s));
      o.require(r.pass, std::string(name) + " passes");
      o.require(seconds_since(t0) < kAinfLimit, std::string(name) + " under time limit");
    }
    auto bad = load("lambda-eps-bad");
    auto rb = check_ainf(bad.category(), arity_of(bad));
    o.require(!rb.pass && !rb.witnesses.empty(), "lambda-eps-bad fails with witness");
    if (!rb.pass) o.notes.push_back("lambda-eps-bad: " + rb.witnesses.front());
    auto ca = load("cycpair-ainf");
    auto rc = check_ainf(ca.category(), arity_of(ca));
    o.require(!rc.pass && !rc.witnesses.empty(), "cycpair-ainf fails ainf with witness");
    for (auto& m : kMutants) {
      auto t0 = Clock::now();
      bool witnessed = false;
      auto got = failing_validators(load(m.fixture), witnessed);
      o.require(got == m.validators && witnessed,
                m.fixture + " fails " + join(m.validators) + ", got " + join(got));
      o.require(seconds_since(t0) < kAinfLimit, m.fixture + " under time limit");
    }
  });

  criterion("d^2 = 0 over Q and mod 2, reduction agrees", kSquareLimit, [](Outcome& o) {
    for (auto& name : kValid) {
      auto cq = load(name).category();
      auto cm = load(name, Field::Mod2).category();
      auto tq = build_truncated(cq, kSquareN, false), tm = build_truncated(cm, kSquareN, false);
      o.require(compose(*tq.d, *tq.d).is_zero(), name + " b^2 over Q");
      o.require(compose(*tm.d, *tm.d).is_zero(), name + " b^2 mod 2");
      o.require(reduce_mod2(*tq.d) == *tm.d, name + " Hochschild reduction");
      auto yq = build_cyclic(cq, kSquareN, false), ym = build_cyclic(cm, kSquareN, false);
      o.require(compose(*yq.d, *yq.d).is_zero(), name + " cyclic b^2 over Q");
      o.require(compose(*ym.d, *ym.d).is_zero(), name + " cyclic b^2 mod 2");
      o.require(reduce_mod2(*yq.d) == *ym.d, name + " cyclic reduction");
    }
    auto broken = build_truncated(load("cycpair-ainf").category(), kSquareN, false);
    o.require(!compose(*broken.d, *broken.d).is_zero(), "cycpair-ainf has b^2 != 0");
  });

  criterion("duality of Betti tables", 0, [](Outcome& o) {
    for (auto& name : kValid)
      for (Field f : {Field::Rational, Field::Mod2}) {
        auto cat = load(name, f).category();
        for (int N = 1; N <= kDualityN; ++N) {
          auto cx = build_truncated(cat, N);
          o.require(same_betti(betti(cx), betti(dualize(cx))),
                    name + " Hochschild N=" + std::to_string(N));
          auto cc = build_cyclic(cat, N);
          o.require(same_betti(betti(cc), betti(dualize(cc))),
                    name + " cyclic N=" + std::to_string(N));
        }
      }
  });

  criterion("Lie bialgebra suite", kBialgebraLimit, [](Outcome& o) {
    auto r = verify_bialgebra(load("cycpair").cyc, 6, 2);
    o.require(r.families.size() == 8, "eight families reported");
    for (auto& f : r.families) o.require(f.pass, "cycpair N=6 W=2 " + f.check);
    for (auto& m : kMutants) {
      auto s = load(m.fixture);
      auto mr = verify_bialgebra(s.cyc, s.options.N, s.options.W, false);
      auto f = mr.failing();
      std::set<std::string> got(f.begin(), f.end());
      o.require(got == m.families, m.fixture + " fails " + join(m.families) + ", got " + join(got));
    }
  });

  criterion("degree ledger", 0, [](Outcome& o) {
    for (auto name : {"cycpair", "cycodd", "cl-fuk-toy"})
      for (int N = 1; N <= kLedgerN; ++N)
        o.require(degree_ledger(load(name).cyc, N).pass, std::string(name) + " N=" + std::to_string(N));
    o.require(!degree_ledger(load("cycpair-degshift").cyc, kLedgerN).pass, "degshift detected");
  });

  criterion("Lie-infinity suite", 0, [](Outcome& o) {
    auto so3 = chevalley_eilenberg(*load("linfty-so3").lie_bracket);
    o.require(check_linfty(so3, 4).pass, "Chevalley-Eilenberg passes to arity 4");
    auto bad = chevalley_eilenberg(*load("linfty-so3-bad").lie_bracket);
    o.require(check_linfty(bad, 2).pass, "Jacobi mutation passes arity 2");
    auto r3 = check_linfty(bad, 3);
    o.require(!r3.pass && !r3.witnesses.empty() && r3.witnesses.front().rfind("arity 3", 0) == 0,
              "Jacobi mutation fails at arity 3");
    auto exact = *load("linfty-exact").linfty;
    o.require(check_linfty(exact, 4).pass, "exact fixture is Lie-infinity");
    o.require(!jacobi_residual(exact).pass, "chain-level Jacobi residual nonzero");
    auto ib = induced_bracket(exact);
    o.require(jacobi_residual(ib.homology).pass, "homology Jacobi residual zero");
  });

  criterion("contact suite", kContactLimit, [](Outcome& o) {
    auto toy = load("cl-toy");
    o.require(check_d_squared(*toy.contact).pass, "cl-toy d^2 = 0");
    o.require(check_cl_skew(*toy.contact).pass, "cl-toy bracket skew");
    auto fuk = load("cl-fuk-toy");
    o.require(check_cl_skew(*fuk.contact).pass, "cl-fuk-toy bracket skew");
    o.require(check_chain_map(*fuk.contact, fuk.cyc, fuk.options.N).pass, "cl-fuk-toy chain map");
    o.require(linfty_morphism_residual(*fuk.contact, fuk.cyc, 2, fuk.options.N).pass,
              "cl-fuk-toy k=2 residual");
    auto witness = [&](const std::string& what, const ValidationReport& r) {
      o.require(!r.pass && !r.witnesses.empty(), what);
      if (!r.witnesses.empty()) o.notes.push_back(what + ": " + r.witnesses.front());
    };
    witness("cl-toy-d2", check_d_squared(*load("cl-toy-d2").contact));
    witness("cl-toy-skew", check_cl_skew(*load("cl-toy-skew").contact));
    auto pert = load("cl-fuk-toy-perturbed");
    witness("cl-fuk-toy-perturbed", check_chain_map(*pert.contact, pert.cyc, pert.options.N, false));
    auto zero = load("cl-fuk-toy-r2zero");
    witness("cl-fuk-toy-r2zero",
            linfty_morphism_residual(*zero.contact, zero.cyc, 2, zero.options.N, false));
    try {
      load("cl-toy-badorbit");
      o.require(false, "cl-toy-badorbit rejected");
    } catch (const ResolutionError& e) {
      o.notes.push_back(std::string("cl-toy-badorbit: ") + e.what());
    }
  });

  criterion("determinism of reports", 0, [](Outcome& o) {
    std::vector<std::string> commands{"validate", "linfty", "bialgebra"};
    for (auto c : {"hoch", "cyclic", "dual-hoch", "dual-cyclic"})
      commands.push_back(std::string("homology --N 4 --complex ") + c);
    for (auto c : {"d2", "skew", "chainmap", "linfty-2"})
      commands.push_back(std::string("contact --check ") + c);
    std::vector<std::string> names;
    for (auto& e : std::filesystem::directory_iterator(FIXTURE_DIR))
      if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
    std::sort(names.begin(), names.end());
    int runs = 0;
    for (auto& n : names)
      for (auto& c : commands) {
        auto sp = c.find(' ');
        std::string sub = c.substr(0, sp), rest = sp == std::string::npos ? "" : c.substr(sp);
        std::string args = sub + " " + fixture(n) + rest + " --format json";
        CliRun a = run_cli(args), b = run_cli(args);
        o.require(a.out == b.out && a.code == b.code, n + ": " + c);
        runs += 2;
      }
    o.notes.push_back(std::to_string(runs) + " runs over " + std::to_string(names.size()) +
                      " fixtures");
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
