// Acceptance runner: one PASS/FAIL line per criterion.
//
//   tripext_acceptance [--known-red N]...
//
// Exits 0 when every criterion passes or fails only among the --known-red
// ones (those are still printed as FAIL).

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tripext/cube.hpp"
#include "tripext/detach.hpp"
#include "tripext/error.hpp"
#include "tripext/evans.hpp"
#include "tripext/extension.hpp"
#include "tripext/factorize.hpp"
#include "tripext/json_io.hpp"
#include "tripext/oracle.hpp"

using namespace tripext;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Every detach call made by criteria 1-5, re-checked by criterion 6.
std::vector<std::pair<DetachmentTask, Coloring>> g_detachments;

void record(const ExtensionResult& r) {
  if (r.detach_task && r.factorization) g_detachments.emplace_back(*r.detach_task, *r.factorization);
}

Coloring detach_recorded(const DetachmentTask& task) {
  DetachResult out = detach(task);
  if (!out) throw Error(ErrorCode::Internal, "detachment failed");
  g_detachments.emplace_back(task, *out.detached);
  return *out.detached;
}

std::int64_t binom(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// All ways to give the lambda copies of {1,2,3} distinct colors from 1..k.
std::vector<Coloring> single_triple_colorings(int lambda, int k) {
  std::vector<Coloring> out;
  std::vector<int> pick(static_cast<std::size_t>(lambda));
  std::function<void(int, int)> rec = [&](int idx, int from) {
    if (idx == lambda) {
      Coloring c(3, k);
      for (int col : pick) c.add(col, Edge{1, 2, 3});
      out.push_back(std::move(c));
      return;
    }
    for (int col = from; col <= k; ++col) {
      pick[static_cast<std::size_t>(idx)] = col;
      rec(idx + 1, col + 1);
    }
  };
  rec(0, 1);
  return out;
}

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const Coloring ten = detach_recorded(min_coloring_task(6, 1));
  if (ten.k() != 10 || !verify_one_factorization(ten).ok()) o.fail("Baranyai coloring of C(6,3) is not a 10-class one-factorization");
  Coloring padded(6, 28);
  for (Color c = 1; c <= ten.k(); ++c)
    for (const auto& [e, m] : ten.color_class(c).edges()) padded.add(c, e, m);
  const ExtensionResult r = extend(make_extension_instance(6, 9, 1, padded));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r) o.fail("extension unexpectedly succeeded");
  else if (!r.certificate || r.certificate->kind != InfeasibilityCertificate::Kind::QuotaSum) o.fail("wrong certificate");
  else if (r.certificate->quota_sum != 54 || r.certificate->edges != 45) o.fail("certificate is " + r.certificate->describe());
  if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "QuotaSum 54 > 45";
  return o;
}

std::vector<std::pair<ExtensionInstance, Coloring>> g_witnesses;

Outcome criterion2() {
  Outcome o;
  int runs = 0;
  int feasible = 0;
  for (int lambda = 1; lambda <= 2; ++lambda) {
    const int k = lambda * 10;
    for (Coloring& f : single_triple_colorings(lambda, k)) {
      const ExtensionInstance inst = make_extension_instance(3, 6, lambda, f);
      const ExtensionResult r = extend(inst);
      record(r);
      const oracle::ExtendResult brute = oracle::brute_extend(inst);
      ++runs;
      if (brute.status == oracle::Status::CapExceeded) {
        o.fail("oracle cap reached");
        continue;
      }
      const bool oracle_found = brute.status == oracle::Status::Found;
      if (oracle_found) {
        ++feasible;
        g_witnesses.emplace_back(inst, *brute.witness);
      }
      if (static_cast<bool>(r) != oracle_found) o.fail("disagreement at lambda=" + std::to_string(lambda));
      if (r && !verify_one_factorization(*r.factorization).ok()) o.fail("extension output is not a one-factorization");
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " colorings, " + std::to_string(feasible) + " extendable, all agree";
  return o;
}

Outcome criterion3() {
  Outcome o;
  int runs = 0;
  for (int lambda = 1; lambda <= 2; ++lambda) {
    const int k = static_cast<int>(colors_needed(9, lambda));
    for (Coloring& f : single_triple_colorings(lambda, k)) {
      const ExtensionInstance inst = make_extension_instance(3, 9, lambda, f);
      if (!check_ryser(inst).ryser_ok) continue;
      const auto start = std::chrono::steady_clock::now();
      const ExtensionResult r = extend(inst);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      record(r);
      ++runs;
      if (!r) o.fail("extension failed: " + (r.certificate ? r.certificate->describe() : std::string("no certificate")));
      else if (!verify_one_factorization(*r.factorization).ok()) o.fail("output is not a one-factorization");
      if (secs >= 60.0) o.fail("instance took " + std::to_string(secs) + " s");
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " placements extended";
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const auto& [inst, witness] : g_witnesses) {
    // The witness restricted to X is the instance coloring itself; Ryser
    // must hold whenever a witness exists.
    if (restrict_coloring(witness, inst.nX).host() != inst.coloring.host()) o.fail("witness does not extend F");
    if (!check_ryser(inst).ryser_ok) o.fail("Ryser condition fails on a witnessed instance");
  }
  if (g_witnesses.empty()) o.fail("no witnesses collected");
  if (o.pass) o.detail = std::to_string(g_witnesses.size()) + " witnesses";
  return o;
}

std::int64_t piecewise(int n, int lambda) {
  if (n % 3 == 0) return lambda * binom(n - 1, 2);
  if (n % 3 == 2) return lambda * binom(n, 2);
  if (n % 6 == 4 || lambda % 2 == 0) return static_cast<std::int64_t>(lambda) * n * (n - 2) / 2;
  return (static_cast<std::int64_t>(lambda) * n * n - 2LL * lambda * n + 1) / 2;
}

Outcome criterion5() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::map<std::pair<int, int>, std::int64_t> spots{
      {{9, 1}, 28}, {{8, 1}, 28}, {{7, 1}, 18}, {{10, 1}, 40}, {{7, 2}, 35}};
  for (const auto& [key, value] : spots)
    if (chromatic_index(key.first, key.second) != value) o.fail("spot value wrong at n=" + std::to_string(key.first));
  for (int n = 3; n <= 12; ++n)
    for (int lambda = 1; lambda <= 2; ++lambda) {
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(lambda) + ")";
      const std::int64_t chi = chromatic_index(n, lambda);
      if (chi != piecewise(n, lambda)) o.fail("chromatic index differs from the table at " + at);
      const Coloring c = detach_recorded(min_coloring_task(n, lambda));
      if (c.k() != chi) o.fail("min coloring uses the wrong number of colors at " + at);
      if (!(c.host() == complete_triples(n, lambda)) || !verify_proper(c).ok()) o.fail("min coloring invalid at " + at);
      int lo = n;
      int hi = 0;
      for (Color i = 1; i <= c.k(); ++i) {
        lo = std::min(lo, c.color_class(i).size());
        hi = std::max(hi, c.color_class(i).size());
      }
      if (hi > n / 3 || hi - lo > 1) o.fail("class sizes out of range at " + at);
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 120.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "20 (n, lambda) pairs";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const auto& [task, out] : g_detachments) {
    const Report r = verify_detachment(task, out);
    if (!r.ok()) o.fail(r.summary());
  }
  if (g_detachments.empty()) o.fail("no detachments recorded");
  if (o.pass) o.detail = std::to_string(g_detachments.size()) + " detachments verified";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const int bound = static_cast<int>(evans_bound(3, 9, 1));
  if (bound != 27) o.fail("bound is " + std::to_string(bound));
  int runs = 0;
  for (int q = 0; q <= bound; ++q)
    for (int color = 0; color <= q; ++color) {
      // color 0: F is empty
      PartialInstance inst{3, 9, 1, q, Coloring(3, q)};
      if (color > 0) inst.coloring.add(color, Edge{1, 2, 3});
      const EvansResult r = evans_embed(inst);
      ++runs;
      if (!verify_one_factorization(r.factorization).ok() || !(r.factorization.host() == complete_triples(9, 1))) {
        o.fail("output is not a one-factorization");
      }
      if (color > 0 && r.factorization.color_class(color).mult(Edge{1, 2, 3}) != 1) o.fail("F's color not kept");
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(runs) + " partial colorings embedded";
  return o;
}

nlohmann::ordered_json load(const std::string& name) {
  std::ifstream in(std::string(TRIPEXT_FIXTURE_DIR) + "/" + name);
  if (!in) throw Error(ErrorCode::InvalidInput, "missing fixture " + name);
  return nlohmann::ordered_json::parse(in);
}

Outcome criterion8() {
  Outcome o;
  const LatinCube shown = json::cube_from_json(load("order5_cube.json"));
  if (Report r = verify_cube(shown); !r.ok()) o.fail("fixture cube: " + r.summary());
  const MixedFactorization mf = json::mixed_from_json(load("order5_mixed.json"));
  if (mf.classes.size() != 25) o.fail("fixture list has " + std::to_string(mf.classes.size()) + " classes");
  if (Report r = verify_mixed(mf); !r.ok()) o.fail("fixture list: " + r.summary());
  const LatinCube built = build_cube(mf);
  if (Report r = verify_cube(built); !r.ok()) o.fail("built cube: " + r.summary());
  auto orbits = [](const LatinCube& cube) {
    std::map<std::set<int>, std::multiset<int>> out;
    for (int i = 1; i <= cube.n(); ++i)
      for (int j = 1; j <= cube.n(); ++j)
        for (int l = 1; l <= cube.n(); ++l) {
          std::set<int> support{i, j, l};
          if (support.size() > 1) out[support].insert(cube.at(i, j, l));
        }
    return out;
  };
  if (orbits(built) != orbits(shown)) o.fail("pair/triple cell multisets differ from the fixture");
  if (o.pass) o.detail = "15 layers, 25 classes, multisets match";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream detail;
  for (int n : {3, 5}) {
    const MixedSearchResult r = find_mixed_factorization(n);
    if (!r) {
      o.fail("n=" + std::to_string(n) + ": no mixed one-factorization exists (search exhausted after " +
             std::to_string(r.nodes) + " nodes; the 3 copies of {2,3} each need the singleton {1}, which occurs once)");
      continue;
    }
    const LatinCube cube = build_cube(*r.factorization);
    const MixedFactorization back = collapse_cube(cube);
    if (!verify_cube(cube).ok() || !verify_mixed(back).ok()) o.fail("round trip fails at n=" + std::to_string(n));
    else detail << "n=" << n << " ok ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 120.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = detail.str();
  else o.detail += "; " + detail.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known_red;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--known-red" && i + 1 < argc) {
      known_red.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: tripext_acceptance [--known-red N]...\n";
      return 2;
    }
  }

  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9};
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " [" << t.str() << " s] " << o.detail;
    if (!o.pass && known_red.count(id)) std::cout << " (known unattainable)";
    std::cout << std::endl;
    if (!o.pass && !known_red.count(id)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
