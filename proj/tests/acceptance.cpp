// Copyright 2026 The quasipart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion; the exit code is
// nonzero if any selected criterion fails.
//
//   acceptance          run all criteria
//   acceptance 4 6      run criteria 4 and 6

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "golden_cases.hpp"
#include "oracle.hpp"
#include "quasipart/counting.hpp"
#include "quasipart/error.hpp"
#include "quasipart/quasipoly.hpp"
#include "quasipart/recurrences.hpp"

namespace {

using namespace quasipart;
using quasipart::testing::naive_count;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first failure
    pass = false;
  }
};

const std::vector<std::vector<std::int64_t>> kStructureSets = {
    {1, 2}, {2, 3}, {3, 4}, {1, 2, 3}, {2, 3, 5}, {3, 4, 5}, {1, 2, 3, 4}, {2, 3, 5, 7}};

std::vector<std::vector<std::int64_t>> subsets_up_to(int max_k, std::int64_t max_part) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> parts;
  std::function<void(std::int64_t)> recurse = [&](std::int64_t next) {
    if (!parts.empty()) out.push_back(parts);
    if (static_cast<int>(parts.size()) == max_k) return;
    for (std::int64_t a = next; a <= max_part; ++a) {
      parts.push_back(a);
      recurse(a + 1);
      parts.pop_back();
    }
  };
  recurse(1);
  return out;
}

// 1. Enumeration oracle against the counting engine, every set of at most
// four parts from {1..12}, 0 <= n <= 40.
Outcome oracle_equivalence() {
  Outcome o;
  const auto sets = subsets_up_to(4, 12);
  std::size_t cells = 0;
  for (const auto& parts : sets) {
    const PartSet a = PartSet::make(parts);
    for (std::int64_t n = 0; n <= 40; ++n) {
      const auto listed = enumerate_partitions(a, n).size();
      if (Count(static_cast<unsigned long>(listed)) != count(a, n)) {
        o.fail(a.to_string() + " n=" + std::to_string(n));
      }
      ++cells;
    }
  }
  o.detail = o.pass ? std::to_string(sets.size()) + " sets, " + std::to_string(cells) +
                          " (A, n) pairs"
                    : o.detail;
  return o;
}

// 2. Lemma 1 at 1000 seeded random (A, a, n).
Outcome lemma1_identity() {
  Outcome o;
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto parts = quasipart::testing::random_parts(rng, 4, 12);
    const PartSet a = PartSet::make(parts);
    const std::int64_t part = parts[rng() % parts.size()];
    const std::int64_t n = part + static_cast<std::int64_t>(rng() % 80);
    const Lemma1Split s = lemma1_split(a, part, n);
    const Count total = s.with_part + s.without_part;
    if (total != count(a, n) || total != naive_count(parts, n)) {
      o.fail(a.to_string() + " a=" + std::to_string(part) + " n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "1000 instances";
  return o;
}

// 3. p_A(a1 a2 l + r) = l + p_A(r) for every coprime pair of parts <= 12.
Outcome k2_closed_form_all_pairs() {
  Outcome o;
  std::size_t pairs = 0, reports = 0;
  for (std::int64_t a = 1; a <= 12; ++a) {
    for (std::int64_t b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ++pairs;
      const PartSet set = PartSet::make({a, b});
      const IdentityVerifier v(set, a * b * 51);
      for (std::int64_t r = 0; r < a * b; ++r) {
        for (std::int64_t l = 0; l <= 50; ++l) {
          const IdentityReport rep = v.k2_closed_form(l, r);
          ++reports;
          if (!rep.holds) o.fail(rep.instance.describe());
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(pairs) + " pairs, " + std::to_string(reports) + " checks";
  }
  return o;
}

// 4. Every constituent has degree k-1 and leading coefficient
// (a1...ak)^(k-2)/(k-1)!, with three over-determining samples per residue.
Outcome quasipolynomial_structure() {
  Outcome o;
  std::size_t constituents = 0;
  for (const auto& parts : kStructureSets) {
    const PartSet a = PartSet::make(parts);
    try {
      const QuasiPolynomial q = interpolate_constituents(a, {3});
      if (q.period != a.period() ||
          q.constituents.size() != static_cast<std::size_t>(q.period)) {
        o.fail(a.to_string() + " period");
      }
      if (q.verified_range.last - q.verified_range.first + 1 <
          static_cast<std::int64_t>(a.size()) + 3) {
        o.fail(a.to_string() + " too few samples");
      }
      for (const ConstituentCheck& c : check_structure(q)) {
        ++constituents;
        if (!c.degree_matches || !c.leading_matches) {
          o.fail(a.to_string() + " r=" + std::to_string(c.residue) +
                 " degree=" + std::to_string(c.degree) +
                 " leading=" + exact_string(c.leading));
        }
      }
    } catch (const ResidualNonZeroError& e) {
      o.fail(a.to_string() + " " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(constituents) + " constituents, all exact";
  return o;
}

// 5. Telescoped differences, every residue, 1 <= l <= 6, every removable part,
// filtered sum equal to the unfiltered one.
Outcome telescoped_difference() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& parts : kStructureSets) {
    const PartSet a = PartSet::make(parts);
    const std::int64_t period = a.period().get_si();
    const IdentityVerifier v(a, period * 7);
    for (std::int64_t removed : parts) {
      for (std::int64_t r = 0; r < period; ++r) {
        for (std::int64_t l = 1; l <= 6; ++l) {
          const IdentityReport diff = v.telescoped_difference(removed, l, r);
          const IdentityReport filter = v.telescoped_filter_equivalence(removed, l, r);
          checks += 2;
          if (!diff.holds) o.fail(diff.instance.describe() + " difference");
          if (!filter.holds) o.fail(filter.instance.describe() + " filter");
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " checks";
  return o;
}

// 6. Sertoz-Ozluk recurrence at 50 consecutive n above prod(a) - sum(a) + k - 2.
Outcome sertoz_ozluk() {
  Outcome o;
  std::string failures;
  for (const auto& parts : kStructureSets) {
    const PartSet a = PartSet::make(parts);
    const IdentityVerifier probe(a, 0);
    const std::int64_t start = to_int64(probe.sertoz_ozluk_start());
    const IdentityVerifier v(a, start + 50);
    std::size_t bad = 0;
    std::string first;
    for (std::int64_t n = start; n < start + 50; ++n) {
      const IdentityReport rep = v.sertoz_ozluk(n);
      if (!rep.holds) {
        if (bad++ == 0) first = "n=" + std::to_string(n) + " sum=" + rep.rhs.get_str();
      }
    }
    if (bad) {
      o.pass = false;
      failures += (failures.empty() ? "" : "; ") + a.to_string() + " fails at " +
                  std::to_string(bad) + "/50 (first " + first + ")";
    }
  }
  o.detail = o.pass ? "8 sets x 50 n" : failures;
  return o;
}

// 7. Finite surrogates for p_A(n) ~ n^(k-1) / (prod(a) (k-1)!).
Outcome asymptotic_estimate() {
  Outcome o;
  const Rational r123 = asymptotic_ratio(PartSet::make({1, 2, 3}), 6 * 1024);
  if (!(abs(r123 - 1) < make_rational(1, 100))) {
    o.fail("{1,2,3} ratio " + exact_string(r123));
  }
  const Rational r23 = asymptotic_ratio(PartSet::make({2, 3}), 60000);
  if (!(abs(r23 - 1) < make_rational(1, 1000))) {
    o.fail("{2,3} ratio " + exact_string(r23));
  }
  if (o.pass) {
    o.detail = "{1,2,3}@6144: " + decimal_string(r123) +
               ", {2,3}@60000: " + decimal_string(r23);
  }
  return o;
}

// 8. Congruence solutions against exhaustive search for every modulus <= 50.
Outcome congruence_facts() {
  Outcome o;
  std::size_t cases = 0;
  for (std::int64_t m = 1; m <= 50; ++m) {
    for (std::int64_t a = 0; a < m; ++a) {
      for (std::int64_t r = 0; r < m; ++r) {
        ++cases;
        const CongruenceResult c = solve_congruence(a, r, m);
        const auto expected = quasipart::testing::exhaustive_congruence(a, r, m);
        if (c.solutions != expected ||
            c.solution_count != static_cast<std::int64_t>(expected.size()) ||
            c.solvable != !expected.empty()) {
          o.fail(std::to_string(a) + "x=" + std::to_string(r) + " mod " + std::to_string(m));
        }
        if (std::gcd(a, m) == 1 && c.solution_count != 1) {
          o.fail("coprime " + std::to_string(a) + " mod " + std::to_string(m));
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " congruences";
  return o;
}

struct Process {
  int code;
  std::string out;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Process run_binary(const std::vector<std::string>& args) {
  std::string command = shell_quote(QUASIPART_CLI);
  for (const auto& a : args) command += " " + shell_quote(a);
  command += " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// 9. The built CLI reproduces every golden file byte for byte, twice, with
// exit codes 0, 2, 3 and 4 all exercised.
Outcome cli_contract() {
  Outcome o;
  const std::string dir = QUASIPART_GOLDEN_DIR;
  std::set<int> codes;
  std::set<std::string> commands;
  std::size_t cases = 0;
  for (const auto& c : quasipart::testing::load_golden_cases(dir)) {
    ++cases;
    const Process first = run_binary(c.args);
    const Process second = run_binary(c.args);
    codes.insert(first.code);
    if (first.code == 0) commands.insert(c.args.front());
    if (first.code != c.exit_code) {
      o.fail(c.name + " exit " + std::to_string(first.code));
    }
    if (first.out != quasipart::testing::read_file(dir + "/" + c.name + ".out")) {
      o.fail(c.name + " differs from golden output");
    }
    if (first.out != second.out || first.code != second.code) {
      o.fail(c.name + " not deterministic");
    }
  }
  for (int code : {0, 2, 3, 4}) {
    if (!codes.count(code)) o.fail("exit code " + std::to_string(code) + " not exercised");
  }
  for (const char* cmd : {"count", "table", "quasipoly", "verify", "asymptote"}) {
    if (!commands.count(cmd)) o.fail(std::string(cmd) + " has no passing golden case");
  }
  if (o.pass) o.detail = std::to_string(cases) + " golden invocations";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double seconds_limit;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "oracle equivalence", 30, oracle_equivalence},
    {2, "Lemma 1 split", 5, lemma1_identity},
    {3, "k = 2 closed form", 10, k2_closed_form_all_pairs},
    {4, "quasi-polynomial degree and leading coefficient", 120, quasipolynomial_structure},
    {5, "telescoped difference", 60, telescoped_difference},
    {6, "Sertoz-Ozluk recurrence", 30, sertoz_ozluk},
    {7, "asymptotic ratio", 10, asymptotic_estimate},
    {8, "congruence solutions", 5, congruence_facts},
    {9, "CLI contract", 10, cli_contract},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  int failed = 0;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.seconds_limit) {
      o.fail("took " + std::to_string(seconds) + "s, limit " +
             std::to_string(c.seconds_limit) + "s");
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.name
         << " (" << seconds << "s) " << o.detail;
    std::cout << line.str() << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
