// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "gmanvol/gmanvol.hpp"
#include "support/random_graph.hpp"

using namespace gmanvol;
using gmanvol::testing::Rng;

namespace {

namespace fs = std::filesystem;

const fs::path kCorpus = GMANVOL_CORPUS_DIR;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::string read(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> corpus_graphs() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(kCorpus / "graphs")) out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

GraphManifold parallel(std::int64_t r, GluingMatrix m) {
  GraphManifold gm;
  gm.pieces = {{"A", 2, r}, {"B", 2, r}};
  for (std::int64_t k = 0; k < r; ++k) gm.edges.push_back({{"A", k}, {"B", k}, m});
  return gm;
}

bool ehn_by_hand(const SeifertInvariants& inv) {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  for (const auto& f : inv.fibers) {
    lo += floor_div(f.beta, f.alpha);
    hi += ceil_div(f.beta, f.alpha);
  }
  return lo <= 2 * inv.genus - 2 && hi >= 2 - 2 * inv.genus;
}

// The covers used by the bookkeeping and invariance criteria.
struct CoverSample {
  GraphManifold base;
  CoveredGraph cover;
  bool characteristic;
};

std::vector<CoverSample> cover_corpus() {
  std::vector<CoverSample> out;
  Rng rng(2024);
  for (std::int64_t q : {3, 5, 7}) {
    for (int i = 0; i < 20; ++i) {
      auto gm = gmanvol::testing::random_graph(rng, {2, 5, 2, q - 1, 4});
      const auto& center = gm.pieces[static_cast<std::size_t>(i) % gm.pieces.size()].id;
      out.push_back({gm, characteristic_cover(gm, q), true});
      out.push_back({gm, genus_raising_cover(gm, center, q), false});
    }
  }
  return out;
}

Check ac1() {
  Check c;
  for (std::int64_t g = 1; g <= 5; ++g) {
    for (std::int64_t e = -20; e <= 20; ++e) {
      const bool mw = (e < 0 ? -e : e) <= 2 * g - 2;
      c.expect(ehn_horizontal_foliation({g, {{1, e}}}) == mw,
               "g=" + std::to_string(g) + " e=" + std::to_string(e));
    }
  }
  return c;
}

Check ac2(const std::vector<CoverSample>& samples) {
  Check c;
  for (const auto& s : samples) {
    const auto& cert = s.cover.certificate;
    std::map<std::string, std::int64_t> degree_over;
    for (const auto& p : s.cover.manifold.pieces) {
      const auto it = cert.per_piece.find(p.id);
      if (it == cert.per_piece.end()) {
        c.expect(false, "no lift record for " + p.id);
        continue;
      }
      const auto& lift = it->second;
      const auto& down = s.base.piece(lift.over);
      c.expect(p.base_euler_characteristic() ==
                   lift.horizontal_degree * down.base_euler_characteristic(),
               "chi multiplicativity at " + p.id);
      c.expect(lift.degree == lift.vertical_degree * lift.horizontal_degree,
               "degree product at " + p.id);
      degree_over[lift.over] += lift.degree;
    }
    for (const auto& p : s.base.pieces) {
      c.expect(degree_over[p.id] == cert.total_degree, "degree bookkeeping over " + p.id);
    }
    for (std::size_t i = 0; i < s.base.edges.size(); ++i) {
      c.expect(cert.tori[i].preimages * cert.tori[i].degree == cert.total_degree,
               "torus bookkeeping at edge " + std::to_string(i));
    }
    c.expect(verify_covering_certificate(s.cover, s.base).empty(), "verifier report not empty");
  }
  return c;
}

Check ac3(const std::vector<CoverSample>& samples) {
  Check c;
  for (const auto& s : samples) {
    if (!s.characteristic) continue;
    for (const auto& p : s.cover.manifold.pieces) {
      const auto& over = s.cover.certificate.per_piece.at(p.id).over;
      const auto up = euler_number(
          filled_piece_invariants(s.cover.manifold, p.id, canonical_framing(s.cover.manifold, p.id)));
      const auto down =
          euler_number(filled_piece_invariants(s.base, over, canonical_framing(s.base, over)));
      c.expect(up == down, "euler number changed at " + p.id);
    }
  }
  return c;
}

Check ac4() {
  Check c;
  for (std::int64_t r = 1; r <= 5; ++r) {
    for (std::int64_t g1 = 2; g1 <= 4; ++g1) {
      for (std::int64_t g2 = 2; g2 <= 4; ++g2) {
        for (std::uint64_t mask : {0ULL, (1ULL << r) - 1}) {
          const auto gm = gmanvol::testing::pmj_pair(r, g1, g2, mask);
          const auto tag = "r=" + std::to_string(r) + " g=" + std::to_string(g1) + "/" +
                           std::to_string(g2);
          const auto pair = case2_euler_pair(gm, "A", "B");
          c.expect(abs(pair.e1) == r && abs(pair.e2) == r, "euler pair " + tag);
          const auto cert = case2_bound(gm);
          c.expect(cert.bound.coefficient == 8 * r, "bound " + tag);
          if (r == 5 && g1 == 2 && g2 == 2) {
            c.expect(cert.tower.size() == 1 && cert.tower[0].certificate.characteristic_level == 7,
                     "tower prime for r=5");
            if (!cert.tower.empty()) {
              for (const auto& p : cert.tower[0].manifold.pieces) {
                c.expect(p.genus == 23, "covered genus for r=5");
              }
            }
          }
        }
      }
    }
  }
  return c;
}

Check ac5() {
  Check c;
  const GluingMatrix m{1, 1, 1, 0};
  const auto one = parse_graph(read(kCorpus / "graphs/edge-1110.json"));
  c.expect(absolute_euler_number(one) == 1, "|e| of single edge");
  for (const auto& [gm, expected] :
       {std::pair{one, 4}, std::pair{parallel(1, m), 4}, std::pair{parallel(2, m), 8}}) {
    const auto cert = volume_lower_bound(gm);
    c.expect(cert.case_tag == VolumeCase::NonzeroAbsoluteEuler, "case tag");
    c.expect(cert.bound.coefficient == expected, "bound " + std::to_string(expected));
    const auto& stage = cert.stage(gm);
    const auto& chosen = cert.chosen.front();
    const auto inv = filled_piece_invariants(stage, chosen, canonical_framing(stage, chosen));
    c.expect(ehn_by_hand(inv), "criterion at emitted stage");
  }
  return c;
}

Check ac6() {
  Check c;
  Rng rng(77);
  for (int i = 0; i < 50; ++i) {
    const auto gm = gmanvol::testing::random_graph(rng, {2, 5, 1, 4, 4});
    try {
      const auto cert = volume_lower_bound(gm);
      c.expect(cert.bound.coefficient > 0, "non-positive bound on graph " + std::to_string(i));
    } catch (const Error& e) {
      const bool named = e.code() == ErrorCode::PMJFormRequired ||
                         e.code() == ErrorCode::BoundaryCountTooSmall;
      c.expect(named && !e.hint().empty(),
               "unexpected " + std::string(to_string(e.code())) + " on graph " + std::to_string(i));
    }
  }
  return c;
}

Check ac7() {
  Check c;
  for (auto g : kAllGeometries) {
    const auto expected = g == Geometry::SL2tilde ? Finiteness::Finite : Finiteness::Infinite;
    c.expect(geometry_finiteness(g).verdict == expected, std::string(to_string(g)));
  }
  for (const auto& path : corpus_graphs()) {
    const auto v = mapping_degree_finiteness(parse_graph(read(path)));
    c.expect(v.verdict == Finiteness::Finite, path.filename().string());
  }
  c.expect(mapping_degree_finiteness(TorusBundleCovered{}).verdict == Finiteness::Infinite,
           "torus bundle");
  return c;
}

std::string cli_output(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  gmanvol::cli::run(args, out, err);
  return out.str() + err.str();
}

Check ac8() {
  Check c;
  for (const auto& path : corpus_graphs()) {
    const auto once = serialize_graph(parse_graph(read(path)));
    c.expect(serialize_graph(parse_graph(once)) == once, "round-trip " + path.filename().string());
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"volume-bound", path.string()},
          std::vector<std::string>{"invariants", path.string()},
          std::vector<std::string>{"classify", path.string()}}) {
      c.expect(cli_output(args) == cli_output(args),
               args[0] + " differs across runs on " + path.filename().string());
    }
  }
  return c;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto samples = cover_corpus();
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"AC1 circle bundles: criterion equals the Milnor-Wood bound", ac1},
      {"AC2 covers: chi multiplicativity and degree bookkeeping", [&] { return ac2(samples); }},
      {"AC3 characteristic covers keep filled Euler numbers", [&] { return ac3(samples); }},
      {"AC4 +-J pairs: |e1| = |e2| = r and bound 8r", ac4},
      {"AC5 [[1,1],[1,0]] graphs: bounds 4 and 8, criterion at stage", ac5},
      {"AC6 random graphs: bound positive or named refusal", ac6},
      {"AC7 finiteness classifier table", ac7},
      {"AC8 round-trip and determinism", ac8},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = clock::now();
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
    std::cout << (c.ok ? "PASS " : "FAIL ") << name << " (" << ms << " ms)";
    if (!c.ok) std::cout << ": " << c.detail;
    std::cout << '\n';
    failures += c.ok ? 0 : 1;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
