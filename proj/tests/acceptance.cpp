// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.

#include "oracles.hpp"

#include "veech/presets.hpp"
#include "veech/report.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace veech;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

struct Computed {
  MembershipContext ctx;
  EnumerationResult result;
  OrbifoldSignature sig;
  bool verified;
};

Computed compute(const std::string& name) {
  auto ctx = MembershipContext::make(preset(name));
  auto result = enumerate(ctx);
  const bool ok = verify(result, ctx).passed();
  auto sig = signature(result, ctx.params());
  return {std::move(ctx), std::move(result), std::move(sig), ok};
}

bool member(const MembershipContext& ctx, const TriangleWord& w) { return is_member(ctx, ctx.model().state_of(w)); }

std::string cones(const std::vector<int>& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

std::string describe(const Computed& c) {
  return "index " + std::to_string(c.result.index()) + ", genus " + std::to_string(c.sig.genus) + ", punctures " +
         std::to_string(c.sig.punctures) + ", cones " + cones(c.sig.cone_points);
}

// The words in `words` lie in pairwise distinct cosets and there are exactly
// as many as the index.
bool is_transversal(const Computed& c, const std::vector<TriangleWord>& words, Outcome& out) {
  bool ok = words.size() == c.result.index();
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (member(c.ctx, concat_inverse(words[i], words[j]))) {
        ok = false;
        out.detail << " [" << to_string(words[i]) << " ~ " << to_string(words[j]) << "]";
      }
  return ok;
}

std::vector<TriangleWord> parse_all(std::initializer_list<const char*> texts) {
  std::vector<TriangleWord> out;
  for (const auto* t : texts) out.push_back(parse_triangle_word(t));
  return out;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void criterion_1(Outcome& out) {
  const auto start = Clock::now();
  const auto c = compute("fig6");
  const double t = seconds_since(start);
  out.require(c.verified, "verify");
  out.require(is_transversal(c, parse_all({"I", "R"}), out), "Rep cosets {I, R}");
  std::vector<std::string> gen;
  for (const auto& g : c.result.gen) gen.push_back(to_string(g));
  out.require(gen == std::vector<std::string>{"T", "R T R^-1", "R R"}, "Gen = {T, RTR^-1, R^2}");
  out.require(t < 1.0, "runtime < 1 s");
  out.detail << " rep {I, R}, gen {T, R T R^-1, R R}, " << t << " s";
}

void criterion_2(Outcome& out) {
  const auto c = compute("fig6");
  out.require(c.sig.genus == 0 && c.sig.punctures == 3 && c.sig.cone_points == std::vector<int>{2},
              "signature (0; 3; {2})");
  out.detail << ' ' << describe(c);
}

void criterion_3(Outcome& out) {
  const auto start = Clock::now();
  const auto c = compute("fig10");
  const auto reps = parse_all({"I", "R", "RT", "R^2", "RTR", "RTRT", "RTR^2", "RTRTR", "RTRTR^2", "RTRTR^3", "RTR^3",
                               "RTR^3T"});
  const auto gens = parse_all({"T", "RT^2R^-1", "RTRT^2(RTR)^-1", "(RT)^3(RTRTR)^-1", "(RT)^2R^2T(RTR^2)^-1",
                               "(RT)^2R^3T(RTRTR^3)^-1", "RTR^2T(RTRTR^2)^-1", "RTR^3T^2(RTR^3)^-1", "RTR^3TR",
                               "R^2TR^-2", "R^3(RTR^3T)^-1"});
  out.require(c.verified, "verify");
  out.require(c.result.index() == 12, "index 12");
  int distinct = 0;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) distinct += !member(c.ctx, concat_inverse(reps[i], reps[j]));
  out.require(distinct == 66, "66 pairwise products outside the group");
  int members = 0;
  for (const auto& g : gens) members += member(c.ctx, g);
  out.require(members == 11, "11 listed generators are members");
  out.require(c.sig.genus == 0 && c.sig.punctures == 11 && c.sig.cone_points.empty(), "type (0,11)");
  const double t = seconds_since(start);
  out.require(t < 5.0, "runtime < 5 s");
  out.detail << ' ' << describe(c) << "; " << distinct << "/66 distinct, " << members << "/11 generators, " << t
             << " s";
}

void criterion_4(Outcome& out) {
  const auto c = compute("fig11");
  out.require(c.verified, "verify");
  out.require(c.result.index() == 4, "index 4");
  out.require(is_transversal(c, parse_all({"I", "R", "RT", "RTR"}), out), "Rep cosets {I, R, RT, RTR}");
  int members = 0;
  for (const auto& g : parse_all({"T", "R^2(RT)^-1", "RT^2R^-1", "RTRT(RTR)^-1", "RTR^2"})) members += member(c.ctx, g);
  out.require(members == 5, "listed generators are members");
  out.require(c.sig.genus == 0 && c.sig.punctures == 5 && c.sig.cone_points.empty(), "type (0,5)");
  out.detail << ' ' << describe(c);
}

void criterion_5(Outcome& out) {
  for (int n : {2, 3}) {
    const auto c = compute("fig12:" + std::to_string(n));
    out.require(c.verified, "verify");
    out.require(c.result.index() == 2, "index 2");
    out.require(is_transversal(c, parse_all({"I", "R"}), out), "Rep cosets {I, R}");
    std::vector<std::string> gen;
    for (const auto& g : c.result.gen) gen.push_back(to_string(g));
    out.require(gen == std::vector<std::string>{"T", "R T R^-1", "R R"}, "Gen = {T, RTR^-1, R^2}");
    out.require(c.sig.genus == 0 && c.sig.punctures == 3 && c.sig.cone_points == std::vector<int>{n},
                "signature (0; 3; {" + std::to_string(n) + "})");
    out.detail << " n=" << n << ": " << describe(c) << ";";
  }
}

void criterion_6(Outcome& out) {
  for (int n : {2, 3}) {
    const auto c = compute("fig13:" + std::to_string(n));
    out.require(c.verified, "verify");
    out.require(c.result.index() == static_cast<std::size_t>(n), "n=" + std::to_string(n) + ": index n");
    std::vector<TriangleWord> powers{TriangleWord{}};
    for (int k = 1; k < n; ++k) powers.push_back(powers.back().then(kR));
    Outcome scratch;
    out.require(is_transversal(c, powers, scratch), "n=" + std::to_string(n) + ": Rep cosets {I, ..., R^(n-1)}");
    out.require(c.sig.genus == 0, "n=" + std::to_string(n) + ": genus 0");
    out.require(c.sig.punctures == 2 * n + 1, "n=" + std::to_string(n) + ": 2n+1 punctures");
    out.require(c.sig.cone_points == std::vector<int>{2}, "n=" + std::to_string(n) + ": one cone of order 2");
    out.detail << " n=" << n << ": " << describe(c) << ";";
  }
}

struct ChartRow {
  int d;
  int gen;
  std::size_t rep;
  int genus, punctures;
  std::vector<int> cones;
};

void chart(Outcome& out, const std::string& family, const std::vector<ChartRow>& rows, double limit) {
  const auto start = Clock::now();
  for (const auto& row : rows) {
    const auto c = compute(family + ":" + std::to_string(row.d));
    const bool ok = c.verified && c.result.index() == row.rep && c.sig.genus == row.genus &&
                    c.sig.punctures == row.punctures && c.sig.cone_points == row.cones;
    out.require(ok, "d=" + std::to_string(row.d) + ": " + describe(c));
    out.detail << " d=" << row.d << " #Gen " << c.result.gen.size() << " (chart " << row.gen << ");";
  }
  const double t = seconds_since(start);
  if (limit > 0) out.require(t < limit, "runtime");
  out.detail << ' ' << t << " s";
}

void criterion_7(Outcome& out) {
  chart(out, "fig14",
        {{2, 11, 12, 0, 11, {}},
         {3, 29, 32, 1, 24, {}},
         {4, 87, 96, 8, 58, {}},
         {5, 142, 156, 24, 68, {2, 2, 2, 2, 2, 2}},
         {6, 349, 384, 45, 200, {}},
         {7, 367, 400, 87, 128, {}},
         {8, 704, 768, 149, 280, {}},
         {9, 785, 864, 185, 280, {}},
         {10, 1704, 1872, 419, 568, {}},
         {11, 1353, 1464, 400, 300, {}}},
        60.0);
}

void criterion_8(Outcome& out) {
  chart(out, "fig15",
        {{2, 2, 1, 0, 2, {4}},
         {3, 29, 32, 1, 24, {}},
         {4, 5, 4, 0, 5, {}},
         {5, 142, 156, 24, 68, {2, 2, 2, 2, 2, 2}},
         {6, 29, 32, 1, 24, {}},
         {7, 367, 400, 87, 128, {}},
         {8, 29, 32, 1, 24, {}},
         {9, 789, 864, 185, 280, {}},
         {10, 142, 156, 24, 68, {2, 2, 2, 2, 2, 2}},
         {11, 1353, 1464, 400, 300, {}},
         {12, 115, 128, 11, 76, {}},
         {13, 2220, 2380, 682, 416, std::vector<int>(14, 2)},
         {14, 367, 400, 87, 128, {}}},
        0);
}

void criterion_9(Outcome& out) {
  for (int n = 4; n <= 8; ++n) {
    const auto c = compute("trivial:" + std::to_string(n));
    out.require(c.verified && c.result.index() == 1 && c.sig.genus == 0 && c.sig.punctures == 2 &&
                    c.sig.cone_points == std::vector<int>{n},
                "n=" + std::to_string(n) + ": " + describe(c));
  }
  out.detail << " n = 4..8: index 1, (0; 2; {n})";
}

void criterion_10(Outcome& out) {
  // (a) Phi(R)^n = -I, Phi(R)^2n = I, det Phi(R) = det Phi(T) = 1.
  bool a = true;
  std::string det_breaks;
  for (int n = 4; n <= 10; ++n)
    for (std::int64_t d = 2; d <= 5; ++d) {
      const PolygonParams p(n);
      const auto r = phi_of_letter(kR, p, d);
      MatrixModD acc = identity_mod(n, d);
      for (int i = 0; i < n; ++i) acc = mod_product(acc, r, d);
      a = a && acc == MatrixModD(reduced(-identity_mod(n, d), d));
      for (int i = 0; i < n; ++i) acc = mod_product(acc, r, d);
      a = a && acc == identity_mod(n, d);
      const auto det_r = determinant_mod(r, d);
      const auto det_t = determinant_mod(phi_of_letter(kT, p, d), d);
      if (det_r != 1 || det_t != 1) {
        a = false;
        if (!det_breaks.empty()) det_breaks += ",";
        det_breaks += " det(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")=" + std::to_string(det_r) +
                      "/" + std::to_string(det_t);
      }
    }
  out.require(a, "(a) Phi identities;" + det_breaks);

  // (b) gamma_R^n is the inversion rule.
  bool b = true;
  for (int n = 4; n <= 12; ++n) {
    auto acc = identity_rule(n);
    for (int i = 0; i < n; ++i) acc = compose_rules(acc, gamma_R(PolygonParams(n)));
    b = b && acc == inversion_rule(n);
  }
  out.require(b, "(b) gamma_R^n = inversion");

  // (c) abelian path == permutation path on positive words of length <= 8.
  const auto words = oracle::positive_words(8);
  std::size_t checked = 0;
  bool c = true;
  for (const auto* name : {"fig6", "fig14:2", "fig14:3"}) {
    const auto ctx = MembershipContext::make(preset(name), ModeRequest::cross);
    for (const auto& w : words) {
      const auto s = ctx.model().state_of(w);
      c = c && is_member_abelian(ctx, s) == is_member_permutation(ctx, s);
      ++checked;
    }
  }
  out.require(c, "(c) oracle equivalence");

  // (d) incremental states == full expansion, words of length <= 8, degree <= 4.
  bool d = true;
  const std::vector<std::vector<Permutation>> covers{{{1, 0}, {0, 1}, {1, 0}, {0, 1}},
                                                     {{1, 2, 0}, {0, 1, 2}, {2, 0, 1}, {1, 2, 0}},
                                                     {{1, 2, 3, 0}, {1, 0, 3, 2}, {0, 1, 2, 3}, {3, 2, 1, 0}}};
  const PolygonParams p4(4);
  std::size_t expanded = 0;
  for (const auto& sigma : covers) {
    const ActionModel model(p4, 4, sigma);
    for (const auto& w : words) {
      const auto state = model.state_of(w);
      const auto images = oracle::expand(w, p4);
      for (std::size_t i = 0; i < 4; ++i) d = d && (*state.tuple)[i] == oracle::monodromy_of(images[i], sigma);
      ++expanded;
    }
  }
  out.require(d, "(d) expansion oracle");

  // (e) orbit sizes and the Euler identity on every catalog run.
  bool e = true;
  std::size_t runs = 0;
  for (const auto& name : preset_names()) {
    const auto ctx = MembershipContext::make(preset(name));
    const auto r = enumerate(ctx);
    for (const auto& cyc : cycles(r.perm_R)) e = e && ctx.params().n() % static_cast<int>(cyc.size()) == 0;
    const auto s = signature(r, ctx.params());
    e = e && s.genus >= 0 && 2 * s.genus == 2 + static_cast<int>(r.index()) - (s.v_infinity + s.v_cot + s.v_cone);
    ++runs;
  }
  out.require(e, "(e) orbit sizes and Euler identity");
  out.detail << " " << checked << " oracle comparisons, " << expanded << " expansions, " << runs << " runs";
}

void criterion_11(Outcome& out) {
  std::size_t compared = 0;
  for (const auto& name : preset_names()) {
    const auto first = to_json(run_pipeline(preset(name)).report).dump(2);
    const auto second = to_json(run_pipeline(preset(name)).report).dump(2);
    out.require(first == second, name);
    ++compared;
  }
  out.detail << " " << compared << " presets byte-identical";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"fig6 enumeration trace", criterion_1},
      {"fig6 signature", criterion_2},
      {"fig10 index, transversal, generators, signature", criterion_3},
      {"fig11 index, cosets, signature", criterion_4},
      {"fig12:n double covers, n = 2, 3", criterion_5},
      {"fig13:n double covers, n = 2, 3", criterion_6},
      {"fig14 chart, d = 2..11", criterion_7},
      {"fig15 chart, d = 2..14", criterion_8},
      {"trivial cover, n = 4..8", criterion_9},
      {"property suite", criterion_10},
      {"determinism", criterion_11},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  if (selected.empty())
    for (std::size_t i = 1; i <= criteria.size(); ++i) selected.push_back(static_cast<int>(i));

  int failures = 0;
  for (int id : selected) {
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::cerr << "no criterion " << id << '\n';
      return 2;
    }
    Outcome out;
    try {
      criteria[static_cast<std::size_t>(id - 1)].second(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << " [exception: " << e.what() << "]";
    }
    failures += !out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << "  " << id << "  " << criteria[static_cast<std::size_t>(id - 1)].first
              << ":" << out.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
