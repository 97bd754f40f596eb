// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "sweedler/corpus.hpp"
#include "sweedler/parser.hpp"
#include "sweedler/random.hpp"
#include "sweedler/workspace.hpp"

using namespace sweedler;
using namespace sweedler::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
  void require(bool c, const std::string& why) {
    if (!c) fail(why);
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_time(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

// Judgments seen while exercising the algebra; rechecked for distinct subterms.
std::vector<Judgment> produced;

Verdict ac1() {
  Verdict v;
  Signature s = composition_example_signature();
  auto t0 = Clock::now();
  Judgment r = compose(s, example_j1(), example_j2());
  double t = seconds_since(t0);
  v.require(to_string(r) == example_result_text(), "got " + to_string(r));
  v.require(t < 0.1, "took " + fmt_time(t));
  v.note = v.ok ? fmt_time(t) : v.note;
  return v;
}

Verdict ac2() {
  Verdict v;
  Judgment j1 = example_j1(), j2 = example_j2();
  struct Row {
    const char* name;
    const Term& t;
    std::size_t want;
  };
  Row rows[] = {{"f", j1.mains[0], 1}, {"g", j1.mains[1].args()[0], 0}, {"h", j1.scalars[0], 1},
                {"k", j1.mains[1], 2}, {"l", j2.mains[2], 1},            {"m", j2.mains[0], 2},
                {"n", j2.scalars[0], 1}, {"s", j2.mains[1], 0}};
  for (const auto& r : rows)
    v.require(depth(r.t) == r.want, std::string(r.name) + " has depth " + std::to_string(depth(r.t)));
  return v;
}

Verdict ac3() {
  Verdict v;
  Signature s = composition_example_signature();
  Context xy{{VarName("x"), ObjectName("A")}, {VarName("y"), ObjectName("B")}};
  Judgment post_n(xy,
                  {comp("f", 1, {sweedler::testing::v("y")}),
                   comp("l", 2, {comp("f", 2, {sweedler::testing::v("y")})}), lab("s", "b"),
                   comp("l", 1, {comp("f", 2, {sweedler::testing::v("y")})})},
                  objs({"C", "R", "G", "H"}),
                  {ap("n", {ap("k", {lab("g", "a"), comp("f", 3, {sweedler::testing::v("y")})})}),
                   ap("h", {sweedler::testing::v("x")})});
  auto a = infer_activeness(post_n).active;
  v.require(std::count(a.begin(), a.end(), true) == 0, "post-n judgment has an active position");
  v.require(a == activeness(s, check(s, post_n)), "inferred and derived activeness differ on post-n");
  v.require(infer_activeness(example_j1()).active == std::vector<bool>{false, true, false}, "j1 activeness");
  Judgment id(xy, {sweedler::testing::v("y"), sweedler::testing::v("x"), lab("g", "a")}, objs({"B", "A", "Q"}));
  auto ia = infer_activeness(id).active;
  v.require(std::all_of(ia.begin(), ia.end(), [](bool b) { return b; }), "identity judgment not all active");
  Signature m = mixed_signature();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Judgment j = conclusion(m, random_derivation(m, seed));
    Judgment idj = conclusion(m, identity_of(j.context));
    auto act = infer_activeness(idj).active;
    if (!std::all_of(act.begin(), act.end(), [](bool b) { return b; })) v.fail("identity on " + to_string(idj));
  }
  return v;
}

Verdict ac4() {
  Verdict v;
  Signature s = mixed_signature();
  auto t0 = Clock::now();
  std::size_t n = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed, ++n) {
    Derivation d = random_derivation(s, seed);
    Judgment j = check_derivation(s, d);
    produced.push_back(j);
    if (!(check(s, j) == d)) {
      v.fail("seed " + std::to_string(seed) + ": " + to_string(j));
      break;
    }
  }
  double t = seconds_since(t0);
  v.require(t < 30, "took " + fmt_time(t));
  if (v.ok) v.note = std::to_string(n) + " derivations in " + fmt_time(t);
  return v;
}

Verdict ac5() {
  Verdict v;
  Signature s = mixed_signature();
  std::mt19937_64 rng(17);
  auto domain_for = [](const Judgment& j, const char* stem) {
    RandomOptions o;
    o.domain = fresh_context(j.types, stem, {});
    o.max_height = 4;
    return o;
  };
  auto closed = [&](const Judgment& j, const char* what, std::uint64_t seed) {
    produced.push_back(j);
    if (!derivable(s, j)) v.fail(std::string(what) + " not derivable at seed " + std::to_string(seed));
  };
  RandomOptions small;
  small.max_height = 4;
  std::size_t cases = 500;
  for (std::uint64_t seed = 0; seed < cases && v.ok; ++seed) {
    Judgment a = conclusion(s, random_derivation(s, seed, small));
    Judgment b = conclusion(s, random_derivation(s, seed + 10000, domain_for(a, "p")));
    Judgment c = conclusion(s, random_derivation(s, seed + 20000, domain_for(b, "q")));
    Judgment left = compose(s, compose(s, a, b), c);
    Judgment right = compose(s, a, compose(s, b, c));
    if (left != right) v.fail("associativity at seed " + std::to_string(seed));
    closed(left, "composite", seed);

    Judgment ida = conclusion(s, identity_of(a.context));
    Judgment idb = conclusion(s, identity_of(fresh_context(a.types, "i", {})));
    if (compose(s, ida, a) != a) v.fail("left unit at seed " + std::to_string(seed));
    if (compose(s, a, idb) != a) v.fail("right unit at seed " + std::to_string(seed));

    std::size_t n = a.mains.size();
    Permutation p = detail::random_permutation(n, rng), q = detail::random_permutation(n, rng);
    Judgment twice = exchange_cod(s, exchange_cod(s, a, p), q);
    if (twice != exchange_cod(s, a, then(p, q))) v.fail("exchange functoriality at seed " + std::to_string(seed));
    if (exchange_cod(s, a, Permutation::identity(n)) != a) v.fail("exchange identity at seed " + std::to_string(seed));
    closed(twice, "exchange", seed);

    Judgment x = conclusion(s, random_derivation(s, seed + 30000, small));
    Judgment y = conclusion(s, random_derivation(s, seed + 40000, domain_for(x, "r")));
    Judgment ab = tensor(s, a, x);
    Judgment cd = tensor(s, b, y);
    Judgment serial_first = compose(s, ab, cd);
    Judgment parallel_first = tensor(s, compose(s, a, b), compose(s, x, y));
    if (!free_equal(serial_first, parallel_first)) v.fail("interchange at seed " + std::to_string(seed));
    closed(ab, "tensor", seed);
    closed(serial_first, "interchange composite", seed);
  }
  if (v.ok) v.note = std::to_string(cases) + " cases per law";
  return v;
}

Verdict ac6() {
  Verdict v;
  Signature s = mixed_signature();
  std::mt19937_64 rng(23);
  RandomOptions opt;
  opt.max_height = 5;
  auto t0 = Clock::now();
  std::size_t compared = 0, equal = 0;
  for (std::uint64_t seed = 0; compared < 1000; ++seed) {
    Judgment j = conclusion(s, random_derivation(s, seed, opt));
    if (labels_of(j).size() > 6 || j.scalars.size() > 6) continue;
    Judgment k = disguise(j, rng);
    if (seed % 2) k = mutate(k, rng);
    bool expected = oracle_free_equal(j, k);
    if (free_equal(j, k).has_value() != expected) {
      v.fail("disagrees on " + to_string(j) + " vs " + to_string(k));
      break;
    }
    ++compared;
    equal += expected;
  }
  v.require(equal > 0 && equal < compared, "sample has no near misses");
  Judgment pa = read_judgment("|- (f^a.1, f^b.1, f^a.2, f^b.2) : (B, B, C, C)");
  Judgment pb = read_judgment("|- (f^a.1, f^b.1, f^b.2, f^a.2) : (B, B, C, C)");
  v.require(!free_equal(pa, pb), "crossed pairings reported equal");
  Judgment sa = read_judgment("|- ( | f, g) : ()");
  Judgment sb = read_judgment("|- ( | g, f) : ()");
  v.require(free_equal(sa, sb).has_value(), "scalar order matters");
  double t = seconds_since(t0);
  v.require(t < 60, "took " + fmt_time(t));
  if (v.ok) v.note = std::to_string(compared) + " pairs, " + std::to_string(equal) + " equal, " + fmt_time(t);
  return v;
}

std::set<std::string> generators_of(const Axiom& a) {
  std::set<std::string> out;
  for (const Judgment* j : {&a.lhs, &a.rhs})
    for (const auto& o : head_occurrences(*j))
      if (!o.term.is_var()) out.insert(o.term.generator().str());
  return out;
}

// Swaps the middle step's axiom for one mentioning a generator the original
// does not, falling back to the next differently named axiom.
std::optional<std::string> mutation_failure(const ProofOutcome& p) {
  if (p.script.steps.empty()) return std::nullopt;
  std::size_t k = p.script.steps.size() / 2;
  ProofScript bad = p.script;
  const auto& axioms = p.presentation->axioms;
  const std::string original = bad.steps[k].axiom;
  auto it = std::find_if(axioms.begin(), axioms.end(), [&](const Axiom& a) { return a.name == original; });
  std::size_t start = it == axioms.end() ? 0 : std::size_t(it - axioms.begin());
  std::set<std::string> own = it == axioms.end() ? std::set<std::string>{} : generators_of(*it);
  std::string fallback, chosen;
  for (std::size_t i = 1; i <= axioms.size() && chosen.empty(); ++i) {
    const Axiom& a = axioms[(start + i) % axioms.size()];
    if (a.name == original) continue;
    if (fallback.empty()) fallback = a.name;
    auto g = generators_of(a);
    if (!std::includes(own.begin(), own.end(), g.begin(), g.end())) chosen = a.name;
  }
  bad.steps[k].axiom = chosen.empty() ? fallback : chosen;
  bad.steps[k].pre.reset();
  bad.steps[k].post.reset();
  ProofReport r = check_proof(*p.presentation, bad);
  std::string tag = p.script.name + " step " + std::to_string(k + 1) + " as " + bad.steps[k].axiom;
  if (r.first_failure() != k + 1) return tag + " not caught at that step";
  for (const auto& s : r.steps)
    if (s.index != k + 1 && !s.ok) return tag + " also broke step " + std::to_string(s.index);
  return std::nullopt;
}

Verdict ac7() {
  Verdict v;
  auto t0 = Clock::now();
  std::size_t files = 0, mutated = 0;
  for (const auto& f : corpus_files()) {
    auto path = default_corpus_dir() / f;
    CorpusEntry e = run_corpus_file(path);
    ++files;
    if (!e.ok) {
      v.fail(f + ": " + e.detail);
      continue;
    }
    Workspace w;
    const FileResult& r = w.load_file(path);
    for (const auto& p : r.proofs) {
      if (p.script.steps.empty()) continue;
      ++mutated;
      if (auto why = mutation_failure(p)) v.fail(f + ": " + *why);
    }
  }
  double t = seconds_since(t0);
  v.require(t < 10, "took " + fmt_time(t));
  if (v.ok) v.note = std::to_string(files) + " files, " + std::to_string(mutated) + " mutations caught, " + fmt_time(t);
  return v;
}

Verdict ac8() {
  Verdict v;
  Workspace w;
  const FileResult& r = w.load_file(default_corpus_dir() / "tightening_syntactic.judg");
  const NamedJudgment* a = r.find("traced_after");
  const NamedJudgment* b = r.find("traced_before");
  if (!a || !b) {
    v.fail("judgments missing");
    return v;
  }
  v.require(to_string(a->judgment) == to_string(b->judgment), "strings differ");
  return v;
}

Verdict ac9() {
  Verdict v;
  Signature s = mixed_signature();
  for (const auto& j : produced) {
    try {
      assert_distinct_subterms(s, check(s, j));
    } catch (const std::exception& e) {
      v.fail(to_string(j) + ": " + e.what());
      break;
    }
  }
  Signature f;
  f.add_object(ObjectName("A"));
  f.add_object(ObjectName("B"));
  f.add_generator(GeneratorName("f"), {objs({"A"}), objs({"B", "B"})});
  f.add_generator(GeneratorName("g"), {objs({"B"}), objs({"A"})});
  Context x{{VarName("x"), ObjectName("A")}};
  auto rejected = [&](const Judgment& j) {
    try {
      check(f, j);
    } catch (const CheckError& e) {
      return e.kind() == CheckErrorKind::DuplicateComponent || e.kind() == CheckErrorKind::SharedArgument;
    }
    return false;
  };
  Term f1 = comp("f", 1, {sweedler::testing::v("x")});
  Term f2 = comp("f", 2, {sweedler::testing::v("x")});
  v.require(rejected(Judgment(x, {ap("g", {f1}), ap("g", {f1}), f2}, objs({"A", "A", "B"}))), "duplicate not rejected");
  v.require(rejected(Judgment(x, {ap("g", {f1}), f1, f2}, objs({"A", "B", "B"}))), "shared argument not rejected");
  if (v.ok) v.note = std::to_string(produced.size()) + " judgments";
  return v;
}

Verdict ac10() {
  Verdict v;
  auto proofs_of = [](Workspace& w, const char* file) -> const FileResult& {
    return w.load_file(default_corpus_dir() / file);
  };
  Workspace w1;
  const FileResult& two = proofs_of(w1, "frobenius_two_sided.prf");
  bool seen = false;
  for (const auto& p : two.proofs) {
    if (p.script.name != "frob_left") continue;
    seen = true;
    v.require(p.script.steps.size() == 5, "frob_left has " + std::to_string(p.script.steps.size()) + " steps");
    v.require(p.report.ok(), "frob_left fails");
  }
  v.require(seen, "frob_left missing");
  Workspace w2;
  const FileResult& dual = proofs_of(w2, "frobenius_selfdual.prf");
  for (const char* name : {"zigzag_left", "zigzag_right"}) {
    auto it = std::find_if(dual.proofs.begin(), dual.proofs.end(),
                           [&](const ProofOutcome& p) { return p.script.name == name; });
    if (it == dual.proofs.end())
      v.fail(std::string(name) + " missing");
    else
      v.require(it->report.ok(), std::string(name) + " fails");
  }
  return v;
}

}  // namespace

int main() {
  std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
  int failed = 0;
  for (auto& [name, run] : criteria) {
    Verdict r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.fail(std::string("threw: ") + e.what());
    }
    std::printf("%s %s%s%s\n", name, r.ok ? "PASS" : "FAIL", r.note.empty() ? "" : "  ", r.note.c_str());
    failed += !r.ok;
  }
  return failed ? 1 : 0;
}
