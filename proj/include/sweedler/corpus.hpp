#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sweedler/workspace.hpp"

namespace sweedler {

inline const std::vector<std::string>& corpus_files() {
  static const std::vector<std::string> files{
      "trace_cyclic.prf",         "twisted_trace_cyclic.prf", "tightening_syntactic.judg",
      "idempotent_selfdual.prf",  "comodule_fixed_point.prf", "frobenius_two_sided.prf",
      "frobenius_selfdual.prf",   "hopf_antipode_unique.prf", "hopf_hom_antipode.prf",
      "weak_eq1.prf",             "weak_eq4.prf",             "weak_eq13.prf",
      "weak_eq11.prf",            "weak_antipode_unique.prf", "weak_hom_antipode.prf",
      "pointwise_uniqueness.prf", "weak_antihom.prf"};
  return files;
}

#ifdef SWEEDLER_CORPUS_DIR
inline std::filesystem::path default_corpus_dir() { return SWEEDLER_CORPUS_DIR; }
#else
inline std::filesystem::path default_corpus_dir() { return "corpus"; }
#endif

struct CorpusEntry {
  std::string file;
  bool ok = false;
  std::size_t proofs = 0;
  std::size_t steps = 0;
  std::size_t judgments = 0;
  std::string detail;  // first problem when not ok
};

// Loads one file in a fresh workspace and summarises it; judgments must
// check, `same` assertions hold and every proof verify.
inline CorpusEntry run_corpus_file(const std::filesystem::path& path, LoadOptions opt = {}) {
  CorpusEntry e;
  e.file = path.filename().string();
  try {
    Workspace w(opt);
    const FileResult& r = w.load_file(path);
    e.ok = true;
    for (const auto& j : r.judgments) {
      ++e.judgments;
      try {
        check(w.theory(j.theory).signature, j.judgment);
      } catch (const CheckError& err) {
        if (e.ok) e.detail = to_string(j.span) + ": " + j.name + ": " + err.what();
        e.ok = false;
      }
    }
    for (const auto& a : r.assertions)
      if (!a.ok) {
        if (e.ok) e.detail = to_string(a.span) + ": " + a.left + " and " + a.right + " print differently";
        e.ok = false;
      }
    for (const auto& p : r.proofs) {
      ++e.proofs;
      e.steps += p.script.steps.size();
      if (p.report.ok()) continue;
      if (e.ok) {
        if (auto k = p.report.first_failure()) {
          const StepReport& s = p.report.steps[*k - 1];
          e.detail = path.filename().string() + ":" + std::to_string(s.line) + ": " + p.script.name + " step " +
                     std::to_string(*k) + " (" + s.axiom + "): " + s.message;
        } else {
          e.detail = to_string(p.span) + ": " + p.script.name + ": " + p.report.message;
        }
      }
      e.ok = false;
    }
  } catch (const std::exception& err) {
    e.ok = false;
    e.detail = err.what();
  }
  return e;
}

}  // namespace sweedler
