#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sweedler/checker.hpp"
#include "sweedler/core_syntax.hpp"
#include "sweedler/signature.hpp"

namespace sweedler {

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> problems)
      : std::invalid_argument(join(problems)), problems_(std::move(problems)) {}
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& ps) {
    std::string s;
    for (const auto& p : ps) s += (s.empty() ? "" : "\n") + p;
    return s;
  }
  std::vector<std::string> problems_;
};

// Every problem with a presentation, one line each; empty when valid.
inline std::vector<std::string> presentation_problems(const Presentation& p) {
  std::vector<std::string> out;
  const Signature& s = p.signature;
  for (const auto& g : s.generators())
    if (s.has_object(ObjectName(g.str()))) out.push_back("generator '" + g.str() + "' shares its name with an object");
  auto side = [&](const std::string& what, const Judgment& j) {
    try {
      check(s, j);
    } catch (const CheckError& e) {
      out.push_back(what + " is not derivable: " + e.what());
    }
  };
  for (const auto& a : p.axioms) {
    if (!(a.lhs.context == a.rhs.context)) out.push_back("axiom " + a.name + ": sides have different contexts");
    if (!(a.lhs.types == a.rhs.types)) out.push_back("axiom " + a.name + ": sides have different codomain types");
    side("axiom " + a.name + " lhs", a.lhs);
    side("axiom " + a.name + " rhs", a.rhs);
  }
  for (std::size_t i = 0; i < p.axioms.size(); ++i)
    for (std::size_t k = i + 1; k < p.axioms.size(); ++k)
      if (p.axioms[i].name == p.axioms[k].name) out.push_back("axiom " + p.axioms[i].name + " declared twice");
  for (const auto& d : p.definitions) side("definition " + d.name, d.body);
  for (const auto& [obj, reg] : p.sweedler) {
    const Arity* c = s.find(reg.comult);
    const Arity* e = s.find(reg.counit);
    if (!c || !(c->domain == std::vector<ObjectName>{obj}) || !(c->codomain == std::vector<ObjectName>{obj, obj}))
      out.push_back("sweedler comultiplication for " + obj.str() + " must have shape " + obj.str() + " -> (" +
                    obj.str() + ", " + obj.str() + ")");
    if (!e || !(e->domain == std::vector<ObjectName>{obj}) || !e->codomain.empty())
      out.push_back("sweedler counit for " + obj.str() + " must have shape " + obj.str() + " -> ()");
  }
  return out;
}

inline const Presentation& validate_presentation(const Presentation& p) {
  auto problems = presentation_problems(p);
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return p;
}

namespace detail {

// Replaces whole identifiers according to `names`.
inline std::string rename_identifiers(const std::string& text, const std::map<std::string, std::string>& names) {
  std::string out;
  std::size_t i = 0;
  auto is_id = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) && (i == 0 || (!is_id(text[i - 1]) && text[i - 1] != '^'))) {
      std::size_t b = i;
      while (i < text.size() && is_id(text[i])) ++i;
      std::string id = text.substr(b, i - b);
      auto it = names.find(id);
      out += it == names.end() ? id : it->second;
    } else {
      out += text[i++];
    }
  }
  return out;
}

// Builds theory pieces from core-syntax templates written over M, m, e,
// comult, counit, antipode; a suffix such as "_H" renames all of them.
struct TheoryBuilder {
  Presentation& p;
  std::string suffix;
  std::string object = "M";

  std::map<std::string, std::string> names() const {
    if (suffix.empty() && object == "M") return {};
    std::map<std::string, std::string> m{{"M", object}};
    for (auto* g : {"m", "e", "comult", "counit", "antipode", "s", "t", "r"}) m[g] = std::string(g) + suffix;
    return m;
  }

  Judgment read(const std::string& ctx, const std::string& tuple, const std::string& types) const {
    return read_judgment(rename_identifiers(ctx + " |- " + tuple + " : " + types, names()));
  }

  void axiom(const std::string& name, const std::string& ctx, const std::string& lhs, const std::string& rhs,
             const std::string& types) {
    p.axioms.push_back({name + suffix, read(ctx, lhs, types), read(ctx, rhs, types)});
  }

  void define(const std::string& name, const std::string& ctx, const std::string& body, const std::string& types) {
    p.definitions.push_back({name + suffix, read(ctx, body, types)});
  }

  ObjectName obj() const { return ObjectName(object); }
  GeneratorName gen(const std::string& g) const { return GeneratorName(g + suffix); }

  void monoid() {
    p.signature.add_object(obj());
    p.signature.add_generator(gen("m"), {{obj(), obj()}, {obj()}});
    p.signature.add_generator(gen("e"), {{}, {obj()}});
    axiom("assoc", "x:M, y:M, z:M", "(m(m(x, y), z))", "(m(x, m(y, z)))", "(M)");
    axiom("unit_left", "x:M", "(m(e^a, x))", "(x)", "(M)");
    axiom("unit_right", "x:M", "(m(x, e^a))", "(x)", "(M)");
  }

  void comonoid() {
    p.signature.add_object(obj());
    p.signature.add_generator(gen("comult"), {{obj()}, {obj(), obj()}});
    p.signature.add_generator(gen("counit"), {{obj()}, {}});
    axiom("coassoc", "x:M", "(comult.1(comult.1(x)), comult.2(comult.1(x)), comult.2(x))",
          "(comult.1(x), comult.1(comult.2(x)), comult.2(comult.2(x)))", "(M, M, M)");
    axiom("counit_right", "x:M", "(comult.1(x) | counit(comult.2(x)))", "(x)", "(M)");
    axiom("counit_left", "x:M", "(comult.2(x) | counit(comult.1(x)))", "(x)", "(M)");
    p.sweedler[obj()] = {gen("comult"), gen("counit")};
  }

  void frobenius() {
    axiom("frob", "x:M, y:M", "(comult.1(x), m(comult.2(x), y))", "(m(x, comult.1(y)), comult.2(y))", "(M, M)");
  }

  void bimonoid() {
    axiom("bi_mult", "x:M, y:M", "(comult.1(m(x, y)), comult.2(m(x, y)))",
          "(m(comult.1(x), comult.1(y)), m(comult.2(x), comult.2(y)))", "(M, M)");
    axiom("bi_unit", "", "(comult.1(e^a), comult.2(e^a))", "(e^a, e^b)", "(M, M)");
    axiom("bi_counit", "x:M, y:M", "(| counit(m(x, y)))", "(| counit(x), counit(y))", "()");
    axiom("bi_counit_unit", "", "(| counit(e^a))", "()", "()");
  }

  void antipode() {
    p.signature.add_generator(gen("antipode"), {{obj()}, {obj()}});
    axiom("antipode_right", "x:M", "(m(comult.1(x), antipode(comult.2(x))))", "(e^a | counit(x))", "(M)");
    axiom("antipode_left", "x:M", "(m(antipode(comult.1(x)), comult.2(x)))", "(e^a | counit(x))", "(M)");
  }

  void weak_bimonoid() {
    axiom("w_mult", "x:M, y:M", "(comult.1(m(x, y)), comult.2(m(x, y)))",
          "(m(comult.1(x), comult.1(y)), m(comult.2(x), comult.2(y)))", "(M, M)");
    axiom("w_counit_1", "x:M, y:M, z:M", "(| counit(m(m(x, y), z)))",
          "(| counit(m(x, comult.1(y))), counit(m(comult.2(y), z)))", "()");
    axiom("w_counit_2", "x:M, y:M, z:M", "(| counit(m(m(x, y), z)))",
          "(| counit(m(x, comult.2(y))), counit(m(comult.1(y), z)))", "()");
    axiom("w_unit_1", "", "(comult.1(e^a), comult.1(comult.2(e^a)), comult.2(comult.2(e^a)))",
          "(comult.1(e^a), m(comult.2(e^a), comult.1(e^b)), comult.2(e^b))", "(M, M, M)");
    axiom("w_unit_2", "", "(comult.1(e^a), comult.1(comult.2(e^a)), comult.2(comult.2(e^a)))",
          "(comult.1(e^a), m(comult.1(e^b), comult.2(e^a)), comult.2(e^b))", "(M, M, M)");
    define("s", "x:M", "(comult.1(e^a) | counit(m(comult.2(e^a), x)))", "(M)");
    define("t", "x:M", "(comult.1(e^a) | counit(m(x, comult.2(e^a))))", "(M)");
    define("r", "x:M", "(comult.2(e^a) | counit(m(comult.1(e^a), x)))", "(M)");
  }

  void weak_antipode() {
    p.signature.add_generator(gen("antipode"), {{obj()}, {obj()}});
    axiom("wa_left", "x:M", "(m(antipode(comult.1(x)), comult.2(x)))",
          "(comult.1(e^a) | counit(m(x, comult.2(e^a))))", "(M)");
    axiom("wa_right", "x:M", "(m(comult.1(x), antipode(comult.2(x))))",
          "(comult.2(e^a) | counit(m(comult.1(e^a), x)))", "(M)");
    axiom("wa_idem", "x:M", "(m(m(antipode(comult.1(x)), comult.1(comult.2(x))), antipode(comult.2(comult.2(x)))))",
          "(antipode(x))", "(M)");
  }
};

inline void add_homomorphism(Presentation& p) {
  p.signature.add_generator("f", {{"H"}, {"K"}});
  auto ax = [&](const std::string& n, const std::string& ctx, const std::string& l, const std::string& r,
                const std::string& ty) {
    p.axioms.push_back({n, read_judgment(ctx + " |- " + l + " : " + ty), read_judgment(ctx + " |- " + r + " : " + ty)});
  };
  ax("hom_mult", "x:H, y:H", "(f(m_H(x, y)))", "(m_K(f(x), f(y)))", "(K)");
  ax("hom_comult", "x:H", "(comult_K.1(f(x)), comult_K.2(f(x)))", "(f(comult_H.1(x)), f(comult_H.2(x)))", "(K, K)");
  ax("hom_unit", "", "(f(e_H^a))", "(e_K^a)", "(K)");
  ax("hom_counit", "x:H", "(| counit_K(f(x)))", "(| counit_H(x))", "()");
}

}  // namespace detail

// Adds a dual A* with eta_A : () -> (A, A*), eps_A : (A*, A) -> () and the two
// zigzag laws for every object; existing generators and axioms carry over.
inline Presentation augment_compact_closed(Presentation p) {
  std::vector<ObjectName> originals = p.signature.objects();
  for (const auto& a : originals) {
    ObjectName dual(a.str() + "*");
    GeneratorName eta("eta_" + a.str()), eps("eps_" + a.str());
    if (p.signature.has_object(dual) || p.signature.find(eta) || p.signature.find(eps))
      throw ValidationError({"compact closed augmentation collides with existing name for " + a.str()});
  }
  for (const auto& a : originals) {
    const std::string& n = a.str();
    ObjectName dual(n + "*");
    p.signature.add_object(dual);
    p.signature.add_generator(GeneratorName("eta_" + n), {{}, {a, dual}});
    p.signature.add_generator(GeneratorName("eps_" + n), {{dual, a}, {}});
    auto j = [&](const std::string& s) { return read_judgment(s); };
    p.axioms.push_back({"beta_" + n, j("x:" + n + " |- (eta_" + n + "^u.1 | eps_" + n + "(eta_" + n + "^u.2, x)) : (" + n + ")"),
                        j("x:" + n + " |- (x) : (" + n + ")")});
    p.axioms.push_back({"etalaw_" + n,
                        j("w:" + n + "* |- (eta_" + n + "^u.2 | eps_" + n + "(w, eta_" + n + "^u.1)) : (" + n + "*)"),
                        j("w:" + n + "* |- (w) : (" + n + "*)")});
  }
  return p;
}

inline Presentation augment_compact_closed(const Signature& s) {
  Presentation p;
  p.signature = s;
  return augment_compact_closed(std::move(p));
}

// Commutative, cocommutative, special Frobenius structure on every object.
inline Presentation augment_hypergraph(Presentation p) {
  std::vector<ObjectName> originals = p.signature.objects();
  for (const auto& a : originals)
    for (auto* g : {"m_", "e_", "comult_", "counit_"})
      if (p.signature.find(GeneratorName(g + a.str())))
        throw ValidationError({"hypergraph augmentation collides with existing generator " + std::string(g) + a.str()});
  for (const auto& a : originals) {
    detail::TheoryBuilder b{p, "_" + a.str(), a.str()};
    b.monoid();
    b.comonoid();
    b.frobenius();
    b.axiom("comm", "x:M, y:M", "(m(x, y))", "(m(y, x))", "(M)");
    b.axiom("cocomm", "x:M", "(comult.1(x), comult.2(x))", "(comult.2(x), comult.1(x))", "(M, M)");
    b.axiom("special", "x:M", "(m(comult.1(x), comult.2(x)))", "(x)", "(M)");
  }
  return p;
}

inline Presentation augment_hypergraph(const Signature& s) {
  Presentation p;
  p.signature = s;
  return augment_hypergraph(std::move(p));
}

// Adds A_tensor_B with pairing and projection making it a tensor product.
inline Presentation augment_tensor_type(Presentation p, const ObjectName& a, const ObjectName& b) {
  if (!p.signature.has_object(a) || !p.signature.has_object(b))
    throw ValidationError({"tensor augmentation needs declared objects " + a.str() + " and " + b.str()});
  std::string ab = a.str() + "_tensor_" + b.str();
  GeneratorName pair("pair_" + a.str() + "_" + b.str()), proj("proj_" + a.str() + "_" + b.str());
  if (p.signature.has_object(ObjectName(ab)) || p.signature.find(pair) || p.signature.find(proj))
    throw ValidationError({"tensor augmentation collides with existing " + ab});
  p.signature.add_object(ObjectName(ab));
  p.signature.add_generator(pair, {{a, b}, {ObjectName(ab)}});
  p.signature.add_generator(proj, {{ObjectName(ab)}, {a, b}});
  std::string ctx = "x:" + a.str() + ", y:" + b.str();
  std::string pr = proj.str(), pa = pair.str();
  p.axioms.push_back({"tensor_beta_" + a.str() + "_" + b.str(),
                      read_judgment(ctx + " |- (x, y) : (" + a.str() + ", " + b.str() + ")"),
                      read_judgment(ctx + " |- (" + pr + ".1(" + pa + "(x, y)), " + pr + ".2(" + pa + "(x, y))) : (" +
                                    a.str() + ", " + b.str() + ")")});
  p.axioms.push_back({"tensor_eta_" + a.str() + "_" + b.str(), read_judgment("p:" + ab + " |- (p) : (" + ab + ")"),
                      read_judgment("p:" + ab + " |- (" + pa + "(" + pr + ".1(p), " + pr + ".2(p))) : (" + ab + ")")});
  return p;
}

inline Presentation augment_tensor_type(const Signature& s, const ObjectName& a, const ObjectName& b) {
  Presentation p;
  p.signature = s;
  return augment_tensor_type(std::move(p), a, b);
}

inline const std::vector<std::string>& builtin_theory_names() {
  static const std::vector<std::string> names{"dual_pair", "monoid",     "comonoid",        "frobenius",
                                              "bimonoid",  "hopf",       "weak_bimonoid",   "weak_hopf",
                                              "well_idempotent", "bimonoid_hom", "weak_hopf_hom"};
  return names;
}

inline Presentation builtin_theory(const std::string& name) {
  Presentation p;
  p.name = name;
  detail::TheoryBuilder b{p, "", "M"};
  if (name == "dual_pair") {
    Signature s;
    s.add_object("A");
    p = augment_compact_closed(s);
  } else if (name == "monoid") {
    b.monoid();
  } else if (name == "comonoid") {
    b.comonoid();
  } else if (name == "frobenius") {
    b.monoid();
    b.comonoid();
    b.frobenius();
    p.lineage = {"monoid", "comonoid"};
  } else if (name == "bimonoid" || name == "hopf") {
    b.monoid();
    b.comonoid();
    b.bimonoid();
    p.lineage = {"monoid", "comonoid"};
    if (name == "hopf") {
      b.antipode();
      p.lineage.push_back("bimonoid");
    }
  } else if (name == "weak_bimonoid" || name == "weak_hopf") {
    b.monoid();
    b.comonoid();
    b.weak_bimonoid();
    p.lineage = {"monoid", "comonoid"};
    if (name == "weak_hopf") {
      b.weak_antipode();
      p.lineage.push_back("weak_bimonoid");
    }
  } else if (name == "well_idempotent") {
    Presentation base;
    base.signature.add_object("X");
    base.signature.add_generator("i", {{}, {"X"}});
    base.signature.add_generator("f", {{"X", "X"}, {"X"}});
    base.axioms.push_back({"idem_unit", read_judgment("x:X |- (f(x, i^a)) : (X)"), read_judgment("x:X |- (x) : (X)")});
    base.axioms.push_back({"idem_split", read_judgment("x:X, y:X |- (x, y) : (X, X)"),
                           read_judgment("x:X, y:X |- (f(x, y), i^a) : (X, X)")});
    p = augment_compact_closed(std::move(base));
    p.definitions.push_back(
        {"phi", read_judgment("x:X |- (eta_X^v.2 | eps_X(eta_X^u.2, f(eta_X^v.1, f(x, eta_X^u.1)))) : (X*)")});
    p.definitions.push_back({"psi", read_judgment("w:X* |- (i^a | eps_X(w, i^b)) : (X)")});
  } else if (name == "bimonoid_hom" || name == "weak_hopf_hom") {
    for (auto* o : {"H", "K"}) {
      detail::TheoryBuilder side{p, std::string("_") + o, o};
      side.monoid();
      side.comonoid();
      if (name == "bimonoid_hom") {
        side.bimonoid();
      } else {
        side.weak_bimonoid();
        side.weak_antipode();
      }
    }
    detail::add_homomorphism(p);
  } else {
    throw std::invalid_argument("unknown builtin theory '" + name + "'");
  }
  p.name = name;
  return validate_presentation(p);
}

}  // namespace sweedler
