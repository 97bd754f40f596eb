#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sweedler/term.hpp"

namespace sweedler {

struct Arity {
  std::vector<ObjectName> domain;
  std::vector<ObjectName> codomain;
  friend bool operator==(const Arity&, const Arity&) = default;
};

class Signature {
 public:
  void add_object(const ObjectName& a) {
    if (a.empty()) throw std::invalid_argument("empty object name");
    if (!has_object(a)) objects_.push_back(a);
  }

  void add_generator(const GeneratorName& g, Arity arity) {
    if (g.empty()) throw std::invalid_argument("empty generator name");
    for (const auto& o : arity.domain) require_object(o, g);
    for (const auto& o : arity.codomain) require_object(o, g);
    auto it = generators_.find(g);
    if (it != generators_.end()) {
      if (it->second == arity) return;
      throw std::invalid_argument("generator '" + g.str() + "' declared twice with different arities");
    }
    generators_.emplace(g, std::move(arity));
    order_.push_back(g);
  }

  bool has_object(const ObjectName& a) const { return std::find(objects_.begin(), objects_.end(), a) != objects_.end(); }

  const Arity* find(const GeneratorName& g) const {
    auto it = generators_.find(g);
    return it == generators_.end() ? nullptr : &it->second;
  }

  const Arity& arity(const GeneratorName& g) const {
    if (auto* a = find(g)) return *a;
    throw std::out_of_range("unknown generator '" + g.str() + "'");
  }

  const std::vector<ObjectName>& objects() const { return objects_; }
  const std::vector<GeneratorName>& generators() const { return order_; }

  void merge(const Signature& other) {
    for (const auto& o : other.objects_) add_object(o);
    for (const auto& g : other.order_) add_generator(g, other.generators_.at(g));
  }

 private:
  void require_object(const ObjectName& o, const GeneratorName& g) const {
    if (!has_object(o))
      throw std::invalid_argument("generator '" + g.str() + "' uses undeclared object '" + o.str() + "'");
  }

  std::vector<ObjectName> objects_;
  std::map<GeneratorName, Arity> generators_;
  std::vector<GeneratorName> order_;
};

struct Axiom {
  std::string name;
  Judgment lhs;
  Judgment rhs;
};

// A derived generator: params are the body's context.
struct Definition {
  std::string name;
  Judgment body;
};

struct SweedlerRegistration {
  GeneratorName comult;
  GeneratorName counit;
};

struct Presentation {
  std::string name;
  Signature signature;
  std::vector<Axiom> axioms;
  std::vector<Definition> definitions;
  std::map<ObjectName, SweedlerRegistration> sweedler;
  // Theories whose axioms this one contains; lemmas proved there apply here.
  std::vector<std::string> lineage;

  const Axiom* find_axiom(const std::string& n) const {
    for (const auto& a : axioms)
      if (a.name == n) return &a;
    return nullptr;
  }
  const Definition* find_definition(const std::string& n) const {
    for (const auto& d : definitions)
      if (d.name == n) return &d;
    return nullptr;
  }
  bool includes(const std::string& theory) const {
    return theory == name || std::find(lineage.begin(), lineage.end(), theory) != lineage.end();
  }
};

}  // namespace sweedler
