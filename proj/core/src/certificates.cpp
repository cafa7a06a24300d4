#include "braidnorm/certificates.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

namespace braidnorm {

using nlohmann::json;

BraidWord ConjugateProductCertificate::product() const {
  BraidWord acc;
  for (const ConjugateFactor& f : factors) {
    const BraidWord piece = f.sign >= 0 ? base : inverse(base);
    acc = concat(acc, conjugate(piece, f.conjugator));
  }
  return acc;
}

bool ConjugateProductCertificate::validate(ReductionBudget budget) const {
  for (const ConjugateFactor& f : factors)
    if (f.sign != 1 && f.sign != -1) return false;
  if (is_trivial(base, budget)) return false;  // conjugates of 1 bound nothing
  return equal_elements(product(), target, budget);
}

BraidWord NuWitness::product() const {
  BraidWord acc;
  for (const Factor& f : factors) acc = concat(acc, conjugate(f.k, f.g));
  return acc;
}

bool NuWitness::validate(ReductionBudget budget) const {
  if (n < 2) return false;
  for (const Factor& f : factors)
    if (width(f.k) > n) return false;
  return equal_elements(product(), element, budget);
}

BraidWord CommutatorCertificate::product() const {
  BraidWord acc;
  for (const Factor& f : factors) acc = concat(acc, commutator(f.f, f.g));
  return acc;
}

bool CommutatorCertificate::validate(ReductionBudget budget) const {
  if (bounds) {
    for (const Factor& f : factors) {
      if (!f.f_witness || !f.g_witness) return false;
      if (f.f_witness->n != bounds->n || f.g_witness->n != bounds->n)
        return false;
      if (static_cast<int>(f.f_witness->length()) > bounds->p) return false;
      if (static_cast<int>(f.g_witness->length()) > bounds->q) return false;
      if (!equal_elements(f.f_witness->element, f.f, budget)) return false;
      if (!equal_elements(f.g_witness->element, f.g, budget)) return false;
      if (!f.f_witness->validate(budget)) return false;
      if (!f.g_witness->validate(budget)) return false;
    }
  }
  return equal_elements(product(), target, budget);
}

bool DisplacementConjugateCertificate::validate(ReductionBudget budget) const {
  if (is_trivial(base, budget)) return false;
  BraidWord acc;
  for (const Section& s : sections) {
    if (s.factors.size() != 4) return false;
    ConjugateProductCertificate piece;
    piece.base = base;
    piece.target = s.target;
    piece.factors = s.factors;
    if (!piece.validate(budget)) return false;
    acc = concat(acc, s.target);
  }
  return equal_elements(acc, target, budget);
}

std::size_t DisplacementConjugateCertificate::conjugate_count() const noexcept {
  std::size_t total = 0;
  for (const Section& s : sections) total += s.factors.size();
  return total;
}

// --- JSON ---

namespace {

json factor_to_json(const ConjugateFactor& f) {
  return json{{"sign", f.sign}, {"conjugator", to_string(f.conjugator)}};
}

ConjugateFactor factor_from_json(const json& j) {
  ConjugateFactor f;
  f.sign = j.at("sign").get<int>();
  f.conjugator = parse_braid_word(j.at("conjugator").get<std::string>());
  return f;
}

json witness_to_json(const NuWitness& w) {
  json factors = json::array();
  for (const auto& f : w.factors)
    factors.push_back(json{{"k", to_string(f.k)}, {"g", to_string(f.g)}});
  return json{{"type", "nu_witness"},
              {"n", w.n},
              {"target", to_string(w.element)},
              {"factors", std::move(factors)}};
}

NuWitness witness_from_json(const json& j) {
  NuWitness w;
  w.n = j.at("n").get<int>();
  w.element = parse_braid_word(j.at("target").get<std::string>());
  for (const auto& f : j.at("factors")) {
    NuWitness::Factor nf;
    nf.k = parse_braid_word(f.at("k").get<std::string>());
    nf.g = parse_braid_word(f.at("g").get<std::string>());
    w.factors.push_back(std::move(nf));
  }
  return w;
}

}  // namespace

std::string to_json(const ConjugateProductCertificate& c) {
  json factors = json::array();
  for (const auto& f : c.factors) factors.push_back(factor_to_json(f));
  json j{{"type", "conjugate_product"},
         {"base", to_string(c.base)},
         {"target", to_string(c.target)},
         {"factors", std::move(factors)}};
  return j.dump(2);
}

std::string to_json(const NuWitness& w) { return witness_to_json(w).dump(2); }

std::string to_json(const CommutatorCertificate& c) {
  json factors = json::array();
  for (const auto& f : c.factors) {
    json jf{{"f", to_string(f.f)}, {"g", to_string(f.g)}};
    if (f.f_witness) jf["f_witness"] = witness_to_json(*f.f_witness);
    if (f.g_witness) jf["g_witness"] = witness_to_json(*f.g_witness);
    factors.push_back(std::move(jf));
  }
  json j{{"type", "commutator"},
         {"target", to_string(c.target)},
         {"factors", std::move(factors)}};
  if (c.bounds)
    j["bounds"] = json{{"n", c.bounds->n}, {"p", c.bounds->p}, {"q", c.bounds->q}};
  else
    j["bounds"] = nullptr;
  return j.dump(2);
}

std::string to_json(const DisplacementConjugateCertificate& c) {
  json sections = json::array();
  for (const auto& s : c.sections) {
    json factors = json::array();
    for (const auto& f : s.factors) factors.push_back(factor_to_json(f));
    sections.push_back(
        json{{"target", to_string(s.target)}, {"factors", std::move(factors)}});
  }
  json j{{"type", "displacement_conjugates"},
         {"base", to_string(c.base)},
         {"target", to_string(c.target)},
         {"sections", std::move(sections)}};
  return j.dump(2);
}

bool parse_and_validate_certificate(const std::string& json_text,
                                    ReductionBudget budget) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("certificate parse error: ") + e.what());
  }
  std::string type;
  try {
    type = j.at("type").get<std::string>();
    if (type == "conjugate_product") {
      ConjugateProductCertificate c;
      c.base = parse_braid_word(j.at("base").get<std::string>());
      c.target = parse_braid_word(j.at("target").get<std::string>());
      for (const auto& f : j.at("factors")) c.factors.push_back(factor_from_json(f));
      return c.validate(budget);
    }
    if (type == "nu_witness") {
      return witness_from_json(j).validate(budget);
    }
    if (type == "commutator") {
      CommutatorCertificate c;
      c.target = parse_braid_word(j.at("target").get<std::string>());
      if (j.contains("bounds") && !j.at("bounds").is_null()) {
        NormBounds b;
        b.n = j.at("bounds").at("n").get<int>();
        b.p = j.at("bounds").at("p").get<int>();
        b.q = j.at("bounds").at("q").get<int>();
        c.bounds = b;
      }
      for (const auto& f : j.at("factors")) {
        CommutatorCertificate::Factor cf;
        cf.f = parse_braid_word(f.at("f").get<std::string>());
        cf.g = parse_braid_word(f.at("g").get<std::string>());
        if (f.contains("f_witness")) cf.f_witness = witness_from_json(f.at("f_witness"));
        if (f.contains("g_witness")) cf.g_witness = witness_from_json(f.at("g_witness"));
        c.factors.push_back(std::move(cf));
      }
      return c.validate(budget);
    }
    if (type == "displacement_conjugates") {
      DisplacementConjugateCertificate c;
      c.base = parse_braid_word(j.at("base").get<std::string>());
      c.target = parse_braid_word(j.at("target").get<std::string>());
      for (const auto& s : j.at("sections")) {
        DisplacementConjugateCertificate::Section cs;
        cs.target = parse_braid_word(s.at("target").get<std::string>());
        for (const auto& f : s.at("factors")) cs.factors.push_back(factor_from_json(f));
        c.sections.push_back(std::move(cs));
      }
      return c.validate(budget);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("certificate field error: ") + e.what());
  }
  throw std::invalid_argument("unknown certificate type: " + type);
}

}  // namespace braidnorm
