#ifndef KZMODP_SERIALIZE_HPP
#define KZMODP_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "kzmodp/annihilator.hpp"
#include "kzmodp/derham.hpp"
#include "kzmodp/ext_field.hpp"
#include "kzmodp/field.hpp"
#include "kzmodp/kz_system.hpp"
#include "kzmodp/multipoly.hpp"
#include "kzmodp/ratfunc.hpp"
#include "kzmodp/unipoly.hpp"
#include "kzmodp/verma.hpp"
#include "kzmodp/wronskian.hpp"

namespace kzmodp {

using json = nlohmann::json;

// Thrown on documents that do not match the schemas below.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& msg) : Error("schema: " + msg) {}
};

// Field headers: {"p": int, "ext_degree": int}; extension fields also carry
// their modulus, the symbolic field its number of variables.
json field_header(const PrimeField& f);
json field_header(const ExtField& f);
json field_header(const RatFuncField<PrimeField>& f);

// Elements: an integer in 0..p-1; a coefficient list for extension
// elements (lowest power first); {"num", "den"} for rational functions.
json to_json(const Fp& a);
json to_json(const ExtElem& a);
json to_json(const RatFunc<PrimeField>& f);

Fp element_from_json(const PrimeField& f, const json& j);
ExtElem element_from_json(const ExtField& f, const json& j);
RatFunc<PrimeField> element_from_json(const RatFuncField<PrimeField>& f, const json& j);

// Univariate: [[exponent, coefficient], ...] over nonzero terms, ascending.
template <Field F>
json to_json(const UniPoly<F>& f) {
  json out = json::array();
  for (long d = 0; d <= f.degree(); ++d) {
    const auto& c = f.coeff(static_cast<std::size_t>(d));
    if (!c.is_zero()) out.push_back(json::array({d, to_json(c)}));
  }
  return out;
}

template <Field F>
UniPoly<F> unipoly_from_json(const F& field, const json& j) {
  if (!j.is_array()) throw SchemaError("univariate polynomial must be a list of [exponent, coefficient]");
  UniPoly<F> out(field);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || t[0].get<long long>() < 0) {
      throw SchemaError("univariate term must be [exponent, coefficient]");
    }
    const auto e = static_cast<std::size_t>(t[0].get<long long>());
    out.set_coeff(e, out.coeff(e) + element_from_json(field, t[1]));
  }
  return out;
}

// Multivariate: [[[e_1, ..., e_n], coefficient], ...].
template <Field F>
json to_json(const MultiPoly<F>& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) out.push_back(json::array({m.exponents(f.nvars()), to_json(c)}));
  return out;
}

template <Field F>
MultiPoly<F> multipoly_from_json(const F& field, int nvars, const json& j) {
  if (!j.is_array()) throw SchemaError("multivariate polynomial must be a list of [[exponents], coefficient]");
  std::vector<typename MultiPoly<F>::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != static_cast<std::size_t>(nvars)) {
      throw SchemaError("multivariate term must be [[e_1, ..., e_n], coefficient]");
    }
    std::vector<unsigned> e;
    for (const auto& x : t[0]) {
      if (!x.is_number_integer() || x.get<long long>() < 0) throw SchemaError("exponents must be non-negative");
      e.push_back(x.get<unsigned>());
    }
    terms.emplace_back(Monomial::from_exponents(e), element_from_json(field, t[1]));
  }
  return MultiPoly<F>(field, nvars, std::move(terms));
}

template <class E>
json to_json(const std::vector<E>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

template <Field F>
std::vector<typename F::Element> vector_from_json(const F& field, const json& j) {
  if (!j.is_array()) throw SchemaError("expected a list of coefficients");
  std::vector<typename F::Element> out;
  for (const auto& x : j) out.push_back(element_from_json(field, x));
  return out;
}

// {"phi": c, "poles": [[i, m, c], ...]} with 1-based i, nonzero entries only.
template <Field F>
json to_json(const TwistedForm<F>& form) {
  json poles = json::array();
  for (std::size_t j = 0; j < form.poles.size(); ++j) {
    for (std::size_t m = 0; m < form.poles[j].size(); ++m) {
      if (!form.poles[j][m].is_zero()) poles.push_back(json::array({j + 1, m + 1, to_json(form.poles[j][m])}));
    }
  }
  return json{{"phi", to_json(form.phi)}, {"poles", poles}};
}

template <Field F>
TwistedForm<F> twisted_from_json(const F& field, std::size_t n, std::size_t M, const json& j) {
  if (!j.is_object() || !j.contains("phi") || !j.contains("poles") || !j["poles"].is_array()) {
    throw SchemaError("twisted form must be {\"phi\": c, \"poles\": [[i, m, c], ...]}");
  }
  auto form = TwistedForm<F>::zero(field, n, M);
  form.phi = element_from_json(field, j["phi"]);
  for (const auto& t : j["poles"]) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer()) {
      throw SchemaError("pole entry must be [i, m, c]");
    }
    const auto i = t[0].get<long long>(), m = t[1].get<long long>();
    if (i < 1 || i > static_cast<long long>(n) || m < 1 || m > static_cast<long long>(M)) {
      throw SchemaError("pole index out of range");
    }
    auto& slot = form.pole(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(m));
    slot = slot + element_from_json(field, t[2]);
  }
  return form;
}

template <Field F>
json to_json(const LogForm<F>& form) {
  return to_json(form.c);
}

template <Field F>
LogForm<F> logform_from_json(const F& field, const json& j) {
  return LogForm<F>{vector_from_json(field, j)};
}

template <Field F>
json to_json(const QPolynomial<F>& q) {
  return json{{"i", q.i}, {"A", to_json(q.A)}, {"form", to_json(q.form)}};
}

// {"dim", "expected", "relations_span", "basis"}
template <Field F>
json to_json(const AnnReport<F>& r) {
  json basis = json::array();
  for (const auto& c : r.basis) basis.push_back(to_json(c));
  return json{{"dim", r.dim}, {"expected", r.expected}, {"relations_span", r.relations_span}, {"basis", basis}};
}

template <Field F>
AnnReport<F> ann_report_from_json(const F& field, const json& j) {
  for (const char* key : {"dim", "expected", "relations_span", "basis"}) {
    if (!j.contains(key)) throw SchemaError(std::string("annihilator report is missing \"") + key + "\"");
  }
  AnnReport<F> r;
  r.dim = j["dim"].get<std::size_t>();
  r.expected = j["expected"].get<std::size_t>();
  r.relations_span = j["relations_span"].get<bool>();
  for (const auto& c : j["basis"]) r.basis.push_back(vector_from_json(field, c));
  if (r.basis.size() != r.dim) throw SchemaError("annihilator basis size differs from dim");
  return r;
}

// {"p", "q", "n", "k", "a", "M", "ak"}
json to_json(const KzParams& params);
// Rederives from (p, q, n) and rejects inconsistent k, a, M.
KzParams params_from_json(const json& j);

json to_json(const VerifyReport& r);
json to_json(const RankReport& r);
json to_json(const Spectrum& s);
json to_json(const ReducibilityWitness& w);
json to_json(const InstanceReport& r);
json to_json(const DescentResult& d);

ReducibilityWitness witness_from_json(const json& j);

// "e:c,e:c,..." e.g. "6:1,1:1" for t^6 + t. Whitespace is ignored.
UniPoly<PrimeField> parse_sparse_poly(const PrimeField& field, const std::string& text);

}  // namespace kzmodp

#endif  // KZMODP_SERIALIZE_HPP
