#include "kzmodp/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace kzmodp {

json field_header(const PrimeField& f) { return json{{"p", f.modulus()}, {"ext_degree", 1}}; }

json field_header(const ExtField& f) {
  return json{{"p", f.characteristic()}, {"ext_degree", f.degree()}, {"modulus", to_json(f.modulus())}};
}

json field_header(const RatFuncField<PrimeField>& f) {
  return json{{"p", f.base().modulus()}, {"ext_degree", 1}, {"nvars", f.nvars()}};
}

json to_json(const Fp& a) { return a.value(); }

json to_json(const ExtElem& a) { return a.coefficients(); }

json to_json(const RatFunc<PrimeField>& f) {
  return json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
}

Fp element_from_json(const PrimeField& f, const json& j) {
  if (!j.is_number_integer()) throw SchemaError("coefficient must be an integer");
  return f.from_int(j.get<long long>());
}

ExtElem element_from_json(const ExtField& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (!j.is_array() || j.size() > static_cast<std::size_t>(f.degree())) {
    throw SchemaError("extension element must be a list of at most ext_degree coefficients");
  }
  std::vector<std::uint32_t> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw SchemaError("coefficient must be an integer");
    c.push_back(f.base().from_int(x.get<long long>()).value());
  }
  return f.from_coefficients(std::move(c));
}

RatFunc<PrimeField> element_from_json(const RatFuncField<PrimeField>& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw SchemaError("rational function must be {\"num\": poly, \"den\": poly}");
  }
  auto den = multipoly_from_json(f.base(), f.nvars(), j["den"]);
  if (den.is_zero()) throw DivisionByZero();
  return RatFunc<PrimeField>(multipoly_from_json(f.base(), f.nvars(), j["num"]), den);
}

json to_json(const KzParams& params) {
  return json{{"p", params.p}, {"q", params.q}, {"n", params.n}, {"k", params.k},
              {"a", params.a}, {"M", params.M}, {"ak", params.ak()}};
}

KzParams params_from_json(const json& j) {
  for (const char* key : {"p", "q", "n"}) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
      throw SchemaError(std::string("params need a non-negative integer \"") + key + "\"");
    }
  }
  const auto params = KzParams::derive(j["p"].get<std::uint64_t>(), j["q"].get<std::uint64_t>(),
                                       j["n"].get<std::uint64_t>());
  const std::pair<const char*, std::uint32_t> derived[] = {
      {"k", params.k}, {"a", params.a}, {"M", params.M}, {"ak", params.ak()}};
  for (const auto& [key, value] : derived) {
    if (j.contains(key) && j[key].get<std::uint64_t>() != value) {
      throw SchemaError(std::string("\"") + key + "\" is inconsistent with (p, q, n)");
    }
  }
  return params;
}

json to_json(const VerifyReport& r) {
  json residuals = json::array();
  for (const auto& row : r.residuals) residuals.push_back(to_json(row));
  return json{{"flat", r.flat}, {"sum_zero", r.sum_zero}, {"residuals", residuals}};
}

json to_json(const RankReport& r) {
  return json{{"ranks", r.ranks},      {"majority", r.majority}, {"agreeing", r.agreeing},
              {"expected", r.expected}, {"field", r.field}};
}

json to_json(const Spectrum& s) { return json{{"kernel_dim", s.kernel_dim}, {"image_dim", s.image_dim}}; }

json to_json(const ReducibilityWitness& w) {
  json out{{"condition", to_string(w.condition)}};
  if (w.condition != Condition::R3) {
    out["l"] = w.l;
    out["m"] = w.m;
  }
  return out;
}

ReducibilityWitness witness_from_json(const json& j) {
  if (!j.is_object() || !j.contains("condition")) throw SchemaError("witness needs \"condition\"");
  const auto c = j["condition"].get<std::string>();
  ReducibilityWitness w{Condition::R3, 0, 0};
  if (c == "r3") return w;
  if (c == "r1") {
    w.condition = Condition::R1;
  } else if (c == "r2") {
    w.condition = Condition::R2;
  } else {
    throw SchemaError("unknown condition " + c);
  }
  w.l = j.at("l").get<std::uint64_t>();
  w.m = j.at("m").get<std::uint64_t>();
  return w;
}

json to_json(const InstanceReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.second_witnesses) witnesses.push_back(to_json(w));
  return json{
      {"first",
       {{"L", r.first_L.str()}, {"K", r.first_K.str()}, {"condition", "r1"}, {"l", r.first_l}, {"m", r.first_m},
        {"holds", r.first_holds}}},
      {"second",
       {{"L", r.second_L.str()},
        {"K", r.second_K.str()},
        {"stated", {{"condition", "r2"}, {"l", r.stated_l}, {"m", r.stated_m}, {"holds", r.stated_holds}}},
        {"corrected",
         {{"condition", "r2"}, {"l", r.corrected_l}, {"m", r.stated_m}, {"holds", r.corrected_holds}}},
        {"scan_bound", r.scan_bound},
        {"witnesses", witnesses}}}};
}

json to_json(const DescentResult& d) {
  return json{{"common", to_json(d.common)}, {"top", to_json(d.top)}, {"bottom", to_json(d.bottom)}};
}

namespace {

long long parse_integer(std::string_view s, const std::string& context) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw SchemaError("bad integer '" + std::string(s) + "' in " + context);
  return v;
}

}  // namespace

UniPoly<PrimeField> parse_sparse_poly(const PrimeField& field, const std::string& text) {
  std::string s;
  std::copy_if(text.begin(), text.end(), std::back_inserter(s), [](unsigned char c) { return !std::isspace(c); });
  UniPoly<PrimeField> out(field);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = std::min(s.find(',', start), s.size());
    const std::string_view term(s.data() + start, comma - start);
    const auto colon = term.find(':');
    if (colon == std::string_view::npos) throw SchemaError("term '" + std::string(term) + "' is not exponent:coefficient");
    const long long e = parse_integer(term.substr(0, colon), "exponent");
    if (e < 0) throw SchemaError("negative exponent in '" + std::string(term) + "'");
    const long long c = parse_integer(term.substr(colon + 1), "coefficient");
    const auto idx = static_cast<std::size_t>(e);
    out.set_coeff(idx, out.coeff(idx) + field.from_int(c));
    start = comma + 1;
  }
  return out;
}

}  // namespace kzmodp
