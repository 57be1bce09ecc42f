#include "postlie/io.hpp"

#include <json.hpp>

namespace postlie {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Scalar coeff_from_json(const Field& f, const json& j, const std::string& where) {
  if (f.is_prime()) {
    if (!j.is_number_integer())
      throw parse_error(where + ": F_p coefficients must be integers");
    long v = j.get<long>();
    if (v < 0 || v >= f.characteristic())
      throw parse_error(where + ": residue out of range [0," +
                        std::to_string(f.characteristic()) + ")");
    return Scalar::of_long(f, v);
  }
  if (!j.is_string())
    throw parse_error(where + ": rational coefficients must be strings \"p/q\" or \"p\"");
  return Scalar::parse(f, j.get<std::string>());
}

ordered_json coeff_to_json(const Scalar& s) {
  if (s.field().is_prime()) return ordered_json(s.residue());
  return ordered_json(s.str());
}

// Entry shape: [i, j, [[k, coeff], ...]] with 1-based indices.
Vec terms_from_json(const Field& f, int dim, const json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where + ": expected a term list");
  Vec v = zero_vec(f, dim);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
      throw parse_error(where + ": terms are [k, coeff] with 1-based k");
    long k = term[0].get<long>();
    if (k < 1 || k > dim)
      throw parse_error(where + ": index " + std::to_string(k) + " out of range");
    v[static_cast<std::size_t>(k - 1)] =
        coeff_from_json(f, term[1], where) + v[static_cast<std::size_t>(k - 1)];
  }
  return v;
}

StructureTensor brackets_from_json(const Field& f, int dim, const json& j,
                                   const std::string& field_name) {
  StructureTensor c(f, dim);
  if (!j.is_array()) throw parse_error("field '" + field_name + "': expected an array");
  int entry_no = 0;
  for (const auto& e : j) {
    std::string where = "field '" + field_name + "' entry " + std::to_string(entry_no++);
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw parse_error(where + ": expected [i, j, [[k, coeff], ...]]");
    long i = e[0].get<long>(), jj = e[1].get<long>();
    if (i < 1 || i > dim || jj < 1 || jj > dim)
      throw parse_error(where + ": index out of range");
    if (i >= jj)
      throw parse_error(where + ": bracket entries require i < j (1-based)");
    c.set_bracket(static_cast<int>(i - 1), static_cast<int>(jj - 1),
                  terms_from_json(f, dim, e[2], where));
  }
  return c;
}

BilinearProduct product_from_json(const Field& f, int dim, const json& j) {
  BilinearProduct p(f, dim);
  if (!j.is_array()) throw parse_error("field 'product': expected an array");
  int entry_no = 0;
  for (const auto& e : j) {
    std::string where = "field 'product' entry " + std::to_string(entry_no++);
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw parse_error(where + ": expected [i, j, [[k, coeff], ...]]");
    long i = e[0].get<long>(), jj = e[1].get<long>();
    if (i < 1 || i > dim || jj < 1 || jj > dim)
      throw parse_error(where + ": index out of range");
    p.set_pair(static_cast<int>(i - 1), static_cast<int>(jj - 1),
               terms_from_json(f, dim, e[2], where));
  }
  return p;
}

ordered_json terms_to_json(const Vec& v) {
  ordered_json terms = ordered_json::array();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    terms.push_back(ordered_json::array({static_cast<long>(k + 1), coeff_to_json(v[k])}));
  }
  return terms;
}

ordered_json brackets_to_json(const StructureTensor& c) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < c.dim(); ++i)
    for (int j = i + 1; j < c.dim(); ++j) {
      Vec v = c.pair(i, j);
      if (vec_is_zero(v)) continue;
      out.push_back(ordered_json::array({i + 1, j + 1, terms_to_json(v)}));
    }
  return out;
}

ordered_json product_to_json(const BilinearProduct& p) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < p.dim(); ++i)
    for (int j = 0; j < p.dim(); ++j) {
      Vec v = p.pair(i, j);
      if (vec_is_zero(v)) continue;
      out.push_back(ordered_json::array({i + 1, j + 1, terms_to_json(v)}));
    }
  return out;
}

}  // namespace

InputDocument parse_document(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("document must be a JSON object");

  InputDocument doc;
  if (j.contains("schema")) {
    if (!j["schema"].is_number_integer() || j["schema"].get<int>() != 1)
      throw parse_error("field 'schema': only version 1 is supported");
  }
  if (!j.contains("field")) throw parse_error("missing field 'field'");
  const json& fj = j["field"];
  if (fj.is_string() && fj.get<std::string>() == "Q") {
    doc.field = Field::rationals();
  } else if (fj.is_object() && fj.contains("Fp") && fj["Fp"].is_number_integer()) {
    doc.field = Field::prime(fj["Fp"].get<long>());
  } else {
    throw parse_error("field 'field': expected \"Q\" or {\"Fp\": p}");
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw parse_error("missing or non-integer field 'dim'");
  doc.dim = j["dim"].get<int>();
  if (doc.dim < 0 || doc.dim > 64)
    throw parse_error("field 'dim': out of supported range");

  if (j.contains("g")) doc.g = brackets_from_json(doc.field, doc.dim, j["g"], "g");
  if (j.contains("n")) doc.n = brackets_from_json(doc.field, doc.dim, j["n"], "n");
  if (j.contains("product"))
    doc.product = product_from_json(doc.field, doc.dim, j["product"]);
  if (j.contains("grading")) {
    const json& gj = j["grading"];
    if (!gj.is_array() || static_cast<int>(gj.size()) != doc.dim)
      throw parse_error("field 'grading': expected one integer vector per basis vector");
    std::vector<Degree> degrees;
    for (const auto& dj : gj) {
      if (!dj.is_array()) throw parse_error("field 'grading': degrees are integer arrays");
      Degree d;
      for (const auto& x : dj) {
        if (!x.is_number_integer())
          throw parse_error("field 'grading': degrees are integer arrays");
        d.push_back(x.get<long>());
      }
      degrees.push_back(std::move(d));
    }
    doc.grading = std::move(degrees);
  }
  return doc;
}

std::string serialize_document(const InputDocument& doc) {
  ordered_json j;
  j["schema"] = 1;
  if (doc.field.is_rational())
    j["field"] = "Q";
  else
    j["field"] = ordered_json{{"Fp", doc.field.characteristic()}};
  j["dim"] = doc.dim;
  if (doc.g) j["g"] = brackets_to_json(*doc.g);
  if (doc.n) j["n"] = brackets_to_json(*doc.n);
  if (doc.product) j["product"] = product_to_json(*doc.product);
  if (doc.grading) {
    ordered_json gj = ordered_json::array();
    for (const Degree& d : *doc.grading) gj.push_back(d);
    j["grading"] = gj;
  }
  return j.dump(2) + "\n";
}

InputDocument document_from_pair(const PAPair& pair) {
  InputDocument doc;
  doc.field = pair.field();
  doc.dim = pair.dim();
  doc.g = pair.g().tensor();
  doc.n = pair.n().tensor();
  doc.product = pair.product();
  return doc;
}

InputDocument document_from_algebra(const LieAlgebra& g) {
  InputDocument doc;
  doc.field = g.field();
  doc.dim = g.dim();
  doc.g = g.tensor();
  return doc;
}

}  // namespace postlie
