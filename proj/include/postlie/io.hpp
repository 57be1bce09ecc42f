#pragma once

#include <optional>
#include <string>
#include <vector>

#include "postlie/grading.hpp"
#include "postlie/product.hpp"

namespace postlie {

// On-disk exchange document. Brackets are lists [i, j, [[k, coeff], ...]]
// with 1-based indices and i < j (the antisymmetric completion is
// implicit); products use ordered pairs (i, j) without symmetry; unspecified
// entries are zero. Coefficients are strings "p/q" or "p" over Q and plain
// integers in [0, p) over F_p. Tensors are stored raw so that validity
// checks can report failures instead of refusing to parse.
struct InputDocument {
  int schema = 1;
  Field field = Field::rationals();
  int dim = 0;
  std::optional<StructureTensor> g;
  std::optional<StructureTensor> n;
  std::optional<BilinearProduct> product;
  std::optional<std::vector<Degree>> grading;
};

InputDocument parse_document(const std::string& json_text);
std::string serialize_document(const InputDocument& doc);

InputDocument document_from_pair(const PAPair& pair);
InputDocument document_from_algebra(const LieAlgebra& g);

}  // namespace postlie
