// JSON carriers: the matrix format {"rows": r, "cols": c, "data": [[re, im], ...]}
// (row-major) is normative for the whole artifact; block elements add a
// "blocks" array; complex scalars on the command line read as "re+imi".

#pragma once

#include "opfactor/vnalg.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace opfactor {

inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      data.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix json: non-positive shape");
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw std::invalid_argument("matrix json: data length != rows*cols");
  ComplexMatrix m(rows, cols);
  Eigen::Index idx = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j2 = 0; j2 < cols; ++j2, ++idx)
      m(i, j2) = Complex(data[idx].at(0).get<double>(), data[idx].at(1).get<double>());
  require_finite(m, "matrix json");
  return m;
}

inline ComplexMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return matrix_from_json(j);
}

inline nlohmann::json element_to_json(const AlgebraElement& e) {
  nlohmann::json blocks = nlohmann::json::array();
  for (auto b : e.structure.block_sizes) blocks.push_back(b);
  return {{"blocks", blocks}, {"matrix", matrix_to_json(e.matrix)}};
}

inline AlgebraElement element_from_json(const nlohmann::json& j) {
  BlockStructure s;
  for (const auto& b : j.at("blocks")) s.block_sizes.push_back(b.get<Eigen::Index>());
  return AlgebraElement(s, matrix_from_json(j.at("matrix")));
}

inline AlgebraElement load_element(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return element_from_json(j);
}

// "re+imi" / "re-imi" / plain real, locale-independent.
inline Complex parse_complex(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
      split = i;  // last sign not belonging to an exponent
  }
  auto to_double = [](const std::string& t) {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad number: " + t);
    return v;
  };
  if (s.back() == 'i') {
    if (split == std::string::npos) {
      std::string im = s.substr(0, s.size() - 1);
      if (im.empty() || im == "+" || im == "-") im += "1";
      return Complex(0.0, to_double(im));
    }
    std::string im = s.substr(split, s.size() - 1 - split);
    if (im == "+" || im == "-") im += "1";
    return Complex(to_double(s.substr(0, split)), to_double(im));
  }
  return Complex(to_double(s), 0.0);
}

}  // namespace opfactor
