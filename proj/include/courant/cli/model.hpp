#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "courant/bialgebra.hpp"
#include "courant/calc/multivector.hpp"
#include "courant/dirac.hpp"

namespace courant::cli {

/// Which chart a named block lives on.
enum class Side { Source, Target };

struct DiracBlock {
  Side side = Side::Source;
  // Exactly one presentation is set.
  std::vector<std::pair<AltTensor, AltTensor>> frame;  // (vector part, form part)
  std::optional<AltTensor> graph_bivector;
  std::optional<AltTensor> graph_form;
  std::optional<std::vector<AltTensor>> null;
  std::optional<std::vector<Rational>> point;
};

struct QuotientBlock {
  ChartPtr target;
  std::vector<Poly> map;
  AltTensor bracket;  // bivector on the target chart
};

struct SurjectionBlock {
  ChartPtr target;
  std::vector<Poly> map;
  AltTensor target_poisson;
};

/// I is a 2-form (B = TP) or a bivector (B = T*P).
struct HamiltonianBlock {
  bool bivector = false;
  AltTensor i;
};

struct SubalgebraBlock {
  Subspace l;
};

/// A parsed model file. Blocks are kept raw; commands build the structures
/// they need and validation errors surface there.
struct Model {
  ChartPtr chart;
  AltTensor poisson;  // bivector, not yet checked to be Poisson
  std::optional<unsigned> degree_cap;
  std::optional<std::vector<Rational>> point;
  std::map<std::string, DiracBlock> dirac;
  std::optional<QuotientBlock> quotient;
  std::optional<SurjectionBlock> surjection;
  std::map<std::string, HamiltonianBlock> hamiltonian;
  std::optional<LieBialgebra> bialgebra;
  std::map<std::string, SubalgebraBlock> subalgebras;
};

/// Throws ParseError (syntax, duplicate names, floats, unknown keys) and
/// ValidationError (shape errors naming the block).
Model parse_model(const std::string& text);
Model load_model(const std::string& path);

}  // namespace courant::cli
