#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pniep/matrix.hpp"

namespace pniep {

enum class TemplateId {
  Case1A,
  Case2B,
  Case2C,
  Case3D,
  A1,
  A2,
  A3,
  A4,
  A5,
  Toeplitz5,
  SotoP,
};

std::string_view to_string(TemplateId id);
std::optional<TemplateId> template_from_string(std::string_view name);

struct Position {
  std::size_t row = 0;  ///< 0-based
  std::size_t col = 0;
  friend bool operator==(const Position&, const Position&) = default;
};

struct Slot {
  std::string name;
  std::vector<Position> positions;
};

/// Placement of named parameters and constant ones in an n x n matrix; every
/// other entry is zero.
struct StructureTemplate {
  TemplateId id = TemplateId::Case1A;
  std::size_t n = 0;
  std::vector<Slot> slots;
  std::vector<Position> fixed_ones;

  std::vector<std::string> parameter_names() const;
};

/// Ordered name -> value map of solved parameters.
class ParameterAssignment {
 public:
  ParameterAssignment() = default;
  ParameterAssignment(std::initializer_list<std::pair<std::string, double>> values);

  void set(std::string_view name, double value);
  double get(std::string_view name) const;  ///< throws std::out_of_range
  bool contains(std::string_view name) const;
  const std::vector<std::pair<std::string, double>>& entries() const noexcept { return values_; }
  double min_value() const noexcept;

 private:
  std::vector<std::pair<std::string, double>> values_;
};

/// The fixed 5x5 shapes, or the Soto P structure of order `n` (parameters
/// p0..p{n-1}: p0 on the diagonal, p1..p{n-1} down the first column and
/// mirrored along the last row, ones on the superdiagonal).
StructureTemplate make_template(TemplateId id, std::size_t n = 5);

/// Fills the template. Missing parameters throw std::out_of_range.
Matrix instantiate(const StructureTemplate& tpl, const ParameterAssignment& params);

}  // namespace pniep
