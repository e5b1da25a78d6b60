#include "pniep/templates.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pniep/error.hpp"

namespace pniep {

namespace {

struct NamedTemplate {
  TemplateId id;
  std::string_view name;
};

constexpr std::array<NamedTemplate, 11> kNames{{
    {TemplateId::Case1A, "CASE1_A"},
    {TemplateId::Case2B, "CASE2_B"},
    {TemplateId::Case2C, "CASE2_C"},
    {TemplateId::Case3D, "CASE3_D"},
    {TemplateId::A1, "A1"},
    {TemplateId::A2, "A2"},
    {TemplateId::A3, "A3"},
    {TemplateId::A4, "A4"},
    {TemplateId::A5, "A5"},
    {TemplateId::Toeplitz5, "TOEPLITZ5"},
    {TemplateId::SotoP, "SOTO_P"},
}};

// Rows of whitespace-separated tokens: "0", "1" or a parameter name.
StructureTemplate from_pattern(TemplateId id, std::initializer_list<std::string_view> rows) {
  StructureTemplate tpl;
  tpl.id = id;
  tpl.n = rows.size();
  std::size_t i = 0;
  for (std::string_view row : rows) {
    std::istringstream in{std::string(row)};
    std::string token;
    std::size_t j = 0;
    while (in >> token) {
      if (token == "1") {
        tpl.fixed_ones.push_back({i, j});
      } else if (token != "0") {
        auto it = std::find_if(tpl.slots.begin(), tpl.slots.end(),
                               [&](const Slot& s) { return s.name == token; });
        if (it == tpl.slots.end()) {
          tpl.slots.push_back({token, {}});
          it = std::prev(tpl.slots.end());
        }
        it->positions.push_back({i, j});
      }
      ++j;
    }
    ++i;
  }
  return tpl;
}

StructureTemplate soto_p(std::size_t n) {
  StructureTemplate tpl;
  tpl.id = TemplateId::SotoP;
  tpl.n = n;
  for (std::size_t k = 0; k < n; ++k) tpl.slots.push_back({"p" + std::to_string(k), {}});
  for (std::size_t i = 0; i < n; ++i) tpl.slots[0].positions.push_back({i, i});
  for (std::size_t i = 1; i < n; ++i) tpl.slots[i].positions.push_back({i, 0});
  // Last row, columns 1..n-2, carries p_{n-1-j}; (n-1, 0) is already p_{n-1}.
  for (std::size_t j = 1; j + 1 < n; ++j) tpl.slots[n - 1 - j].positions.push_back({n - 1, j});
  for (std::size_t i = 0; i + 1 < n; ++i) tpl.fixed_ones.push_back({i, i + 1});
  return tpl;
}

}  // namespace

std::string_view to_string(TemplateId id) {
  for (const auto& entry : kNames)
    if (entry.id == id) return entry.name;
  return "UNKNOWN";
}

std::optional<TemplateId> template_from_string(std::string_view name) {
  for (const auto& entry : kNames)
    if (entry.name == name) return entry.id;
  return std::nullopt;
}

std::vector<std::string> StructureTemplate::parameter_names() const {
  std::vector<std::string> names;
  for (const auto& slot : slots) names.push_back(slot.name);
  return names;
}

ParameterAssignment::ParameterAssignment(
    std::initializer_list<std::pair<std::string, double>> values) {
  for (const auto& [k, v] : values) set(k, v);
}

void ParameterAssignment::set(std::string_view name, double value) {
  for (auto& [k, v] : values_) {
    if (k == name) {
      v = value;
      return;
    }
  }
  values_.emplace_back(std::string(name), value);
}

double ParameterAssignment::get(std::string_view name) const {
  for (const auto& [k, v] : values_)
    if (k == name) return v;
  throw std::out_of_range("no parameter named " + std::string(name));
}

bool ParameterAssignment::contains(std::string_view name) const {
  return std::any_of(values_.begin(), values_.end(),
                     [&](const auto& kv) { return kv.first == name; });
}

double ParameterAssignment::min_value() const noexcept {
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& kv : values_) lowest = std::min(lowest, kv.second);
  return lowest;
}

StructureTemplate make_template(TemplateId id, std::size_t n) {
  switch (id) {
    case TemplateId::Case1A:
      return from_pattern(id, {"0 1 0 0 0",  //
                               "a 0 0 1 0",  //
                               "b 0 0 0 0",  //
                               "c 0 0 0 1",  //
                               "d c b a 0"});
    case TemplateId::Case2B:
      return from_pattern(id, {"0 0 0 0 1",  //
                               "a 0 0 1 0",  //
                               "b 0 0 0 0",  //
                               "0 c 0 0 0",  //
                               "0 0 b a 0"});
    case TemplateId::Case2C:
      return from_pattern(id, {"0 0 0 0 a",  //
                               "b 0 0 1 0",  //
                               "c 0 0 0 0",  //
                               "0 d 0 0 0",  //
                               "1 0 c b 0"});
    case TemplateId::Case3D:
      return from_pattern(id, {"0 0 1 0 0",  //
                               "0 0 0 1 0",  //
                               "c 0 0 0 1",  //
                               "b d 0 0 0",  //
                               "a b c 0 0"});
    case TemplateId::A1:
      return from_pattern(id, {"0 1 0 0 0",  //
                               "p 0 1 0 0",  //
                               "q 0 t 1 0",  //
                               "r 0 0 0 1",  //
                               "s r q p 0"});
    case TemplateId::A2:
      return from_pattern(id, {"0 1 0 0 0",  //
                               "0 0 1 0 0",  //
                               "q p t 1 0",  //
                               "r 0 p 0 1",  //
                               "s r q 0 0"});
    case TemplateId::A3:
      return from_pattern(id, {"0 1 0 0 0",  //
                               "p 0 1 0 0",  //
                               "q 0 t 1 0",  //
                               "r q 0 0 1",  //
                               "s r q p 0"});
    case TemplateId::A4:
      return from_pattern(id, {"0 1 0 0 0",  //
                               "p 0 1 0 0",  //
                               "q p t 1 0",  //
                               "r q p 0 1",  //
                               "s r q p 0"});
    case TemplateId::A5:
      // (5,5) is 0: a t there would break persymmetry and double the trace.
      return from_pattern(id, {"0 1 0 0 0",  //
                               "0 0 1 0 0",  //
                               "0 p t 1 0",  //
                               "r q p 0 1",  //
                               "s r 0 0 0"});
    case TemplateId::Toeplitz5:
      return from_pattern(id, {"t 1 0 0 0",  //
                               "p t 1 0 0",  //
                               "q p t 1 0",  //
                               "r q p t 1",  //
                               "s r q p t"});
    case TemplateId::SotoP:
      if (n < 1) throw Error(ErrorCode::PreconditionFailed, "SOTO_P needs n >= 1");
      return soto_p(n);
  }
  throw Error(ErrorCode::PreconditionFailed, "unknown template");
}

Matrix instantiate(const StructureTemplate& tpl, const ParameterAssignment& params) {
  Matrix m(tpl.n);
  for (const auto& pos : tpl.fixed_ones) m(pos.row, pos.col) = 1.0;
  for (const auto& slot : tpl.slots) {
    const double value = params.get(slot.name);
    for (const auto& pos : slot.positions) m(pos.row, pos.col) = value;
  }
  return m;
}

}  // namespace pniep
