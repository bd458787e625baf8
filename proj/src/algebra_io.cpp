#include "ocw/algebra_io.hpp"

#include <fstream>
#include <vector>

namespace ocw {

namespace {

using nlohmann::json;

Element lookup(const std::vector<std::string>& names, const std::string& s,
               const char* where) {
  for (int i = 0; i < static_cast<int>(names.size()); ++i)
    if (names[i] == s) return Element{i};
  throw StructuralError(std::string(where) + ": unknown element name '" + s +
                        "'");
}

}  // namespace

OAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw StructuralError("algebra document must be an object");
  std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
  const int n = static_cast<int>(names.size());
  if (n < 1 || n > max_carrier)
    throw StructuralError("carrier size out of range");
  Element unit = lookup(names, j.at("unit").get<std::string>(), "unit");

  std::vector<Element> product(static_cast<std::size_t>(n) * n);
  const json& prod = j.at("product");
  if (!prod.is_array() || prod.size() != static_cast<std::size_t>(n))
    throw StructuralError("product must be an |M|x|M| array of names");
  for (int i = 0; i < n; ++i) {
    const json& row = prod.at(i);
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw StructuralError("product row has wrong length");
    for (int k = 0; k < n; ++k)
      product[i * n + k] = lookup(names, row.at(k).get<std::string>(), "product");
  }

  auto unary = [&](const char* field) {
    std::vector<Element> t(n);
    const json& m = j.at(field);
    if (!m.is_object() || m.size() != static_cast<std::size_t>(n))
      throw StructuralError(std::string(field) + " must map every element");
    for (auto it = m.begin(); it != m.end(); ++it)
      t[lookup(names, it.key(), field).v] =
          lookup(names, it.value().get<std::string>(), field);
    return t;
  };
  std::vector<Element> omega = unary("omega");
  std::vector<Element> omega_star = unary("omegastar");

  // Entries whose set contains the unit may be omitted: they are derived
  // from axiom 5 below.
  std::vector<Element> shuffle(std::size_t{1} << n, Element{-1});
  for (const json& entry : j.at("shuffle")) {
    Mask m = 0;
    for (const json& s : entry.at("set"))
      m |= bit(lookup(names, s.get<std::string>(), "shuffle set"));
    if (m == 0) throw StructuralError("shuffle entry with empty set");
    if (shuffle[m].v >= 0)
      throw StructuralError("duplicate shuffle entry");
    shuffle[m] = lookup(names, entry.at("value").get<std::string>(), "shuffle");
  }
  const Mask ub = Mask{1} << unit.v;
  if (shuffle[ub].v < 0) shuffle[ub] = unit;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    if (shuffle[m].v >= 0) continue;
    if ((m & ub) && shuffle[m & ~ub].v >= 0)
      shuffle[m] = shuffle[m & ~ub];
    else
      throw StructuralError("shuffle table misses a subset");
  }

  return OAlgebra(j.value("name", std::string{}), std::move(names), unit,
                  std::move(product), std::move(omega), std::move(omega_star),
                  std::move(shuffle));
}

nlohmann::json algebra_to_json(const OAlgebra& a) {
  json j;
  j["name"] = a.name();
  j["elements"] = a.element_names();
  j["unit"] = a.element_name(a.unit());
  json prod = json::array();
  for (int i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < a.size(); ++k)
      row.push_back(a.element_name(a.mul(Element{i}, Element{k})));
    prod.push_back(std::move(row));
  }
  j["product"] = std::move(prod);
  json om = json::object(), os = json::object();
  for (int i = 0; i < a.size(); ++i) {
    om[a.element_name(Element{i})] = a.element_name(a.omega(Element{i}));
    os[a.element_name(Element{i})] = a.element_name(a.omega_star(Element{i}));
  }
  j["omega"] = std::move(om);
  j["omegastar"] = std::move(os);
  // Canonical form: only subsets without the unit, ascending by bitmask.
  json sh = json::array();
  for (Mask m = 1; m <= a.full_mask(); ++m) {
    if (in_mask(m, a.unit())) continue;
    json names = json::array();
    for (int i = 0; i < a.size(); ++i)
      if (in_mask(m, Element{i})) names.push_back(a.element_name(Element{i}));
    sh.push_back({{"set", std::move(names)},
                  {"value", a.element_name(a.shuffle(m))}});
  }
  j["shuffle"] = std::move(sh);
  return j;
}

OAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open algebra file: " + path);
  json j;
  in >> j;
  return algebra_from_json(j);
}

}  // namespace ocw
