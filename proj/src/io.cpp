#include "heyde/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace heyde {

FinGroup parse_group_spec(const std::string& text) {
  std::vector<int> orders;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find_first_of("xX", pos + 1);  // first char is 'z'/'Z'
    const std::string token = text.substr(pos, next == std::string::npos ? next : next - pos);
    if (token.size() < 2 || (token[0] != 'z' && token[0] != 'Z'))
      throw std::invalid_argument("group spec: expected 'Z<n>' at '" + token + "'");
    int n = 0;
    for (size_t i = 1; i < token.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(token[i])))
        throw std::invalid_argument("group spec: expected 'Z<n>' at '" + token + "'");
      n = n * 10 + (token[i] - '0');
      if (n > 1000000) throw std::invalid_argument("group spec: order too large at '" + token + "'");
    }
    if (n < 2)
      throw std::invalid_argument("group spec: order must be >= 2 at '" + token + "'");
    orders.push_back(n);
    if (next == std::string::npos) break;
    pos = next + 1;
    if (pos >= text.size())
      throw std::invalid_argument("group spec: trailing separator in '" + text + "'");
  }
  if (orders.empty()) throw std::invalid_argument("group spec: empty");
  return FinGroup(std::move(orders));
}

std::string format_group_spec(const FinGroup& g) {
  std::string s;
  for (size_t i = 0; i < g.orders().size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(g.orders()[i]);
  }
  return s.empty() ? "Z1" : s;
}

Elem parse_elem(const FinGroup& g, const std::string& text) {
  std::vector<int> coords;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        size_t used = 0;
        int v = std::stoi(part, &used);
        if (used != part.size()) throw std::invalid_argument(part);
        coords.push_back(v);
      } catch (const std::logic_error&) {
        throw std::invalid_argument("element: bad coordinate '" + part + "'");
      }
    }
  }
  if (static_cast<int>(coords.size()) != g.rank())
    throw std::invalid_argument("element '" + text + "' has wrong rank for " +
                                format_group_spec(g));
  for (int i = 0; i < g.rank(); ++i) {
    int n = g.orders()[i];
    coords[i] = ((coords[i] % n) + n) % n;
  }
  return coords;
}

std::string format_elem(const Elem& x) {
  std::string s;
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s;
}

GroupMap parse_map_spec(const FinGroup& g, const std::string& text) {
  // Scalar shorthand first.
  {
    size_t used = 0;
    bool scalar_ok = false;
    long long c = 0;
    try {
      c = std::stoll(text, &used);
      scalar_ok = used == text.size();
    } catch (const std::logic_error&) {
      scalar_ok = false;
    }
    if (scalar_ok) return GroupMap::scalar(g, c);
  }
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw std::invalid_argument("map spec: expected a scalar or a JSON matrix, got '" + text +
                                "'");
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("map spec: matrix rows must be arrays");
    std::vector<long long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw std::invalid_argument("map spec: entries must be integers");
      r.push_back(v.get<long long>());
    }
    m.push_back(std::move(r));
  }
  return GroupMap::from_matrix(g, std::move(m));
}

nlohmann::json map_to_json(const GroupMap& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : a.matrix()) rows.push_back(row);
  return rows;
}

nlohmann::json dist_to_json(const Dist& mu) {
  nlohmann::json j = nlohmann::json::object();
  for (long long i : mu.support())
    j[format_elem(mu.group().element(i))] = format_rational(mu.at_index(i));
  return j;
}

Dist dist_from_json(const FinGroup& g, const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("distribution: expected a JSON object");
  std::vector<Rat> mass(g.order(), Rat(0));
  for (const auto& [key, value] : j.items()) {
    const Elem x = parse_elem(g, key);
    if (!value.is_string())
      throw std::invalid_argument("distribution: mass for '" + key + "' must be a string p/q");
    mass[g.index_of(x)] += parse_rational(value.get<std::string>());
  }
  return Dist(g, std::move(mass));
}

nlohmann::json rg_charfn_to_json(const RGCharFn& f) {
  nlohmann::json j = nlohmann::json::object();
  const FinGroup& g = f.group();
  for (long long h = 0; h < g.order(); ++h) {
    nlohmann::json entry;
    entry["kappa"] = {format_rational(f.kappa()[h].re), format_rational(f.kappa()[h].im)};
    entry["quad"] = format_rational(f.quad()[h]);
    entry["lin"] = format_rational(f.lin()[h]);
    j[format_elem(g.element(h))] = std::move(entry);
  }
  return j;
}

RGCharFn rg_charfn_from_json(const FinGroup& g, const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("characteristic function: expected an object");
  const long long n = g.order();
  std::vector<Rat> quad(n), lin(n);
  std::vector<RatComplex> kappa(n);
  std::vector<char> seen(n, 0);
  for (const auto& [key, value] : j.items()) {
    const long long h = g.index_of(parse_elem(g, key));
    const auto& kj = value.at("kappa");
    kappa[h] = RatComplex(parse_rational(kj.at(0).get<std::string>()),
                          parse_rational(kj.at(1).get<std::string>()));
    quad[h] = parse_rational(value.at("quad").get<std::string>());
    lin[h] = parse_rational(value.at("lin").get<std::string>());
    seen[h] = 1;
  }
  for (long long h = 0; h < n; ++h)
    if (!seen[h])
      throw std::invalid_argument("characteristic function: missing character " +
                                  format_elem(g.element(h)));
  return RGCharFn(g, std::move(quad), std::move(lin), std::move(kappa));
}

std::string charfn_to_csv(const CharFn& phi) {
  std::ostringstream out;
  out << "y,re,im\n";
  out.precision(17);
  for (long long i = 0; i < phi.group.order(); ++i)
    out << '"' << format_elem(phi.group.element(i)) << "\"," << phi.values[i].real() << ','
        << phi.values[i].imag() << '\n';
  return out.str();
}

}  // namespace heyde
