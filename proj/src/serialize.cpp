#include "dseries/serialize.hpp"

#include <json.hpp>
#include <sstream>

namespace dseries {

using nlohmann::ordered_json;

namespace {

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::InvalidArgument, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const ordered_json::exception&) {
    throw Error(Errc::InvalidArgument, std::string("field '") + key + "' has the wrong type");
  }
}

std::vector<Scalar> listed(const Series& s, bool egf) {
  std::vector<Scalar> out;
  for (std::size_t n = 0; n <= s.order(); ++n) out.push_back(egf ? s.egf(n) : s[n]);
  return out;
}

}  // namespace

TriangleKind parse_kind(std::string_view name) {
  for (TriangleKind k : {TriangleKind::S1assoc, TriangleKind::S2assoc, TriangleKind::S1, TriangleKind::S2,
                         TriangleKind::Lah, TriangleKind::T1, TriangleKind::T2, TriangleKind::Other})
    if (kind_name(k) == name) return k;
  throw Error(Errc::InvalidArgument, "unknown triangle kind '" + std::string(name) + "'");
}

std::string csv_cell(const std::string& v) {
  if (v.find_first_of("/,\"") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string series_json(const Series& s, bool egf) {
  ordered_json coeffs = ordered_json::array();
  for (const Scalar& c : listed(s, egf)) coeffs.push_back(c.str());
  ordered_json j{{"order", s.order()}, {"ring", ring_name(s.ring())}, {"coeffs", coeffs}, {"egf", egf}};
  return j.dump(2);
}

Series series_from_json(std::string_view text) {
  ordered_json j = parse_json(text);
  auto order = field<std::size_t>(j, "order");
  Ring ring = parse_ring(field<std::string>(j, "ring"));
  auto coeffs = field<std::vector<std::string>>(j, "coeffs");
  bool egf = j.contains("egf") && j["egf"].is_boolean() && j["egf"].get<bool>();
  if (coeffs.size() != order + 1) throw Error(Errc::InvalidArgument, "coeffs length does not match order");
  std::vector<Scalar> c;
  for (std::size_t n = 0; n <= order; ++n) {
    Scalar v = Scalar::parse(coeffs[n], ring);
    c.push_back(egf ? v / Scalar(Rat::factorial(n)) : v);
  }
  return Series(std::move(c), ring);
}

std::string series_csv(const Series& s, bool egf) {
  std::string out = "n,value\n";
  std::vector<Scalar> v = listed(s, egf);
  for (std::size_t n = 0; n < v.size(); ++n) out += std::to_string(n) + "," + csv_cell(v[n].str()) + "\n";
  return out;
}

std::string series_plain(const Series& s, bool egf) {
  if (!egf) return s.str() + "\n";
  std::string out;
  std::vector<Scalar> v = listed(s, true);
  for (std::size_t n = 0; n < v.size(); ++n) out += std::to_string(n) + ": " + v[n].str() + "\n";
  return out;
}

std::string triangle_json(const Triangle& t, std::string_view f) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows()) {
    ordered_json r = ordered_json::array();
    for (const Scalar& c : row) r.push_back(c.str());
    rows.push_back(r);
  }
  ordered_json j{{"kind", kind_name(t.kind())},
                 {"f", f},
                 {"ring", ring_name(t.ring())},
                 {"max_n", t.max_n()},
                 {"rows", rows}};
  return j.dump(2);
}

Triangle triangle_from_json(std::string_view text) {
  ordered_json j = parse_json(text);
  TriangleKind kind = parse_kind(field<std::string>(j, "kind"));
  Ring ring = parse_ring(field<std::string>(j, "ring"));
  auto max_n = field<std::size_t>(j, "max_n");
  auto rows = field<std::vector<std::vector<std::string>>>(j, "rows");
  if (rows.size() != max_n + 1) throw Error(Errc::InvalidArgument, "rows length does not match max_n");
  Triangle t(kind, max_n, ring, j.contains("f") && j["f"].is_string() ? j["f"].get<std::string>() : "");
  for (std::size_t n = 0; n <= max_n; ++n) {
    if (rows[n].size() != n + 1) throw Error(Errc::InvalidArgument, "row " + std::to_string(n) + " has the wrong length");
    for (std::size_t k = 0; k <= n; ++k) t.set(n, k, Scalar::parse(rows[n][k], ring));
  }
  return t;
}

std::string triangle_csv(const Triangle& t) {
  std::string out = "n,k,value\n";
  for (std::size_t n = 0; n <= t.max_n(); ++n)
    for (std::size_t k = 0; k <= n; ++k)
      out += std::to_string(n) + "," + std::to_string(k) + "," + csv_cell(t.at(n, k).str()) + "\n";
  return out;
}

std::string triangle_plain(const Triangle& t) {
  std::ostringstream out;
  for (std::size_t n = 0; n <= t.max_n(); ++n) {
    out << n << ":";
    for (std::size_t k = 0; k <= n; ++k) out << (k ? "  " : " ") << t.at(n, k).str();
    out << "\n";
  }
  return out.str();
}

std::string bernoulli_json(const BernoulliFamily& b, std::string_view f) {
  ordered_json values = ordered_json::array();
  for (const Scalar& v : b.values) values.push_back(v.str());
  ordered_json j{{"f", f}, {"alpha", b.alpha.str()}, {"values", values}};
  if (b.polys) {
    ordered_json polys = ordered_json::array();
    for (const XPoly& p : *b.polys) {
      ordered_json c = ordered_json::array();
      for (const Scalar& v : p.coeffs) c.push_back(v.str());
      polys.push_back(c);
    }
    j["polys"] = polys;
  }
  return j.dump(2);
}

std::string bernoulli_csv(const BernoulliFamily& b) {
  std::string out = b.polys ? "n,i,value\n" : "n,value\n";
  for (std::size_t n = 0; n < b.values.size(); ++n) {
    if (!b.polys) {
      out += std::to_string(n) + "," + csv_cell(b.values[n].str()) + "\n";
      continue;
    }
    const XPoly& p = (*b.polys)[n];
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
      out += std::to_string(n) + "," + std::to_string(i) + "," + csv_cell(p.coeffs[i].str()) + "\n";
  }
  return out;
}

std::string bernoulli_plain(const BernoulliFamily& b) {
  std::string out;
  for (std::size_t n = 0; n < b.values.size(); ++n) {
    out += std::to_string(n) + ": " + b.values[n].str();
    if (b.polys) out += "    " + (*b.polys)[n].str();
    out += "\n";
  }
  return out;
}

}  // namespace dseries
