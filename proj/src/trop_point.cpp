#include "tropgr/trop_point.hpp"

#include <json.hpp>

#include "tropgr/errors.hpp"

namespace tropgr {

TropPoint::TropPoint(int n, const std::map<Pair, ExtRat>& entries) : n_(n) {
  if (n < 2) throw IncompatibleInputs("point needs at least two indices");
  bool any_finite = false;
  for (const Pair& p : all_pairs(n)) {
    auto it = entries.find(p);
    if (it == entries.end())
      throw IncompatibleInputs("missing entry for pair " + p.to_string());
    e_[p] = it->second;
    any_finite = any_finite || it->second.finite();
  }
  if (e_.size() != entries.size())
    throw IncompatibleInputs("entry for a pair outside the index range");
  if (!any_finite) throw IncompatibleInputs("all entries are -inf");
  for (const auto& [p, v] : e_) {
    if (v.finite()) {
      anchor_ = p;
      break;
    }
  }
  Rat shift = e_.at(anchor_).value();
  for (auto& [p, v] : e_) v = v - shift;
}

const ExtRat& TropPoint::at(const Pair& p) const {
  auto it = e_.find(p);
  if (it == e_.end()) throw IncompatibleInputs("pair outside the index range");
  return it->second;
}

ExtRat TropPoint::rel(const Pair& kl, const Pair& ij) const {
  const ExtRat& base = at(ij);
  if (!base.finite()) throw LocalizationViolation("anchor entry is -inf");
  return at(kl) - base.value();
}

std::set<Pair> vanishing_set(const TropPoint& x) {
  std::set<Pair> J;
  for (const auto& [p, v] : x.entries())
    if (!v.finite()) J.insert(p);
  return J;
}

TropPoint parse_metric_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
    throw SyntaxError("expected object with \"n\" and \"entries\"", 0);
  if (!doc["n"].is_number_integer())
    throw SyntaxError("\"n\" must be an integer", 0);
  int n = doc["n"].get<int>();
  if (n < 3 || n > 16) throw SyntaxError("\"n\" out of supported range", 0);
  if (!doc["entries"].is_object())
    throw SyntaxError("\"entries\" must be an object", 0);

  std::map<Pair, ExtRat> entries;
  for (const auto& [key, val] : doc["entries"].items()) {
    std::size_t comma = key.find(',');
    int a = 0, b = 0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument(key);
      a = std::stoi(key.substr(0, comma));
      b = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
      throw SyntaxError("bad pair key '" + key + "'", 0);
    }
    if (a >= b || a < 1 || b > n)
      throw SyntaxError("pair key '" + key + "' must satisfy 1 <= i < j <= n", 0);
    if (!val.is_string())
      throw SyntaxError("entry '" + key + "' must be a string", 0);
    ExtRat v;
    if (!ExtRat::try_parse(val.get<std::string>(), v))
      throw SyntaxError("entry '" + key + "' is not a rational or -inf", 0);
    entries[Pair(a, b)] = v;
  }
  for (const Pair& p : all_pairs(n))
    if (!entries.count(p))
      throw SyntaxError("missing entry for pair " + p.to_string(), 0);
  return TropPoint(n, entries);
}

std::string metric_to_json(const TropPoint& x) {
  nlohmann::ordered_json entries;
  for (const auto& [p, v] : x.entries()) entries[p.to_string()] = v.to_string();
  nlohmann::ordered_json doc;
  doc["n"] = x.n();
  doc["entries"] = entries;
  return doc.dump(2);
}

}  // namespace tropgr
