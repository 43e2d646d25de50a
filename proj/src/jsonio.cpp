#include "wittkit/jsonio.hpp"

#include <utility>

#include "json.hpp"
#include "wittkit/errors.hpp"

namespace wittkit {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

// exact literal: a string "p/q"/"p" or a bare integer; everything else is
// off-schema, including floats and zero denominators
Rat exact_value(const json& v) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const IntegralityError& e) {
      throw ParseError(e.what());
    }
  }
  if (v.is_number_integer()) return Rat(v.get<long>());
  throw ParseError("expected an exact literal, got " + v.dump());
}

json emit_value(const Rat& v) {
  if (is_integer(v) && v.get_num().fits_slong_p())
    return json(v.get_num().get_si());
  return json(format_rational(v));
}

}  // namespace

QSeries read_qseries(const std::string& text) {
  json doc = parse_text(text);
  if (!doc.is_object() || !doc.contains("f") || !doc["f"].is_array())
    throw ParseError("expected an object with an \"f\" array");
  std::vector<Rat> tail;
  tail.reserve(doc["f"].size());
  for (const json& v : doc["f"]) tail.push_back(exact_value(v));
  return QSeries(std::move(tail));
}

std::string write_qseries(const QSeries& f) {
  json arr = json::array();
  for (const Rat& v : f.tail()) arr.push_back(format_rational(v));
  json doc;
  doc["f"] = std::move(arr);
  return doc.dump(2) + "\n";
}

GradedSeries read_graded_series(const std::string& text, const RingPtr& ring,
                                unsigned rank, unsigned cap) {
  json doc = parse_text(text);
  if (!doc.is_array()) throw ParseError("expected an array of terms");
  GradedSeries out(ring, rank, cap);
  for (const json& item : doc) {
    if (!item.is_object() || !item.contains("alpha") ||
        !item.contains("coeff") || !item["alpha"].is_array())
      throw ParseError("each term needs \"alpha\" and \"coeff\"");
    if (item["alpha"].size() != rank)
      throw ParseError("term has " + std::to_string(item["alpha"].size()) +
                       " degrees, expected " + std::to_string(rank));
    GradedIndex idx;
    idx.alpha.reserve(rank);
    for (const json& a : item["alpha"]) {
      if (!a.is_number_integer() || a.get<long>() < 0)
        throw ParseError("degrees must be nonnegative integers");
      idx.alpha.push_back(static_cast<unsigned>(a.get<long>()));
    }
    if (item.contains("parity")) {
      const json& p = item["parity"];
      if (!p.is_number_integer() || (p.get<long>() != 0 && p.get<long>() != 1))
        throw ParseError("parity must be 0 or 1");
      idx.parity = static_cast<unsigned>(p.get<long>());
    }
    Elem value = Elem::rational(ring, exact_value(item["coeff"]));
    if (idx.height() <= cap) out.set(idx, out.coeff(idx) + value);
  }
  return out;
}

std::string write_graded_series(const GradedSeries& s) {
  json arr = json::array();
  for (const auto& [idx, value] : s.terms()) {
    Rat v;
    if (s.ring()->uses_poly()) {
      if (!value.poly().is_constant())
        throw ConfigError("symbolic coefficient at " + idx.str() +
                          " has no JSON form");
      v = value.poly().constant_term();
    } else {
      v = value.rat();
    }
    json term;
    term["alpha"] = idx.alpha;
    term["parity"] = idx.parity;
    term["coeff"] = emit_value(v);
    arr.push_back(std::move(term));
  }
  return arr.dump(2) + "\n";
}

}  // namespace wittkit
