#include "ldens/output.hpp"

#include <stdexcept>

#include "json.hpp"

namespace ldens {

namespace {

using nlohmann::json;

json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("bad integer string " + j.get<std::string>());
    }
    return v;
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

}  // namespace

std::string to_json(const OutputRecord& record) {
  json j;
  j["form"] = json::array({big_to_json(record.a), big_to_json(record.b), big_to_json(record.c)});
  j["p"] = record.p;
  j["m"] = big_to_json(record.m);
  j["density"] = record.density.numerator().get_str() + "/" + record.density.denominator().get_str();
  j["numerator"] = big_to_json(record.density.numerator());
  j["denominator"] = big_to_json(record.density.denominator());
  j["branch"] = record.branch;
  if (!record.counts.empty()) {
    json counts = json::array();
    for (const auto& [k, r] : record.counts) {
      counts.push_back(json::array({k, big_to_json(r)}));
    }
    j["counts"] = std::move(counts);
  }
  return j.dump();
}

OutputRecord from_json(const std::string& text) {
  const json j = json::parse(text);
  OutputRecord r;
  const auto& form = j.at("form");
  if (!form.is_array() || form.size() != 3) {
    throw std::invalid_argument("form must be a 3-element array");
  }
  r.a = big_from_json(form[0]);
  r.b = big_from_json(form[1]);
  r.c = big_from_json(form[2]);
  r.p = j.at("p").get<std::int64_t>();
  r.m = big_from_json(j.at("m"));
  r.density = Rational::parse(j.at("density").get<std::string>());
  const Rational split(big_from_json(j.at("numerator")), big_from_json(j.at("denominator")));
  if (split != r.density) {
    throw std::invalid_argument("numerator/denominator disagree with density");
  }
  r.branch = j.at("branch").get<std::string>();
  if (j.contains("counts")) {
    for (const auto& entry : j.at("counts")) {
      r.counts.emplace_back(entry.at(0).get<std::int64_t>(), big_from_json(entry.at(1)));
    }
  }
  return r;
}

std::string to_text(const OutputRecord& record) {
  std::string out = "alpha = " + record.density.str() + ", branch = " + record.branch;
  for (const auto& [k, r] : record.counts) {
    out += "\nr_" + std::to_string(record.p) + "^" + std::to_string(k) + " = " + r.get_str();
  }
  return out;
}

}  // namespace ldens
