#include "eulerian/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "eulerian/errors.hpp"

namespace eulerian {

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw InvalidArgument("malformed rational '" + text + "'");
  }
}

Json to_json(const RankedPoset& p) {
  Json covers = Json::array();
  for (const auto& list : p.all_covers()) {
    Json level = Json::array();
    for (const Cover& c : list) level.push_back({c.lower, c.upper});
    covers.push_back(std::move(level));
  }
  return Json{{"rank", p.rank()}, {"level_sizes", p.level_sizes()}, {"covers", std::move(covers)}};
}

RankedPoset poset_from_json(const Json& doc) {
  try {
    const int rank = doc.at("rank").get<int>();
    auto sizes = doc.at("level_sizes").get<std::vector<std::size_t>>();
    std::vector<CoverList> covers;
    for (const auto& level : doc.at("covers")) {
      CoverList list;
      for (const auto& pair : level) {
        if (!pair.is_array() || pair.size() != 2) throw InvalidArgument("cover entries must be [i, j] pairs");
        list.push_back(Cover{pair[0].get<std::uint32_t>(), pair[1].get<std::uint32_t>()});
      }
      covers.push_back(std::move(list));
    }
    return RankedPoset(rank, std::move(sizes), std::move(covers));
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed poset document: ") + e.what());
  }
}

RankedPoset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open poset file '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("poset file '" + path + "' is not JSON: " + e.what());
  }
  return poset_from_json(doc);
}

void save_poset(const RankedPoset& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << dump(to_json(p)) << '\n';
}

namespace {

Json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(v.convert_to<std::int64_t>());
  }
  return Json(v.str());
}

}  // namespace

Json to_json(const CdPolynomial& phi) {
  Json terms = Json::object();
  for (const auto& [w, k] : phi.terms()) terms[w.letters()] = integer_json(k);
  return Json{{"n", phi.degree()}, {"terms", std::move(terms)}};
}

CdPolynomial cd_polynomial_from_json(const Json& doc) {
  try {
    CdPolynomial phi(doc.at("n").get<int>());
    for (const auto& [word, value] : doc.at("terms").items()) {
      const BigInt k = value.is_string() ? BigInt(value.get<std::string>()) : BigInt(value.get<std::int64_t>());
      phi.add_term(CdWord(word), k);
    }
    return phi;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed cd-polynomial document: ") + e.what());
  }
}

Json to_json(const FlagTable& f) {
  Json out = Json::object();
  for (std::size_t m = 0; m < f.entries.size(); ++m) out[RankSubset(f.n, m).to_string()] = f.entries[m].str();
  return out;
}

Json to_json(const LVector& l) {
  Json entries = Json::object();
  for (std::size_t m = 0; m < l.entries.size(); ++m) {
    if (l.entries[m] != 0) entries[RankSubset(l.n, m).to_string()] = to_string(l.entries[m]);
  }
  return Json{{"n", l.n}, {"entries", std::move(entries)}};
}

Json to_json(const LimitLVector& l) {
  Json entries = Json::object();
  for (const auto& [mask, v] : l.entries) entries[RankSubset(l.n, mask).to_string()] = v;
  return Json{{"n", l.n}, {"entries", std::move(entries)}};
}

Json to_json(const RankSubset& s) { return Json(s.members()); }

Json certificate_json(const CdWord& w, const WordClass& wc) {
  if (!wc.certificate) throw InvalidArgument("word " + w.letters() + " has no certificate");
  const auto& c = *wc.certificate;
  return Json{{"word", w.letters()}, {"class", to_string(wc.tag)}, {"S", to_json(c.s)}, {"T", to_json(c.t)}, {"V", to_json(c.v)}};
}

Json classification_json(const CdWord& w, const WordClass& wc) {
  if (wc.certificate) return certificate_json(w, wc);
  Json out{{"word", w.letters()}, {"class", to_string(wc.tag)}};
  if (wc.witness) {
    out["witness"] = wc.witness->subword.letters();
    out["witness_offset"] = wc.witness->offset;
  }
  return out;
}

std::string dump(const Json& doc) { return doc.dump(2); }

}  // namespace eulerian
