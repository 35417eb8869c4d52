#include "stsrank/io.hpp"

#include <fstream>
#include <map>

namespace stsrank::io {

namespace {

void expect(bool ok, const char* msg) {
  if (!ok) throw ValidationError(msg);
}

}  // namespace

json to_json(const design::SteinerTripleSystem& sts) {
  json blocks = json::array();
  for (const auto& b : sts.blocks()) blocks.push_back({b[0], b[1], b[2]});
  return json{{"v", sts.v()}, {"blocks", blocks}};
}

design::SteinerTripleSystem sts_from_json(const json& j) {
  expect(j.is_object() && j.contains("v") && j.contains("blocks"),
         "STS JSON needs \"v\" and \"blocks\"");
  expect(j.at("v").is_number_integer(), "\"v\" must be an integer");
  std::vector<design::Triple> blocks;
  for (const auto& b : j.at("blocks")) {
    expect(b.is_array() && b.size() == 3, "each block must be a 3-element array");
    blocks.push_back({b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>()});
  }
  return design::SteinerTripleSystem::validate(j.at("v").get<int>(), std::move(blocks));
}

json to_json(const design::LatinSquare& ls) {
  return json{{"n", ls.n()}, {"rows", ls.table()}};
}

design::LatinSquare latin_from_json(const json& j) {
  expect(j.is_object() && j.contains("n") && j.contains("rows"),
         "latin square JSON needs \"n\" and \"rows\"");
  auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
  expect(j.at("n").get<int>() == static_cast<int>(rows.size()),
         "\"n\" does not match the number of rows");
  return design::LatinSquare::validate(std::move(rows));
}

json matrix_to_json(const gf::GfMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.nrows(); ++r) rows.push_back(m.row(r));
  return json{{"p", m.p()}, {"rows", rows}};
}

json to_json(const gf::Subspace& s) { return matrix_to_json(s.basis()); }

gf::Subspace subspace_from_json(const json& j) {
  expect(j.is_object() && j.contains("p") && j.contains("rows"),
         "subspace JSON needs \"p\" and \"rows\"");
  const int p = j.at("p").get<int>();
  auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
  expect(!rows.empty(), "subspace JSON needs at least one generator row");
  return gf::Subspace::from_span(gf::GfMatrix::from_rows(p, rows));
}

namespace {

json triples_json(const structure::GroupPartition& gp,
                  const std::vector<design::LatinSquare>& latin) {
  json arr = json::array();
  for (std::size_t t = 0; t < gp.rule_triples.size(); ++t) {
    const auto [a, b, c] = gp.rule_triples[t];
    arr.push_back({{"triple", {a + 1, b + 1, c + 1}}, {"square", to_json(latin[t])}});
  }
  return arr;
}

std::vector<design::LatinSquare> latin_from_triples(const json& arr,
                                                    const structure::GroupPartition& gp) {
  expect(arr.is_array(), "\"latin\" must be an array");
  std::map<std::array<int, 3>, design::LatinSquare> by_triple;
  for (const auto& item : arr) {
    expect(item.is_object() && item.contains("triple") && item.contains("square"),
           "each latin entry needs \"triple\" and \"square\"");
    const auto& t = item.at("triple");
    expect(t.is_array() && t.size() == 3, "\"triple\" must have three group indices");
    std::array<int, 3> key{t.at(0).get<int>() - 1, t.at(1).get<int>() - 1,
                           t.at(2).get<int>() - 1};
    by_triple.emplace(key, latin_from_json(item.at("square")));
  }
  std::vector<design::LatinSquare> out;
  for (const auto& t : gp.rule_triples) {
    auto it = by_triple.find(t);
    if (it == by_triple.end())
      throw ValidationError("missing latin square for rule triple {" +
                            std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) +
                            "," + std::to_string(t[2] + 1) + "}");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

json ingredients_to_json(const structure::GroupPartition& gp,
                         const structure::Ingredients3& ing) {
  json sts_parts = json::array();
  for (const auto& s : ing.sts_parts) sts_parts.push_back(to_json(s));
  return json{{"kind", "gf3"},
              {"j", gp.j},
              {"sts_parts", sts_parts},
              {"latin", triples_json(gp, ing.latin)},
              {"symmetric", json::array()}};
}

json ingredients_to_json(const structure::GroupPartition& gp,
                         const structure::Ingredients2& ing) {
  json sym = json::array();
  for (const auto& g : ing.symmetric) sym.push_back(to_json(g));
  return json{{"kind", "gf2"},
              {"j", gp.j},
              {"sts_parts", json::array({to_json(ing.zero_sts)})},
              {"latin", triples_json(gp, ing.latin)},
              {"symmetric", sym}};
}

structure::Ingredients3 ingredients3_from_json(const json& j,
                                               const structure::GroupPartition& gp) {
  expect(j.is_object() && j.value("kind", "") == "gf3", "expected ingredients of kind gf3");
  structure::Ingredients3 ing;
  for (const auto& s : j.at("sts_parts")) ing.sts_parts.push_back(sts_from_json(s));
  ing.latin = latin_from_triples(j.at("latin"), gp);
  return ing;
}

structure::Ingredients2 ingredients2_from_json(const json& j,
                                               const structure::GroupPartition& gp) {
  expect(j.is_object() && j.value("kind", "") == "gf2", "expected ingredients of kind gf2");
  const auto& parts = j.at("sts_parts");
  expect(parts.is_array() && parts.size() == 1,
         "gf2 ingredients carry exactly one zero-group STS");
  structure::Ingredients2 ing{sts_from_json(parts.at(0)), {}, {}};
  for (const auto& g : j.at("symmetric")) ing.symmetric.push_back(latin_from_json(g));
  ing.latin = latin_from_triples(j.at("latin"), gp);
  return ing;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace stsrank::io
