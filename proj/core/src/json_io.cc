// Copyright 2026 The ultragreed Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ultragreed/json_io.h"

#include <map>
#include <set>
#include <sstream>

#include "ultragreed/error.h"

namespace ultragreed {
namespace {

// Runs `f`, turning nlohmann's type and range errors into DomainError.
template <typename F>
auto Guard(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& Member(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("malformed ") + what + ": missing \"" +
                      key + "\"");
  }
  return j.at(key);
}

std::map<std::string, Label> KeyIndex(const std::vector<Label>& labels) {
  std::map<std::string, Label> out;
  for (const auto& l : labels) {
    if (!out.emplace(l.ToString(), l).second) {
      throw DomainError("labels with the same text form: " + l.ToString());
    }
  }
  return out;
}

}  // namespace

Json LabelToJson(const Label& l) {
  return l.is_int() ? Json(l.as_int()) : Json(l.as_string());
}

Label LabelFromJson(const Json& j) {
  if (j.is_number_integer()) return Label(j.get<std::int64_t>());
  if (j.is_string()) return Label(j.get<std::string>());
  throw DomainError("label must be an integer or a string, got " + j.dump());
}

Json FieldSpecToJson(const FieldSpec& s) {
  return Json{{"p", s.p}, {"n", s.n}, {"modulus", s.modulus}};
}

FieldSpec FieldSpecFromJson(const Json& j) {
  return Guard("field", [&] {
    FieldSpec s;
    s.p = Member(j, "p", "field").get<std::uint64_t>();
    s.n = j.contains("n") ? j.at("n").get<std::uint32_t>() : 1;
    if (j.contains("modulus")) {
      s.modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
    }
    return s;
  });
}

Json ElementToJson(const FieldElement& e) {
  if (e.field().degree() == 1) return Json(e.code());
  return Json(e.coefficients());
}

FieldElement ElementFromJson(const Field& field, const Json& j) {
  return Guard("field element", [&] {
    if (j.is_number_unsigned() ||
        (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
      const auto c = j.get<std::uint64_t>();
      if (c >= field.order()) {
        throw DomainError("element code " + std::to_string(c) + " outside " +
                          field.ToString());
      }
      return field.FromCode(c);
    }
    if (j.is_array()) {
      const auto coeffs = j.get<std::vector<std::uint64_t>>();
      if (coeffs.size() > field.degree()) {
        throw DomainError("too many coefficients for " + field.ToString());
      }
      for (auto c : coeffs) {
        if (c >= field.characteristic()) {
          throw DomainError("coefficient " + std::to_string(c) +
                            " outside GF(" +
                            std::to_string(field.characteristic()) + ")");
        }
      }
      return field.FromCoefficients(coeffs);
    }
    throw DomainError("field element must be a code or coefficient array, got " +
                      j.dump());
  });
}

Json GroupAlgebraToJson(const GroupAlgebraElement& x) {
  Json terms = Json::array();
  for (const auto& t : x.terms()) {
    terms.push_back(
        Json::array({t.exponent, ElementToJson(x.field().FromCode(t.code))}));
  }
  return Json{{"terms", terms}};
}

GroupAlgebraElement GroupAlgebraFromJson(const Field& field,
                                         const Json& j) {
  return Guard("group algebra element", [&] {
    std::vector<GroupAlgebraElement::Term> terms;
    for (const auto& t : Member(j, "terms", "group algebra element")) {
      if (!t.is_array() || t.size() != 2) {
        throw DomainError("term must be [exponent, coefficient]");
      }
      terms.push_back({t[0].get<std::int64_t>(),
                       ElementFromJson(field, t[1]).code()});
    }
    return GroupAlgebraElement::FromTerms(field, std::move(terms));
  });
}

Json TripleToJson(const UltraTriple& t) {
  Json labels = Json::array(), weights = Json::object(),
       distances = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    labels.push_back(LabelToJson(t.label(i)));
    weights[t.label(i).ToString()] = t.weight(i);
    Json row = Json::array();
    for (std::size_t k = 0; k < t.size(); ++k) {
      row.push_back(i == k ? 0 : t.distance(i, k));
    }
    distances.push_back(row);
  }
  return Json{{"labels", labels}, {"weights", weights},
              {"distances", distances}};
}

RawTriple RawTripleFromJson(const Json& j) {
  return Guard("triple", [&] {
    RawTriple raw;
    for (const auto& l : Member(j, "labels", "triple")) {
      raw.labels.push_back(LabelFromJson(l));
    }
    const auto keys = KeyIndex(raw.labels);
    const Json& w = Member(j, "weights", "triple");
    if (!w.is_object()) throw DomainError("triple weights must be an object");
    for (const auto& [key, value] : w.items()) {
      auto it = keys.find(key);
      if (it == keys.end()) {
        throw DomainError("weight given for unknown label " + key);
      }
      raw.weights[it->second] = value.get<std::int64_t>();
    }
    raw.distances =
        Member(j, "distances", "triple")
            .get<std::vector<std::vector<std::int64_t>>>();
    return raw;
  });
}

UltraTriple TripleFromJson(const Json& j) {
  return UltraTriple::Validate(RawTripleFromJson(j));
}

Json SetSystemToJson(const SetSystem& s) {
  Json ground = Json::array(), sets = Json::array();
  for (const auto& l : s.ground()) ground.push_back(LabelToJson(l));
  for (const auto& set : s.LabelSets()) {
    Json row = Json::array();
    for (const auto& l : set) row.push_back(LabelToJson(l));
    sets.push_back(row);
  }
  return Json{{"ground", ground}, {"sets", sets}};
}

SetSystem SetSystemFromJson(const Json& j) {
  return Guard("set system", [&] {
    std::vector<Label> ground;
    for (const auto& l : Member(j, "ground", "set system")) {
      ground.push_back(LabelFromJson(l));
    }
    std::vector<std::vector<Label>> sets;
    for (const auto& row : Member(j, "sets", "set system")) {
      std::vector<Label> set;
      for (const auto& l : row) set.push_back(LabelFromJson(l));
      if (std::set<Label>(set.begin(), set.end()).size() != set.size()) {
        throw DomainError("set system member repeats a label");
      }
      sets.push_back(std::move(set));
    }
    return SetSystem::FromLabelSets(std::move(ground), sets);
  });
}

Json FamilyToJson(const VectorFamily& f) {
  Json columns = Json::array(), entries = Json::array();
  for (const auto& l : f.labels()) columns.push_back(LabelToJson(l));
  for (std::size_t i = 0; i < f.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < f.cols(); ++k) {
      row.push_back(ElementToJson(f.entry(i, k)));
    }
    entries.push_back(row);
  }
  return Json{{"field", FieldSpecToJson(f.field().spec())},
              {"rows", f.rows()},
              {"columns", columns},
              {"entries", entries}};
}

VectorFamily FamilyFromJson(const Json& j) {
  return Guard("matrix", [&] {
    const Field field =
        Field::Make(FieldSpecFromJson(Member(j, "field", "matrix")));
    const auto m = Member(j, "rows", "matrix").get<std::size_t>();
    std::vector<Label> labels;
    for (const auto& l : Member(j, "columns", "matrix")) {
      labels.push_back(LabelFromJson(l));
    }
    const Json& entries = Member(j, "entries", "matrix");
    if (!entries.is_array() || entries.size() != m) {
      throw DomainError("matrix must have \"rows\" rows of entries");
    }
    std::vector<std::uint64_t> codes;
    for (const auto& row : entries) {
      if (!row.is_array() || row.size() != labels.size()) {
        throw DomainError("matrix row length differs from column count");
      }
      for (const auto& e : row) codes.push_back(ElementFromJson(field, e).code());
    }
    return VectorFamily(field, m, std::move(labels), std::move(codes));
  });
}

std::string FamilyToCsv(const VectorFamily& f) {
  std::ostringstream os;
  for (std::size_t k = 0; k < f.cols(); ++k) {
    os << (k ? "," : "") << f.labels()[k].ToString();
  }
  os << "\n";
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < f.cols(); ++k) {
      os << (k ? "," : "") << f.code(i, k);
    }
    os << "\n";
  }
  return os.str();
}

Json ScheduleToJson(const UltraTriple& t, const GreedySchedule& s) {
  Json order = Json::array();
  for (auto i : s.order) order.push_back(LabelToJson(t.label(i)));
  return Json{{"order", order}, {"rho", s.rho}};
}

GreedySchedule ScheduleFromJson(const UltraTriple& t, const Json& j) {
  return Guard("schedule", [&] {
    GreedySchedule s;
    for (const auto& l : Member(j, "order", "schedule")) {
      s.order.push_back(t.IndexOf(LabelFromJson(l)));
    }
    s.rho = Member(j, "rho", "schedule").get<std::vector<std::int64_t>>();
    if (s.order.size() != t.size() || s.rho.size() != t.size()) {
      throw DomainError("schedule must list every element once");
    }
    return s;
  });
}

Json EmbeddingToJson(const ValadicEmbedding& e) {
  Json images = Json::object();
  for (std::size_t i = 0; i < e.labels.size(); ++i) {
    images[e.labels[i].ToString()] = GroupAlgebraToJson(e.images[i]);
  }
  return Json{{"embedding", images},
              {"position",
               Json{{"gamma", e.gamma}, {"u", GroupAlgebraToJson(e.u)}}}};
}

ValadicEmbedding EmbeddingFromJson(const UltraTriple& t,
                                   const Field& field,
                                   const Json& j) {
  return Guard("embedding", [&] {
    const Json& images = Member(j, "embedding", "embedding");
    const Json& pos = Member(j, "position", "embedding");
    if (!images.is_object() || images.size() != t.size()) {
      throw DomainError("embedding must map every label");
    }
    std::vector<GroupAlgebraElement> out;
    for (const auto& l : t.labels()) {
      const std::string key = l.ToString();
      if (!images.contains(key)) {
        throw DomainError("embedding lacks label " + key);
      }
      out.push_back(GroupAlgebraFromJson(field, images.at(key)));
    }
    return ValadicEmbedding{
        field, t.labels(), std::move(out),
        Member(pos, "gamma", "position").get<std::int64_t>(),
        GroupAlgebraFromJson(field, Member(pos, "u", "position"))};
  });
}

Json RepresentationToJson(const Representation& r) {
  return BundleToJson(
      RepresentationBundle{r.triple, r.embedding, r.schedule, r.family});
}

Json BundleToJson(const RepresentationBundle& b) {
  Json j = EmbeddingToJson(b.embedding);
  j["triple"] = TripleToJson(b.triple);
  j["schedule"] = ScheduleToJson(b.triple, b.schedule);
  j["matrix"] = FamilyToJson(b.matrix);
  return j;
}

RepresentationBundle BundleFromJson(const Json& j) {
  UltraTriple triple = TripleFromJson(Member(j, "triple", "representation"));
  VectorFamily matrix = FamilyFromJson(Member(j, "matrix", "representation"));
  ValadicEmbedding emb = EmbeddingFromJson(triple, matrix.field(), j);
  GreedySchedule schedule =
      ScheduleFromJson(triple, Member(j, "schedule", "representation"));
  return RepresentationBundle{std::move(triple), std::move(emb),
                              std::move(schedule), std::move(matrix)};
}

}  // namespace ultragreed
