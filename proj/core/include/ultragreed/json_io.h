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

#ifndef ULTRAGREED_JSON_IO_H_
#define ULTRAGREED_JSON_IO_H_

#include <string>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "ultragreed/field.h"
#include "ultragreed/geg.h"
#include "ultragreed/group_algebra.h"
#include "ultragreed/represent.h"
#include "ultragreed/setsys.h"
#include "ultragreed/ultra.h"

// JSON forms of the library's values. Objects use std::map-backed
// nlohmann::json, so keys are always emitted sorted. Every *FromJson throws
// DomainError on malformed input.
//
// Labels are JSON integers or strings. Where a label is an object key
// (triple weights, embeddings) it is written as Label::ToString(), so labels
// of one triple must have distinct string forms.

namespace ultragreed {

using Json = nlohmann::json;

Json LabelToJson(const Label& l);
Label LabelFromJson(const Json& j);

// {"p": 3, "n": 1, "modulus": []}
Json FieldSpecToJson(const FieldSpec& s);
FieldSpec FieldSpecFromJson(const Json& j);

// Integer code for prime fields, coefficient array (constant first) for
// extensions. Reading also accepts an integer code for an extension field.
Json ElementToJson(const FieldElement& e);
FieldElement ElementFromJson(const Field& field, const Json& j);

// {"terms": [[exponent, coeff], ...]}, exponents ascending.
Json GroupAlgebraToJson(const GroupAlgebraElement& x);
GroupAlgebraElement GroupAlgebraFromJson(const Field& field, const Json& j);

// {"labels": [...], "weights": {label: int}, "distances": [[int]]}
Json TripleToJson(const UltraTriple& t);
RawTriple RawTripleFromJson(const Json& j);
UltraTriple TripleFromJson(const Json& j);

// {"ground": [...], "sets": [[...], ...]} in canonical order.
Json SetSystemToJson(const SetSystem& s);
SetSystem SetSystemFromJson(const Json& j);

// {"field": FieldSpec, "rows": m, "columns": [...], "entries": [[...]]}
Json FamilyToJson(const VectorFamily& f);
VectorFamily FamilyFromJson(const Json& j);
// Header row of labels, then one row per matrix row of integer codes.
std::string FamilyToCsv(const VectorFamily& f);

// {"order": [labels], "rho": [ints]}
Json ScheduleToJson(const UltraTriple& t, const GreedySchedule& s);
GreedySchedule ScheduleFromJson(const UltraTriple& t, const Json& j);

// {"embedding": {label: terms}, "position": {"gamma": g, "u": terms}}
Json EmbeddingToJson(const ValadicEmbedding& e);
ValadicEmbedding EmbeddingFromJson(const UltraTriple& t, const Field& field,
                                   const Json& j);

// The re-verifiable parts of a Representation.
struct RepresentationBundle {
  UltraTriple triple;
  ValadicEmbedding embedding;
  GreedySchedule schedule;
  VectorFamily matrix;
};
// {"triple", "embedding", "position", "schedule", "matrix"}
Json RepresentationToJson(const Representation& r);
Json BundleToJson(const RepresentationBundle& b);
RepresentationBundle BundleFromJson(const Json& j);

}  // namespace ultragreed

#endif  // ULTRAGREED_JSON_IO_H_
