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

#include "cli.h"

#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "ultragreed/error.h"
#include "ultragreed/geg.h"
#include "ultragreed/json_io.h"
#include "ultragreed/newick.h"
#include "ultragreed/represent.h"
#include "ultragreed/setsys.h"
#include "ultragreed/ultra.h"

namespace ultragreed::cli {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json ReadJson(const std::string& path) {
  try {
    return Json::parse(ReadFile(path));
  } catch (const Json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

// Writes `text` to `path`, or to `out` when no path is given.
void Emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw DomainError("cannot write " + path);
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

// A matrix file, or the "matrix" member of a representation bundle.
VectorFamily ReadFamily(const std::string& path) {
  const Json j = ReadJson(path);
  if (j.is_object() && j.contains("matrix")) return FamilyFromJson(j["matrix"]);
  return FamilyFromJson(j);
}

std::string Describe(const SetSystem& s, Mask m) {
  std::string out = "{";
  auto labels = s.LabelsOf(m);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += (i ? "," : "") + labels[i].ToString();
  }
  return out + "}";
}

// Lists members present in exactly one of the two systems (same ground).
void ReportDifference(const SetSystem& got, const SetSystem& want,
                      std::ostream& err) {
  for (Mask m : got.sets()) {
    if (!want.contains(m)) {
      err << "  only in matrix greedoid: " << Describe(got, m) << "\n";
    }
  }
  for (Mask m : want.sets()) {
    if (!got.contains(m)) {
      err << "  only in Bhargava greedoid: " << Describe(want, m) << "\n";
    }
  }
}

}  // namespace

Field ParseFieldFlag(const std::string& flag,
                     const std::optional<std::string>& modulus) {
  std::uint64_t p = 0;
  std::uint32_t n = 1;
  const auto caret = flag.find('^');
  try {
    std::size_t used = 0;
    p = std::stoull(flag.substr(0, caret), &used);
    if (used != (caret == std::string::npos ? flag.size() : caret)) {
      throw std::invalid_argument(flag);
    }
    if (caret != std::string::npos) {
      const std::string exp = flag.substr(caret + 1);
      const unsigned long v = std::stoul(exp, &used);
      if (used != exp.size() || v > 64) throw std::invalid_argument(flag);
      n = static_cast<std::uint32_t>(v);
    }
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--field", "expected p or p^n, got " + flag);
  }
  if (!modulus && n > 1 && IsPrime(p)) {
    // Without --modulus, fall back to the built-in modulus for p^n.
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (q > kEnumerationLimit) throw DomainError("field order too large");
      q *= p;
    }
    return Field::FromOrder(q);
  }
  if (!modulus) return Field::Make(p, n);
  std::vector<std::uint64_t> coeffs;
  std::stringstream ss(*modulus);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      coeffs.push_back(std::stoull(item));
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--modulus", "bad coefficient " + item);
    }
  }
  return Field::Make(p, n, coeffs);
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Ultra triples, Bhargava greedoids and their representations "
               "as Gaussian elimination greedoids over finite fields.",
               "ultragreed"};
  app.require_subcommand(1);

  std::string in1, in2, output, field_flag;
  std::optional<std::string> modulus;
  bool verify = false;

  auto* validate = app.add_subcommand("validate", "check an ultra triple");
  validate->add_option("triple", in1, "triple JSON")->required();

  auto* greedoid =
      app.add_subcommand("greedoid", "Bhargava greedoid by brute force");
  greedoid->add_option("triple", in1, "triple JSON")->required();

  auto* schedule =
      app.add_subcommand("schedule", "greedy order and rho-sequence");
  schedule->add_option("triple", in1, "triple JSON")->required();

  auto* mcs = app.add_subcommand("mcs", "maximum clique size");
  mcs->add_option("triple", in1, "triple JSON")->required();

  auto* represent = app.add_subcommand(
      "represent", "vector family whose greedoid is the Bhargava greedoid");
  represent->add_option("triple", in1, "triple JSON")->required();
  represent->add_option("--field", field_flag, "p or p^n")->required();
  represent->add_option("--modulus", modulus,
                        "irreducible modulus c0,c1,...,cn for p^n");
  represent->add_flag("--verify", verify,
                      "recheck the embedding and the greedoid (|E| <= 20)");
  represent->add_option("-o,--output", output, "write the bundle here");

  auto* geg = app.add_subcommand("geg", "Gaussian elimination greedoid");
  geg->add_option("matrix", in1, "matrix or representation JSON")->required();

  auto* check = app.add_subcommand(
      "check", "exit 0 iff the matrix greedoid equals the Bhargava greedoid");
  check->add_option("matrix", in1, "matrix or representation JSON")
      ->required();
  check->add_option("triple", in2, "triple JSON")->required();

  auto* from_newick =
      app.add_subcommand("from-newick", "ultra triple of a clock tree");
  from_newick->add_option("tree", in1, "Newick file")->required();
  from_newick->add_option("-o,--output", output, "write the triple here");

  auto* converse = app.add_subcommand(
      "converse-search", "exhaustive search for a representing family");
  converse->add_option("setsys", in1, "set system JSON")->required();
  converse->add_option("--field", field_flag, "p or p^n")->required();
  converse->add_option("--modulus", modulus,
                       "irreducible modulus c0,c1,...,cn for p^n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      const RawTriple raw = RawTripleFromJson(ReadJson(in1));
      const TripleReport report = CheckTriple(raw);
      if (!report.ok()) {
        err << "error: " << report.message << "\n";
        return kExitDomain;
      }
      out << "valid: " << raw.labels.size() << " elements\n";
    } else if (greedoid->parsed()) {
      out << Dump(SetSystemToJson(BhargavaGreedoid(TripleFromJson(ReadJson(in1)))));
    } else if (schedule->parsed()) {
      const UltraTriple t = TripleFromJson(ReadJson(in1));
      out << Dump(ScheduleToJson(t, ComputeGreedySchedule(t)));
    } else if (mcs->parsed()) {
      out << Mcs(TripleFromJson(ReadJson(in1))) << "\n";
    } else if (represent->parsed()) {
      const Field field = ParseFieldFlag(field_flag, modulus);
      const UltraTriple t = TripleFromJson(ReadJson(in1));
      const Representation r = BuildRepresentation(t, field);
      if (verify) {
        if (!ValadicVerify(t, r.embedding)) {
          err << "error: embedding does not reproduce the triple\n";
          return kExitDomain;
        }
        const SetSystem got = GegEnumerate(r.family);
        const SetSystem want = BhargavaGreedoid(t);
        if (!(got == want)) {
          err << "error: representation greedoid differs\n";
          ReportDifference(got, want, err);
          return kExitDomain;
        }
      }
      Emit(Dump(RepresentationToJson(r)), output, out);
    } else if (geg->parsed()) {
      out << Dump(SetSystemToJson(GegEnumerate(ReadFamily(in1))));
    } else if (check->parsed()) {
      const VectorFamily fam = ReadFamily(in1);
      const UltraTriple t = TripleFromJson(ReadJson(in2));
      if (fam.labels() != t.labels()) {
        err << "error: matrix columns differ from the triple's labels\n";
        return kExitDomain;
      }
      const SetSystem got = GegEnumerate(fam);
      const SetSystem want = BhargavaGreedoid(t);
      if (!(got == want)) {
        err << "greedoids differ\n";
        ReportDifference(got, want, err);
        return kExitDomain;
      }
      out << "greedoids equal: " << got.size() << " sets\n";
    } else if (from_newick->parsed()) {
      const NewickTree tree = ParseNewick(ReadFile(in1));
      Emit(Dump(TripleToJson(TripleFromTree(tree))), output, out);
    } else if (converse->parsed()) {
      const Field field = ParseFieldFlag(field_flag, modulus);
      const SetSystem target = SetSystemFromJson(ReadJson(in1));
      const auto found = ConverseSearch(target, field);
      Json j{{"found", found.has_value()}};
      if (found) j["matrix"] = FamilyToJson(*found);
      out << Dump(j);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace ultragreed::cli
