#include "truncgal/record.hpp"

#include <stdexcept>

namespace truncgal {

using nlohmann::json;

namespace {

const mpz_class kSafeMax = (mpz_class(1) << 53) - 1;

json point_json(const LatticePoint& p) { return json::array({p.x, p.y}); }
LatticePoint point_from(const json& j) { return {j.at(0).get<i64>(), j.at(1).get<i64>()}; }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

json json_integer(const mpz_class& value) {
  if (abs(value) <= kSafeMax) return json(static_cast<std::int64_t>(value.get_si()));
  return json(value.get_str());
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

json evidence_to_json(const Evidence& ev) {
  return std::visit(
      overloaded{
          [](const IrreducibilityWitness& w) {
            return json{{"kind", "irreducibility"}, {"prime", w.prime}, {"form", std::string(to_string(w.form))}};
          },
          [](const DiscriminantEvidence& d) {
            return json{{"kind", "discriminant"}, {"value", json_integer(d.value)}, {"square", d.square}};
          },
          [](const HajirEvidence& h) {
            return json{{"kind", "hajir"},
                        {"q", h.q},
                        {"p", json_integer(h.p)},
                        {"e", h.e},
                        {"side", h.side == HajirSide::Lower ? "lower" : "upper"},
                        {"edge",
                         {{"start", point_json(h.edge.start)},
                          {"end", point_json(h.edge.end)},
                          {"slope", json::array({h.edge.slope.num, h.edge.slope.den})}}}};
          },
          [](const CycleTypeWitness& c) {
            json pure = json::array();
            for (const auto& pc : c.pure_cycles) pure.push_back(json::array({pc.length, pc.power}));
            return json{{"kind", "cycle_type"},
                        {"role", std::string(to_string(c.role))},
                        {"prime", c.pattern.prime},
                        {"pattern", c.pattern.degrees},
                        {"squarefree", c.pattern.squarefree},
                        {"pure_cycles", pure}};
          },
          [](const Flag& f) { return json{{"kind", "flag"}, {"name", f.name}}; },
      },
      ev);
}

Evidence evidence_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "irreducibility") {
    return IrreducibilityWitness{j.at("prime").get<u64>(), parse_form(j.at("form").get<std::string>())};
  }
  if (kind == "discriminant") {
    return DiscriminantEvidence{integer_from_json(j.at("value")), j.at("square").get<bool>()};
  }
  if (kind == "hajir") {
    HajirEvidence h;
    h.q = j.at("q").get<int>();
    h.p = integer_from_json(j.at("p"));
    h.e = j.at("e").get<unsigned>();
    h.side = j.at("side").get<std::string>() == "lower" ? HajirSide::Lower : HajirSide::Upper;
    const json& edge = j.at("edge");
    h.edge.start = point_from(edge.at("start"));
    h.edge.end = point_from(edge.at("end"));
    h.edge.slope = {edge.at("slope").at(0).get<i64>(), edge.at("slope").at(1).get<i64>()};
    return h;
  }
  if (kind == "cycle_type") {
    CycleTypeWitness c;
    c.role = parse_cycle_role(j.at("role").get<std::string>());
    c.pattern.prime = j.at("prime").get<u64>();
    c.pattern.degrees = j.at("pattern").get<std::vector<int>>();
    c.pattern.squarefree = j.at("squarefree").get<bool>();
    for (const auto& pc : j.at("pure_cycles")) c.pure_cycles.push_back({pc.at(0).get<int>(), pc.at(1).get<int>()});
    return c;
  }
  if (kind == "flag") return Flag{j.at("name").get<std::string>()};
  throw std::invalid_argument("unknown evidence kind: " + kind);
}

json to_json(const VerificationRecord& rec) {
  json witnesses = json::array();
  for (const auto& ev : rec.verdict.evidence) witnesses.push_back(evidence_to_json(ev));
  return json{{"schema_version", rec.schema_version},
              {"r", rec.verdict.r},
              {"t", json_integer(rec.verdict.t)},
              {"n", json_integer(rec.verdict.n)},
              {"verdict", std::string(to_string(rec.verdict.group))},
              {"witnesses", witnesses},
              {"duration_ms", rec.duration_ms}};
}

VerificationRecord record_from_json(const json& j) {
  VerificationRecord rec;
  rec.schema_version = j.at("schema_version").get<int>();
  if (rec.schema_version != kSchemaVersion) throw std::invalid_argument("unsupported schema_version");
  rec.verdict.r = j.at("r").get<int>();
  rec.verdict.t = integer_from_json(j.at("t")).get_si();
  rec.verdict.n = integer_from_json(j.at("n")).get_si();
  rec.verdict.group = parse_verdict(j.at("verdict").get<std::string>());
  for (const auto& w : j.at("witnesses")) rec.verdict.evidence.push_back(evidence_from_json(w));
  rec.duration_ms = j.at("duration_ms").get<i64>();
  return rec;
}

std::string to_line(const VerificationRecord& rec) { return to_json(rec).dump(); }

}  // namespace truncgal
