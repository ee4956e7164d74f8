#include "kdg/job.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "kdg/parser.hpp"

namespace kdg {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

void only_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!ok.count(it.key())) fail(path + "/" + it.key(), "unknown field");
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<std::string> strings(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::vector<std::vector<std::string>> string_lists(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of arrays");
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(strings(j[i], path + "/" + std::to_string(i)));
  return out;
}

DGSpec parse_dg(const Json& j, const std::string& path) {
  DGSpec d;
  if (j.is_string()) {
    if (j.get<std::string>() != "ring") fail(path, "expected \"ring\" or a construction object");
    return d;
  }
  if (!j.is_object() || j.size() != 1) fail(path, "expected exactly one of ring, trivial_extension, koszul");
  const std::string key = j.begin().key();
  const Json& body = j.begin().value();
  const std::string p = path + "/" + key;
  if (key == "ring") return d;
  if (key == "trivial_extension") {
    if (!body.is_object()) fail(p, "expected an object");
    only_keys(body, p, {"module", "shift"});
    d.kind = DGSpec::Kind::trivial_extension;
    if (!body.contains("module")) fail(p, "missing module");
    if (!body.contains("shift")) fail(p, "missing shift");
    d.shift = as_int(body["shift"], p + "/shift");
    const Json& m = body["module"];
    const std::string mp = p + "/module";
    if (!m.is_object()) fail(mp, "expected an object");
    only_keys(m, mp, {"cyclic", "twists", "relations"});
    if (m.contains("cyclic")) {
      d.module.cyclic = strings(m["cyclic"], mp + "/cyclic");
    } else {
      d.module.is_cyclic = false;
      if (!m.contains("twists")) fail(mp, "needs cyclic or twists with relations");
      for (std::size_t i = 0; i < m["twists"].size(); ++i)
        d.module.twists.push_back(as_int(m["twists"][i], mp + "/twists/" + std::to_string(i)));
      if (m.contains("relations")) d.module.relations = string_lists(m["relations"], mp + "/relations");
      for (std::size_t c = 0; c < d.module.relations.size(); ++c)
        if (d.module.relations[c].size() != d.module.twists.size())
          fail(mp + "/relations/" + std::to_string(c), "relation length differs from the number of twists");
    }
    return d;
  }
  if (key == "koszul") {
    if (!body.is_object()) fail(p, "expected an object");
    only_keys(body, p, {"over", "elements"});
    d.kind = DGSpec::Kind::koszul;
    if (!body.contains("elements")) fail(p, "missing elements");
    d.elements = strings(body["elements"], p + "/elements");
    if (body.contains("over")) d.over = std::make_shared<DGSpec>(parse_dg(body["over"], p + "/over"));
    return d;
  }
  fail(p, "unknown construction");
}

DGRingPtr build(const DGSpec& d, const QRingPtr& q, const std::string& path) {
  switch (d.kind) {
    case DGSpec::Kind::ring:
      return dg_from_ring(q);
    case DGSpec::Kind::trivial_extension: {
      const std::string mp = path + "/trivial_extension/module";
      FPModule m;
      if (d.module.is_cyclic) {
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < d.module.cyclic.size(); ++i)
          gens.push_back(parse_at(d.module.cyclic[i], q->ring(), mp + "/cyclic/" + std::to_string(i)));
        m = FPModule::cyclic(q, gens);
      } else {
        PolyMatrix rel(q->ring(), d.module.twists.size(), d.module.relations.size());
        for (std::size_t c = 0; c < d.module.relations.size(); ++c)
          for (std::size_t r = 0; r < d.module.twists.size(); ++r)
            rel(r, c) = parse_at(d.module.relations[c][r], q->ring(),
                                 mp + "/relations/" + std::to_string(c) + "/" + std::to_string(r));
        m = FPModule::cokernel(q, d.module.twists, rel);
      }
      return trivial_extension(q, m, d.shift);
    }
    case DGSpec::Kind::koszul: {
      const std::string p = path + "/koszul";
      DGRingPtr over = d.over ? build(*d.over, q, p + "/over") : dg_from_ring(q);
      std::vector<Polynomial> el;
      for (std::size_t i = 0; i < d.elements.size(); ++i)
        el.push_back(parse_at(d.elements[i], q->ring(), p + "/elements/" + std::to_string(i)));
      return koszul(over, el);
    }
  }
  fail(path, "unknown construction");
}

std::vector<std::vector<Polynomial>> parse_lists(const std::vector<std::vector<std::string>>& lists,
                                                 const RingPtr& ring, const std::string& path) {
  std::vector<std::vector<Polynomial>> out;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    std::vector<Polynomial> seq;
    for (std::size_t k = 0; k < lists[i].size(); ++k)
      seq.push_back(parse_at(lists[i][k], ring, path + "/" + std::to_string(i) + "/" + std::to_string(k)));
    out.push_back(std::move(seq));
  }
  return out;
}

MonomialOrder order_named(const std::string& name, const std::string& path) {
  if (name == "grevlex") return MonomialOrder{OrderKind::grevlex};
  if (name == "lex") return MonomialOrder{OrderKind::lex};
  fail(path, "unknown monomial order '" + name + "'");
}

}  // namespace

Polynomial parse_at(const std::string& text, const RingPtr& ring, const std::string& path) {
  try {
    return parse_poly(text, ring);
  } catch (const ParseError& e) {
    fail(path, "'" + text + "' at offset " + std::to_string(e.position()) + ": " + e.what());
  }
}

JobSpec parse_job(const Json& j) {
  if (!j.is_object()) fail("", "job must be a JSON object");
  only_keys(j, "", {"name", "field", "variables", "order", "ideal", "dg", "sequences", "alternates", "map", "split",
                    "tasks", "expect"});
  JobSpec s;
  s.echo = j;
  if (j.contains("name")) s.name = as_string(j["name"], "/name");
  if (j.contains("field")) s.field = as_string(j["field"], "/field");
  if (!j.contains("variables")) fail("/variables", "missing");
  s.variables = strings(j["variables"], "/variables");
  if (s.variables.empty()) fail("/variables", "at least one variable is needed");
  if (j.contains("order")) s.order = as_string(j["order"], "/order");
  if (j.contains("ideal")) s.ideal = strings(j["ideal"], "/ideal");
  if (j.contains("dg")) s.dg = parse_dg(j["dg"], "/dg");
  if (j.contains("sequences")) s.sequences = string_lists(j["sequences"], "/sequences");
  if (j.contains("alternates")) {
    s.alternates = string_lists(j["alternates"], "/alternates");
    if (s.alternates.size() != s.sequences.size()) fail("/alternates", "must be parallel to sequences");
    for (std::size_t i = 0; i < s.alternates.size(); ++i)
      if (s.alternates[i].size() != s.sequences[i].size())
        fail("/alternates/" + std::to_string(i), "length differs from the matching sequence");
  }
  if (j.contains("map")) {
    const Json& m = j["map"];
    if (!m.is_object()) fail("/map", "expected an object");
    only_keys(m, "/map", {"variables", "ideal", "images"});
    MapSpec ms;
    if (!m.contains("variables")) fail("/map/variables", "missing");
    ms.variables = strings(m["variables"], "/map/variables");
    if (m.contains("ideal")) ms.ideal = strings(m["ideal"], "/map/ideal");
    if (!m.contains("images")) fail("/map/images", "missing");
    ms.images = strings(m["images"], "/map/images");
    if (ms.images.size() != s.variables.size()) fail("/map/images", "need one image per variable");
    s.map = std::move(ms);
  }
  if (j.contains("split")) s.split = as_int(j["split"], "/split");
  if (j.contains("tasks")) s.tasks = strings(j["tasks"], "/tasks");
  if (j.contains("expect")) {
    if (!j["expect"].is_object()) fail("/expect", "expected an object");
    for (auto it = j["expect"].begin(); it != j["expect"].end(); ++it)
      s.expect[it.key()] = as_string(it.value(), "/expect/" + it.key());
  }
  return s;
}

JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    return parse_job(j);
  } catch (const InputError& e) {
    throw InputError(path + ":" + e.what());
  }
}

JobContext instantiate(const JobSpec& spec, const RunOptions& options) {
  JobContext c;
  const std::string field_text = options.field.value_or(spec.field);
  try {
    c.field = Field::parse(field_text);
  } catch (const std::invalid_argument& e) {
    fail(options.field ? "--field" : "/field", e.what());
  }
  const int cap = options.degree_cap.value_or(PolyRing::kDefaultDegreeCap);
  MonomialOrder order = order_named(spec.order, "/order");
  try {
    c.ring = PolyRing::make(c.field, spec.variables, order, cap);
  } catch (const std::invalid_argument& e) {
    fail("/variables", e.what());
  }
  std::vector<Polynomial> ideal;
  for (std::size_t i = 0; i < spec.ideal.size(); ++i)
    ideal.push_back(parse_at(spec.ideal[i], c.ring, "/ideal/" + std::to_string(i)));
  try {
    c.q = QuotientRing::make(c.ring, ideal);
  } catch (const InhomogeneousInput& e) {
    fail("/ideal", e.what());
  }
  try {
    c.a = build(spec.dg, c.q, "/dg");
  } catch (const InhomogeneousInput& e) {
    fail("/dg", e.what());
  }
  c.sequences = parse_lists(spec.sequences, c.ring, "/sequences");
  c.alternates = parse_lists(spec.alternates, c.ring, "/alternates");
  c.split = spec.split;
  if (spec.map) {
    RingPtr tr;
    try {
      tr = PolyRing::make(c.field, spec.map->variables, MonomialOrder{}, cap);
    } catch (const std::invalid_argument& e) {
      fail("/map/variables", e.what());
    }
    std::vector<Polynomial> tideal, images;
    for (std::size_t i = 0; i < spec.map->ideal.size(); ++i)
      tideal.push_back(parse_at(spec.map->ideal[i], tr, "/map/ideal/" + std::to_string(i)));
    for (std::size_t i = 0; i < spec.map->images.size(); ++i)
      images.push_back(parse_at(spec.map->images[i], tr, "/map/images/" + std::to_string(i)));
    c.map.emplace(c.q, QuotientRing::make(tr, tideal), images);
  }
  return c;
}

}  // namespace kdg
