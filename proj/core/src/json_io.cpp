#include <anick/json_io.hpp>

#include <anick/chains.hpp>
#include <anick/errors.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace anick::json_io {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in " + what + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write to " + path + " failed");
}

const json& field(const json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(what + ": missing field \"" + key + "\"");
  return *it;
}

std::string string_field(const json& j, const char* key, const std::string& what) {
  const json& v = field(j, key, what);
  if (!v.is_string()) throw InputError(what + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::string format_or_empty(const Word& w, const Presentation& pres) {
  return w.size() == 0 ? std::string() : pres.format_word(w);
}

Word word_or_unit(const std::string& text, const Presentation& pres) {
  return text.empty() ? Word::unit() : pres.parse_word(text);
}

}  // namespace

Presentation parse_presentation_text(const std::string& text) {
  json j = parse_json(text, "presentation");
  if (!j.is_object()) throw InputError("presentation: top level must be an object");

  const json& gens = field(j, "generators", "presentation");
  if (!gens.is_array() || gens.empty())
    throw InputError("presentation: \"generators\" must be a non-empty array");
  std::vector<std::string> names;
  for (const json& g : gens) {
    if (!g.is_string()) throw InputError("presentation: generator names must be strings");
    names.push_back(g.get<std::string>());
  }

  Presentation skeleton(names, {});

  const json& rels = field(j, "relations", "presentation");
  if (!rels.is_array()) throw InputError("presentation: \"relations\" must be an array");
  std::vector<RewriteRule> rules;
  for (const json& r : rels) {
    if (!r.is_object()) throw InputError("presentation: each relation must be an object");
    RewriteRule rule;
    rule.lhs = skeleton.parse_word(string_field(r, "lhs", "relation"));
    const json& rhs = field(r, "rhs", "relation");
    if (!rhs.is_array()) throw InputError("relation: \"rhs\" must be an array of terms");
    for (const json& t : rhs) {
      Rational c = parse_rational(string_field(t, "coef", "relation term"));
      rule.rhs.add(word_or_unit(string_field(t, "word", "relation term"), skeleton), c);
    }
    rules.push_back(std::move(rule));
  }

  std::optional<std::string> idem;
  if (auto it = j.find("idempotent"); it != j.end()) {
    if (!it->is_string()) throw InputError("presentation: \"idempotent\" must be a string");
    idem = it->get<std::string>();
  }
  return Presentation(std::move(names), std::move(rules), std::move(idem));
}

Presentation load_presentation(const std::string& path) {
  return parse_presentation_text(read_file(path));
}

namespace {

RatMatrix parse_matrix(const json& j, size_t dim, const std::string& what) {
  if (!j.is_array() || j.size() != dim)
    throw InputError(what + ": expected " + std::to_string(dim) + " rows");
  RatMatrix m(dim, dim);
  for (size_t i = 0; i < dim; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != dim)
      throw InputError(what + ": expected " + std::to_string(dim) + " columns in row " +
                       std::to_string(i));
    for (size_t k = 0; k < dim; ++k) {
      if (!row[k].is_string())
        throw InputError(what + ": entries must be rational strings");
      m.at(i, k) = parse_rational(row[k].get<std::string>());
    }
  }
  return m;
}

void parse_actions(const json& j, const char* key, size_t dim, const Presentation& pres,
                   std::map<Letter, RatMatrix>& out) {
  auto it = j.find(key);
  if (it == j.end()) return;
  if (!it->is_object())
    throw InputError(std::string("bimodule: \"") + key + "\" must be an object");
  for (const auto& [name, mat] : it->items()) {
    Letter g = pres.letter(name);
    out.emplace(g, parse_matrix(mat, dim, std::string("bimodule ") + key + " \"" + name + "\""));
  }
}

}  // namespace

FiniteBimodule parse_bimodule_text(const std::string& text, const Presentation& pres) {
  json j = parse_json(text, "bimodule");
  if (!j.is_object()) throw InputError("bimodule: top level must be an object");
  const json& d = field(j, "dim", "bimodule");
  if (!d.is_number_unsigned() || d.get<size_t>() == 0)
    throw InputError("bimodule: \"dim\" must be a positive integer");
  FiniteBimodule M;
  M.dim = d.get<size_t>();
  parse_actions(j, "left", M.dim, pres, M.left_action);
  parse_actions(j, "right", M.dim, pres, M.right_action);
  return M;
}

FiniteBimodule load_bimodule(const std::string& path, const Presentation& pres) {
  return parse_bimodule_text(read_file(path), pres);
}

std::string resolution_to_text(const Resolution& res) {
  const Presentation& pres = res.pres();
  json slices = json::array();
  for (const ResolutionSlice& s : res.slices()) {
    json chains = json::array();
    for (size_t i = 0; i < s.basis.size(); ++i) {
      json records = json::array();
      for (const auto& [key, c] : s.differential[i].terms()) {
        records.push_back({{"coef", to_string(c)},
                           {"left", format_or_empty(key.left, pres)},
                           {"chain", format_chain(key.vertex.as_chain(), pres)},
                           {"right", format_or_empty(key.right, pres)}});
      }
      chains.push_back(
          {{"chain", format_chain(s.basis[i], pres)}, {"differential", std::move(records)}});
    }
    slices.push_back({{"degree", s.degree}, {"chains", std::move(chains)}});
  }
  json j = {{"presentation_hash", res.presentation_hash()},
            {"max_degree", res.max_degree()},
            {"slices", std::move(slices)}};
  return j.dump(2) + "\n";
}

void export_resolution(const Resolution& res, const std::string& path) {
  write_file(path, resolution_to_text(res));
}

Resolution parse_resolution_text(const std::string& text, const Presentation& pres) {
  json j = parse_json(text, "resolution");
  if (!j.is_object()) throw InputError("resolution: top level must be an object");
  std::string hash = string_field(j, "presentation_hash", "resolution");
  if (hash != pres.hash())
    throw InputError("stale resolution artifact: presentation hash " + hash +
                     " does not match " + pres.hash());
  const json& md = field(j, "max_degree", "resolution");
  if (!md.is_number_integer() || md.get<int>() < 1)
    throw InputError("resolution: \"max_degree\" must be a positive integer");
  int maxDegree = md.get<int>();

  const json& slices = field(j, "slices", "resolution");
  if (!slices.is_array() || slices.size() != static_cast<size_t>(maxDegree))
    throw InputError("resolution: expected one slice per degree 1.." +
                     std::to_string(maxDegree));

  std::vector<ResolutionSlice> out;
  for (const json& sj : slices) {
    ResolutionSlice s;
    const json& deg = field(sj, "degree", "slice");
    if (!deg.is_number_integer()) throw InputError("slice: \"degree\" must be an integer");
    s.degree = deg.get<int>();
    const json& chains = field(sj, "chains", "slice");
    if (!chains.is_array()) throw InputError("slice: \"chains\" must be an array");
    for (const json& cj : chains) {
      s.basis.push_back(parse_chain(string_field(cj, "chain", "slice chain"), pres));
      const json& records = field(cj, "differential", "slice chain");
      if (!records.is_array())
        throw InputError("slice chain: \"differential\" must be an array");
      FreeBimoduleElement el;
      for (const json& rec : records) {
        BimoduleKey key{word_or_unit(string_field(rec, "left", "record"), pres),
                        BarVertex(parse_chain(string_field(rec, "chain", "record"), pres)),
                        word_or_unit(string_field(rec, "right", "record"), pres)};
        el.add(key, parse_rational(string_field(rec, "coef", "record")));
      }
      s.differential.push_back(std::move(el));
    }
    out.push_back(std::move(s));
  }
  return Resolution(pres, maxDegree, std::move(out));
}

Resolution load_resolution(const std::string& path, const Presentation& pres) {
  return parse_resolution_text(read_file(path), pres);
}

}  // namespace anick::json_io
