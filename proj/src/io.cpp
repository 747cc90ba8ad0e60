#include "sigvar/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sigvar {

namespace {

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  return j.at(key);
}

Word word_from_json(const json& j) {
  if (j.is_string()) return Word::parse(j.get<std::string>());
  if (!j.is_array()) throw Error("word must be an array of letters");
  std::vector<Letter> letters;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw Error("word letters must be integers");
    letters.push_back(e.get<Letter>());
  }
  return Word(std::move(letters));
}

json word_to_json(const Word& w) { return json(w.letters()); }

}  // namespace

json path_to_json(const Path& x) {
  json segs = json::array();
  for (const auto& s : x.segments()) {
    json coords = json::array();
    for (const auto& c : s.coordinates()) coords.push_back(c.to_string());
    segs.push_back(std::move(coords));
  }
  return json{{"dimension", x.dimension()}, {"variables", x.table()->names()}, {"segments", std::move(segs)}};
}

Path path_from_json(const json& j) {
  auto dim = field(j, "dimension");
  if (!dim.is_number_integer() || dim.get<long>() < 1) throw Error("'dimension' must be a positive integer");
  auto d = dim.get<std::size_t>();
  TablePtr table = j.contains("variables") ? make_table(string_list(j.at("variables"), "variables")) : constant_table();
  const auto& segs = field(j, "segments");
  if (!segs.is_array() || segs.empty()) throw Error("'segments' must be a nonempty array");
  std::vector<PathSegment> out;
  for (const auto& s : segs) {
    auto texts = string_list(s, "segment");
    if (texts.size() != d)
      throw Error("segment has " + std::to_string(texts.size()) + " coordinates, expected " + std::to_string(d));
    std::vector<UniPoly> coords;
    for (const auto& t : texts) coords.push_back(UniPoly::parse(t, table));
    out.emplace_back(std::move(coords));
  }
  return Path(d, std::move(out));
}

json tensor_to_json(const Tensor& t) {
  json terms = json::array();
  for (const auto& [w, c] : t.terms()) terms.push_back({{"word", word_to_json(w)}, {"coefficient", c.to_string()}});
  return json{{"alphabet", t.alphabet()}, {"variables", t.table()->names()}, {"terms", std::move(terms)}};
}

Tensor tensor_from_json(const json& j) {
  int alphabet = field(j, "alphabet").get<int>();
  TablePtr table = j.contains("variables") ? make_table(string_list(j.at("variables"), "variables")) : constant_table();
  Tensor t(alphabet, table);
  for (const auto& term : field(j, "terms")) {
    Word w = word_from_json(field(term, "word"));
    t.add(w, MultiPoly::parse(field(term, "coefficient").get<std::string>(), table));
  }
  return t;
}

json signature_to_json(const SignatureResult& s) {
  json terms = json::array();
  for (const auto& [w, c] : s.tensor.terms())
    terms.push_back({{"word", word_to_json(w)}, {"coefficient", c.to_string()}});
  return json{{"dimension", s.path.dimension()},
              {"level", s.level},
              {"variables", s.path.table()->names()},
              {"terms", std::move(terms)}};
}

Tensor signature_tensor_from_json(const json& j) {
  json t = j;
  t["alphabet"] = field(j, "dimension");
  return tensor_from_json(t);
}

json polynomial_map_to_json(const PolynomialMap& f) {
  json params = json::array();
  for (std::size_t i = 0; i < f.parameter_count(); ++i)
    params.push_back({{"name", f.parameters->name(i)}, {"weight", f.weights[i]}});
  json coords = json::array(), entries = json::array();
  for (const auto& l : f.labels) coords.push_back(l.to_string());
  for (const auto& e : f.entries) entries.push_back(e.to_string());
  return json{{"parameters", std::move(params)},
              {"alphabet", f.alphabet},
              {"coordinates", std::move(coords)},
              {"entries", std::move(entries)}};
}

PolynomialMap polynomial_map_from_json(const json& j) {
  PolynomialMap f;
  std::vector<std::string> names;
  for (const auto& p : field(j, "parameters")) {
    if (p.is_string()) {
      names.push_back(p.get<std::string>());
      f.weights.push_back(1);
    } else {
      names.push_back(field(p, "name").get<std::string>());
      f.weights.push_back(p.contains("weight") ? p.at("weight").get<unsigned>() : 1u);
    }
  }
  f.parameters = make_table(names);
  f.alphabet = j.contains("alphabet") ? j.at("alphabet").get<int>() : 1;
  for (const auto& c : field(j, "coordinates")) f.labels.push_back(word_from_json(c));
  for (const auto& e : field(j, "entries")) f.entries.push_back(MultiPoly::parse(e.get<std::string>(), f.parameters));
  if (!j.contains("alphabet"))
    for (const auto& l : f.labels) f.alphabet = std::max(f.alphabet, static_cast<int>(l.max_letter()));
  f.validate();
  return f;
}

json lyndon_polynomial_to_json(const LyndonPolynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::array();
    for (const auto& [w, e] : m) mono.push_back({{"word", word_to_json(w)}, {"exponent", e}});
    out.push_back({{"monomial", std::move(mono)}, {"coefficient", c.get_str()}});
  }
  return out;
}

LyndonPolynomial lyndon_polynomial_from_json(const json& j) {
  LyndonPolynomial p;
  if (!j.is_array()) throw Error("Lyndon polynomial must be an array of terms");
  for (const auto& term : j) {
    ShuffleMonomial m;
    for (const auto& f : field(term, "monomial")) m[word_from_json(field(f, "word"))] += field(f, "exponent").get<unsigned>();
    Rational c(field(term, "coefficient").get<std::string>());
    c.canonicalize();
    p.add(m, c);
  }
  return p;
}

std::vector<MultiPoly> polys_from_json(const json& j) {
  auto table = make_table(string_list(field(j, "variables"), "variables"));
  std::vector<MultiPoly> out;
  for (const auto& text : string_list(field(j, "polys"), "polys")) out.push_back(MultiPoly::parse(text, table));
  if (out.empty()) throw Error("'polys' must not be empty");
  return out;
}

json load_json_argument(const std::string& arg) {
  std::size_t i = 0;
  while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
  try {
    if (i < arg.size() && (arg[i] == '{' || arg[i] == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw Error("cannot open '" + arg + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace sigvar
