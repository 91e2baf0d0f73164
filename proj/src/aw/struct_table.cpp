#include "slnaw/aw/struct_table.hpp"

#include <array>
#include <json.hpp>

#include "slnaw/core/parallel.hpp"
#include "slnaw/exactnum/errors.hpp"

namespace slnaw::aw {

const Alphabet* alpha_alphabet() { return Alphabet::of({"alpha"}); }
ParamPoly alpha() { return ParamPoly::variable(alpha_alphabet(), 0); }

struct FreeWord::Node {
  int gen = 0;
  FreeWord left;
  FreeWord right;
};

FreeWord FreeWord::generator(int i) {
  if (i < 1) throw IndexError("generator index must be >= 1");
  FreeWord w;
  w.node_ = std::make_shared<Node>(Node{i, {}, {}});
  return w;
}

FreeWord FreeWord::bracket(FreeWord a, FreeWord b) {
  FreeWord w;
  w.node_ = std::make_shared<Node>(Node{0, std::move(a), std::move(b)});
  return w;
}

FreeWord FreeWord::chain(int i, int j, int n) {
  auto wrap = [n](int k) { return ((k - 1) % n + n) % n + 1; };
  i = wrap(i);
  j = wrap(j);
  std::vector<int> seq{i};
  while (seq.back() != j) seq.push_back(wrap(seq.back() + 1));
  FreeWord w = generator(seq.back());
  for (auto it = seq.rbegin() + 1; it != seq.rend(); ++it) w = bracket(generator(*it), w);
  return w;
}

bool FreeWord::is_generator() const { return node_ && node_->gen > 0; }
int FreeWord::generator_index() const { return node_->gen; }
const FreeWord& FreeWord::left() const { return node_->left; }
const FreeWord& FreeWord::right() const { return node_->right; }

int FreeWord::length() const {
  if (!node_) return 0;
  return is_generator() ? 1 : left().length() + right().length();
}

std::string FreeWord::to_string() const {
  if (!node_) return "";
  if (is_generator()) return "e" + std::to_string(node_->gen);
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

namespace {

FreeWord parse_word(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw ParseError("unexpected end of word");
  if (text[pos] == '[') {
    ++pos;
    FreeWord a = parse_word(text, pos);
    if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ',' in word");
    ++pos;
    FreeWord b = parse_word(text, pos);
    if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']' in word");
    ++pos;
    return FreeWord::bracket(std::move(a), std::move(b));
  }
  if (text[pos] != 'e') throw ParseError("expected generator in word");
  ++pos;
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (start == pos) throw ParseError("missing generator index");
  return FreeWord::generator(std::stoi(std::string(text.substr(start, pos - start))));
}

}  // namespace

FreeWord FreeWord::parse(std::string_view text) {
  std::size_t pos = 0;
  FreeWord w = parse_word(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters in word");
  return w;
}

StructTable::StructTable(std::string name, std::vector<std::string> basis, const Alphabet* params)
    : name_(std::move(name)), basis_(std::move(basis)), params_(params), words_(basis_.size()) {}

std::optional<int> StructTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

AWElement StructTable::symbol(std::string_view name) const {
  if (auto i = index_of(name)) return AWElement(*i);
  for (const auto& [n, v] : dependents_) {
    if (n == name) return v;
  }
  throw IndexError("unknown symbol '" + std::string(name) + "' in table " + name_);
}

void StructTable::define_dependent(std::string name, AWElement value) {
  dependents_.emplace_back(std::move(name), std::move(value));
}

void StructTable::set_bracket(int i, int j, const AWElement& value) {
  if (i == j) {
    if (!value.is_zero()) throw ConfigurationError("[b, b] must vanish");
    return;
  }
  if (i > j) {
    set_bracket(j, i, -value);
    return;
  }
  if (value.is_zero()) {
    brackets_.erase({i, j});
  } else {
    brackets_[{i, j}] = value;
  }
}

AWElement StructTable::basis_bracket(int i, int j) const {
  if (i == j) return {};
  if (i > j) return -basis_bracket(j, i);
  auto it = brackets_.find({i, j});
  return it == brackets_.end() ? AWElement() : it->second;
}

AWElement StructTable::bracket(const AWElement& a, const AWElement& b) const {
  return bilinear_extend(a, b, [this](int i, int j) { return basis_bracket(i, j); });
}

std::string StructTable::render(const AWElement& e) const {
  return e.to_string([this](int i) { return basis_.at(static_cast<std::size_t>(i)); });
}

bool operator==(const StructTable& a, const StructTable& b) {
  if (a.name_ != b.name_ || a.basis_ != b.basis_ || a.params_ != b.params_ || a.brackets_ != b.brackets_ ||
      a.generators_ != b.generators_ || a.dependents_ != b.dependents_ || a.words_.size() != b.words_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if (a.words_[i].has_value() != b.words_[i].has_value()) return false;
    if (a.words_[i] && !(*a.words_[i] == *b.words_[i])) return false;
  }
  return true;
}

AWElement eval_word(const FreeWord& w, const StructTable& t, const std::vector<AWElement>& images) {
  if (w.is_generator()) {
    const int i = w.generator_index();
    if (i > static_cast<int>(images.size())) throw IndexError("word uses generator beyond the image list");
    return images[static_cast<std::size_t>(i - 1)];
  }
  return t.bracket(eval_word(w.left(), t, images), eval_word(w.right(), t, images));
}

AWElement eval_word(const FreeWord& w, const StructTable& t) {
  std::vector<AWElement> images;
  for (int g : t.generators()) images.emplace_back(g);
  return eval_word(w, t, images);
}

namespace {

using Json = nlohmann::ordered_json;

Json element_json(const StructTable& t, const AWElement& e) {
  Json arr = Json::array();
  for (const auto& [k, c] : e.terms()) arr.push_back(Json::array({t.basis().at(static_cast<std::size_t>(k)), c.to_string()}));
  return arr;
}

AWElement element_from(const StructTable& t, const Json& arr) {
  AWElement e;
  for (const auto& term : arr) {
    auto idx = t.index_of(term.at(0).get<std::string>());
    if (!idx) throw ParseError("unknown basis name in table document");
    e.add_term(*idx, ParamPoly::parse(term.at(1).get<std::string>(), t.params()));
  }
  return e;
}

}  // namespace

std::string export_table(const StructTable& t) {
  Json j;
  j["schema"] = 1;
  j["name"] = t.name();
  Json params = Json::array();
  if (t.params()) {
    for (const auto& v : t.params()->variables()) params.push_back(v.name);
  }
  j["parameters"] = params;
  j["basis"] = t.basis();
  Json gens = Json::array();
  for (int g : t.generators()) gens.push_back(t.basis().at(static_cast<std::size_t>(g)));
  j["generators"] = gens;
  Json words = Json::array();
  for (std::size_t i = 0; i < t.words().size(); ++i) {
    if (t.words()[i]) words.push_back(Json::array({t.basis()[i], t.words()[i]->to_string()}));
  }
  j["words"] = words;
  Json deps = Json::array();
  for (const auto& [n, v] : t.dependents()) deps.push_back(Json::array({n, element_json(t, v)}));
  j["dependents"] = deps;
  Json brackets = Json::array();
  for (int a = 0; a < t.dim(); ++a) {
    for (int b = a + 1; b < t.dim(); ++b) {
      AWElement v = t.basis_bracket(a, b);
      if (v.is_zero()) continue;
      brackets.push_back(Json{{"pair", {t.basis()[static_cast<std::size_t>(a)], t.basis()[static_cast<std::size_t>(b)]}},
                              {"value", element_json(t, v)}});
    }
  }
  j["brackets"] = brackets;
  return j.dump(2) + "\n";
}

StructTable import_table(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table document: ") + e.what());
  }
  try {
    if (j.at("schema").get<int>() != 1) throw ParseError("unsupported table schema");
    std::vector<std::string_view> names;
    auto params_list = j.at("parameters").get<std::vector<std::string>>();
    std::vector<Variable> vars;
    for (auto& n : params_list) vars.push_back({n, false});
    const Alphabet* params = vars.empty() ? nullptr : Alphabet::intern(vars);
    StructTable t(j.at("name").get<std::string>(), j.at("basis").get<std::vector<std::string>>(), params);
    std::vector<int> gens;
    for (const auto& g : j.at("generators")) {
      auto idx = t.index_of(g.get<std::string>());
      if (!idx) throw ParseError("unknown generator name in table document");
      gens.push_back(*idx);
    }
    t.set_generators(gens);
    for (const auto& w : j.at("words")) {
      auto idx = t.index_of(w.at(0).get<std::string>());
      if (!idx) throw ParseError("unknown word owner in table document");
      t.set_word(*idx, FreeWord::parse(w.at(1).get<std::string>()));
    }
    for (const auto& d : j.at("dependents")) t.define_dependent(d.at(0).get<std::string>(), element_from(t, d.at(1)));
    for (const auto& b : j.at("brackets")) {
      auto a = t.index_of(b.at("pair").at(0).get<std::string>());
      auto c = t.index_of(b.at("pair").at(1).get<std::string>());
      if (!a || !c) throw ParseError("unknown bracket pair in table document");
      t.set_bracket(*a, *c, element_from(t, b.at("value")));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table document: ") + e.what());
  }
}

Check check_jacobi(const StructTable& t) {
  const std::string name = "Jacobi identity on all basis triples";
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < t.dim(); ++a) {
    for (int b = a + 1; b < t.dim(); ++b) {
      for (int c = b + 1; c < t.dim(); ++c) triples.push_back({a, b, c});
    }
  }
  auto failure = first_hit(triples.size(), [&](std::size_t i) -> std::optional<Locator> {
    const auto [a, b, c] = triples[i];
    AWElement ea(a), eb(b), ec(c);
    AWElement r = t.bracket(ea, t.bracket(eb, ec)) + t.bracket(eb, t.bracket(ec, ea)) + t.bracket(ec, t.bracket(ea, eb));
    if (r.is_zero()) return std::nullopt;
    const auto& bs = t.basis();
    return Locator{"(" + bs[static_cast<std::size_t>(a)] + ", " + bs[static_cast<std::size_t>(b)] + ", " +
                       bs[static_cast<std::size_t>(c)] + ")",
                   {}, t.render(r)};
  });
  if (failure) return Check::fail(name, *failure);
  return Check::pass(name, std::to_string(triples.size()) + " triples");
}

}  // namespace slnaw::aw
