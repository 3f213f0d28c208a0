#include "apolar/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

namespace apolar {

namespace {

using json = nlohmann::json;

// Input iterator that counts consumed characters, so SAX events can be mapped
// back to offsets in the text.
struct CountingIterator {
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  std::size_t* consumed = nullptr;

  reference operator*() const { return *p; }
  CountingIterator& operator++() {
    ++p;
    ++*consumed;
    return *this;
  }
  CountingIterator operator++(int) {
    auto old = *this;
    ++*this;
    return old;
  }
  bool operator==(const CountingIterator& o) const { return p == o.p; }
  bool operator!=(const CountingIterator& o) const { return p != o.p; }
};

// Start of the token whose last character is text[end - 1]. After a value
// event the lexer may hold one delimiter of lookahead, which `lookahead` skips.
std::size_t token_start(const std::string& text, std::size_t end, bool lookahead) {
  std::size_t i = std::min(end, text.size());
  auto skip_space = [&] {
    while (i > 0 && std::isspace(static_cast<unsigned char>(text[i - 1]))) --i;
  };
  auto bare = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+'; };
  skip_space();
  if (lookahead && i > 0 && (text[i - 1] == ',' || text[i - 1] == ':' || text[i - 1] == '}' || text[i - 1] == ']')) {
    --i;
    skip_space();
  }
  if (i == 0) return 0;
  --i;
  if (text[i] == '"') {
    while (i > 0) {
      --i;
      if (text[i] == '"' && (i == 0 || text[i - 1] != '\\')) break;
    }
  } else if (bare(text[i])) {
    while (i > 0 && bare(text[i - 1])) --i;
  }
  return i;
}

// Records the text offset of every value by JSON pointer.
class Locator : public nlohmann::json_sax<json> {
 public:
  Locator(const std::string& text, const std::size_t* consumed) : text_(text), consumed_(consumed) {}

  bool null() override { return value(); }
  bool boolean(bool) override { return value(); }
  bool number_integer(number_integer_t) override { return value(); }
  bool number_unsigned(number_unsigned_t) override { return value(); }
  bool number_float(number_float_t, const string_t&) override { return value(); }
  bool string(string_t&) override { return value(); }
  bool binary(binary_t&) override { return value(); }
  bool start_object(std::size_t) override {
    value();
    stack_.push_back({false, {}, -1});
    return true;
  }
  bool key(string_t& k) override {
    stack_.back().key = k;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    value();
    stack_.push_back({true, {}, -1});
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

  const std::map<std::string, std::size_t>& positions() const { return positions_; }

 private:
  struct Frame {
    bool array;
    std::string key;
    long index;
  };

  bool value() {
    if (!stack_.empty() && stack_.back().array) ++stack_.back().index;
    std::string path;
    for (const auto& f : stack_) path += "/" + (f.array ? std::to_string(f.index) : f.key);
    positions_.emplace(path, token_start(text_, *consumed_, true));
    return true;
  }

  const std::string& text_;
  const std::size_t* consumed_;
  std::vector<Frame> stack_;
  std::map<std::string, std::size_t> positions_;
};

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class Document {
 public:
  explicit Document(const std::string& text) : text_(text) {
    try {
      root_ = json::parse(text);
    } catch (const json::parse_error& e) {
      const auto [line, col] = line_column(text, token_start(text, e.byte, false));
      throw ParseError("invalid JSON", line, col);
    }
    std::size_t consumed = 0;
    CountingIterator first{text.data(), &consumed};
    CountingIterator last{text.data() + text.size(), &consumed};
    Locator loc(text, &consumed);
    json::sax_parse(first, last, &loc);
    positions_ = loc.positions();
  }

  const json& root() const { return root_; }

  [[noreturn]] void fail(std::string pointer, const std::string& what) const {
    for (;;) {
      auto it = positions_.find(pointer);
      if (it != positions_.end()) {
        const auto [line, col] = line_column(text_, it->second);
        throw ParseError(what, line, col);
      }
      if (pointer.empty()) throw ParseError(what, 1, 1);
      pointer.erase(pointer.rfind('/'));
    }
  }

  const json& member(const json& obj, const std::string& path, const std::string& key) const {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing \"" + key + "\"");
    return *it;
  }

  long integer(const json& v, const std::string& path) const {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<long>();
  }

  SurfaceRing surface(const json& obj) const {
    const auto& s = member(obj, "", "surface");
    if (!s.is_string()) fail("/surface", "expected a surface name");
    const auto name = s.get<std::string>();
    if (name != "p1xp1" && name != "f1") fail("/surface", "unknown surface \"" + name + "\"");
    return SurfaceRing::from_name(name);
  }

  mpz_class big_integer(const json& v, const std::string& path) const {
    if (v.is_number_integer()) return mpz_class(v.dump());
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      const std::size_t sign = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (s.size() == sign || s.find_first_not_of("0123456789", sign) != std::string::npos)
        fail(path, "expected an integer string");
      return mpz_class(s[0] == '+' ? s.substr(1) : s);
    }
    fail(path, "expected an integer");
  }

  // Rational or complex entry; plain integers count as rational.
  std::variant<Rational, Complex> scalar(const json& v, const std::string& path) const {
    if (v.is_number_integer()) return Rational(big_integer(v, path));
    if (!v.is_object()) fail(path, "expected {num, den} or {re, im}");
    const bool rational = v.contains("num");
    const bool complex = v.contains("re") || v.contains("im");
    if (rational == complex) fail(path, "expected exactly one of {num, den} and {re, im}");
    if (rational) {
      const mpz_class num = big_integer(v["num"], path + "/num");
      mpz_class den = 1;
      if (v.contains("den")) den = big_integer(v["den"], path + "/den");
      if (den == 0) fail(path + "/den", "zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    auto part = [&](const char* k) {
      if (!v.contains(k)) return 0.0;
      const auto& x = v[k];
      if (!x.is_number()) fail(path + "/" + k, "expected a number");
      return x.get<double>();
    };
    return Complex(part("re"), part("im"));
  }

 private:
  std::string text_;
  json root_;
  std::map<std::string, std::size_t> positions_;
};

// Tracks whether all entries seen so far agree on exact versus floating.
struct KindTracker {
  std::optional<bool> exact;
  bool accept(bool is_exact) {
    if (!exact) exact = is_exact;
    return *exact == is_exact;
  }
};

}  // namespace

AnyForm parse_form(const std::string& text) {
  Document doc(text);
  const json& root = doc.root();
  const SurfaceRing ring = doc.surface(root);

  const auto& side_v = doc.member(root, "", "side");
  if (!side_v.is_string() || (side_v != "S" && side_v != "T")) doc.fail("/side", "side must be \"S\" or \"T\"");
  const Side side = side_v == "S" ? Side::S : Side::T;

  const auto& deg = doc.member(root, "", "degree");
  if (!deg.is_array() || deg.size() != 2) doc.fail("/degree", "degree must be [a, b]");
  const DegreeClass d{static_cast<int>(doc.integer(deg[0], "/degree/0")),
                      static_cast<int>(doc.integer(deg[1], "/degree/1"))};
  if (!ring.is_effective(d)) doc.fail("/degree", "degree " + to_string(d) + " is not effective");

  const auto& terms = doc.member(root, "", "terms");
  if (!terms.is_array()) doc.fail("/terms", "terms must be an array");

  ExactForm ef(ring, side, d);
  FloatForm ff(ring, side, d);
  KindTracker kind;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "/terms/" + std::to_string(i);
    const auto& t = terms[i];
    const auto& ev = doc.member(t, path, "exp");
    if (!ev.is_array() || ev.size() != 4) doc.fail(path + "/exp", "exp must have four entries");
    Exponent e{};
    for (std::size_t k = 0; k < 4; ++k) {
      const long x = doc.integer(ev[k], path + "/exp/" + std::to_string(k));
      if (x < 0) doc.fail(path + "/exp/" + std::to_string(k), "negative exponent");
      e[k] = static_cast<int>(x);
    }
    if (ring.degree_of(e) != d)
      doc.fail(path + "/exp", "term of degree " + to_string(ring.degree_of(e)) + " in a form of degree " + to_string(d));
    const auto c = doc.scalar(t, path);
    if (!kind.accept(std::holds_alternative<Rational>(c))) doc.fail(path, "rational and complex terms are mixed");
    if (std::holds_alternative<Rational>(c))
      ef.add_term(e, std::get<Rational>(c));
    else
      ff.add_term(e, std::get<Complex>(c));
  }
  if (kind.exact.value_or(true)) return ef;
  return ff;
}

AnyScheme parse_scheme(const std::string& text, std::optional<SurfaceRing> expected) {
  Document doc(text);
  const json& root = doc.root();
  const SurfaceRing ring = doc.surface(root);
  if (expected && !(ring == *expected))
    doc.fail("/surface", "scheme lives on " + ring.name() + ", form on " + expected->name());
  const auto& pts = doc.member(root, "", "points");
  if (!pts.is_array()) doc.fail("/points", "points must be an array");

  std::vector<CoxPoint<Rational>> exact;
  std::vector<CoxPoint<Complex>> floating;
  KindTracker kind;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string path = "/points/" + std::to_string(i);
    const auto& cox = doc.member(pts[i], path, "cox");
    if (!cox.is_array() || cox.size() != 4) doc.fail(path + "/cox", "cox must have four entries");
    CoxPoint<Rational> q{};
    CoxPoint<Complex> z{};
    for (std::size_t k = 0; k < 4; ++k) {
      const std::string cp = path + "/cox/" + std::to_string(k);
      const auto c = doc.scalar(cox[k], cp);
      if (!kind.accept(std::holds_alternative<Rational>(c))) doc.fail(cp, "rational and complex entries are mixed");
      if (std::holds_alternative<Rational>(c))
        q[k] = std::get<Rational>(c);
      else
        z[k] = std::get<Complex>(c);
    }
    if (kind.exact.value_or(true)) {
      if (in_irrelevant_locus(ring, q)) doc.fail(path, "point lies in the irrelevant locus");
      exact.push_back(q);
    } else {
      if (in_irrelevant_locus(ring, z)) doc.fail(path, "point lies in the irrelevant locus");
      floating.push_back(z);
    }
  }
  try {
    if (kind.exact.value_or(true)) return make_scheme(ring, exact);
    return make_scheme(ring, floating);
  } catch (const std::invalid_argument& e) {
    doc.fail("/points", e.what());
  }
}

SurfaceRing ring_of(const AnyForm& f) {
  return std::visit([](const auto& x) { return x.ring(); }, f);
}

SurfaceRing ring_of(const AnyScheme& s) {
  return std::visit([](const auto& x) { return x.ring; }, s);
}

namespace {

nlohmann::ordered_json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

std::string side_name(Side s) { return s == Side::S ? "S" : "T"; }

template <class Scalar, class Entry>
nlohmann::ordered_json form_json(const MultiForm<Scalar>& f, Entry entry) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : f.terms()) {
    nlohmann::ordered_json t;
    t["exp"] = e;
    const nlohmann::ordered_json value = entry(c);
    for (const auto& [k, v] : value.items()) t[k] = v;
    terms.push_back(t);
  }
  return {{"surface", f.ring().name()},
          {"side", side_name(f.side())},
          {"degree", {f.degree().a, f.degree().b}},
          {"terms", terms}};
}

}  // namespace

nlohmann::ordered_json to_json(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::ordered_json to_json(const CoxPoint<Complex>& p) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& z : p) a.push_back(to_json(z));
  return a;
}

nlohmann::ordered_json to_json(const ExactForm& f) { return form_json(f, rational_json); }

nlohmann::ordered_json to_json(const FloatForm& f) {
  return form_json(f, [](const Complex& z) { return to_json(z); });
}

nlohmann::ordered_json to_json(const ExactScheme& s) {
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const auto& p : s.points) {
    nlohmann::ordered_json cox = nlohmann::ordered_json::array();
    for (const auto& q : p) cox.push_back(rational_json(q));
    pts.push_back({{"cox", cox}});
  }
  return {{"surface", s.ring.name()}, {"points", pts}};
}

nlohmann::ordered_json to_json(const FloatScheme& s) {
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const auto& p : s.points) pts.push_back({{"cox", to_json(p)}});
  return {{"surface", s.ring.name()}, {"points", pts}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace apolar
