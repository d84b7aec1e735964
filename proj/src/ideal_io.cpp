#include "regclosure/ideal_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <vector>

#include "regclosure/errors.hpp"

namespace regclosure {

namespace {

class TextParser {
public:
  explicit TextParser(std::string_view text) : text_(text) {}

  MonomialIdeal parse(std::optional<std::size_t> n) {
    skip_space();
    bool bracketed = consume('<');
    std::vector<std::map<std::size_t, Exponent>> monomials;
    bool zero_ideal = false;

    skip_space();
    if (at_end() || peek() == '>') {
      zero_ideal = true;
    } else {
      do {
        skip_space();
        if (peek() == '0') {
          ++pos_;
          zero_ideal = true;
          continue;
        }
        monomials.push_back(parse_monomial());
        skip_space();
      } while (consume(','));
    }
    if (bracketed && !consume('>'))
      fail("expected '>'");
    skip_space();
    if (!at_end())
      fail("unexpected character");
    if (zero_ideal && !monomials.empty())
      fail("'0' cannot be mixed with other generators");

    std::size_t dim = n.value_or(max_index_);
    if (dim == 0)
      throw ParseError("cannot infer the ring dimension; pass it explicitly");
    if (dim < max_index_)
      throw ParseError("variable x" + std::to_string(max_index_) + " used in a ring with n = " +
                       std::to_string(dim));
    if (used_alias_ && dim > 3)
      throw ParseError("aliases x, y, z are only accepted when n <= 3");

    std::vector<ExponentVector> gens;
    for (const auto &m : monomials) {
      ExponentVector v(dim);
      for (auto [index, e] : m)
        v.set(index - 1, e);
      gens.push_back(std::move(v));
    }
    return minimalize(std::move(gens), dim);
  }

private:
  std::map<std::size_t, Exponent> parse_monomial() {
    std::map<std::size_t, Exponent> out;
    skip_space();
    if (peek() == '1') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek())))
        fail("coefficients are not allowed");
      return out;
    }
    while (true) {
      skip_space();
      std::size_t index = parse_variable();
      Exponent e = 1;
      skip_space();
      if (consume('^')) {
        skip_space();
        e = parse_number();
      }
      out[index] = checked_add(out[index], e);
      skip_space();
      if (consume('*'))
        continue;
      char c = peek();
      if (c == 'x' || c == 'y' || c == 'z')
        continue; // juxtaposition, e.g. "x^2y"
      return out;
    }
  }

  std::size_t parse_variable() {
    char c = peek();
    std::size_t index = 0;
    if (c == 'x') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Exponent i = parse_number();
        if (i < 1)
          fail("variable indices start at 1");
        index = static_cast<std::size_t>(i);
      } else {
        index = 1;
        used_alias_ = true;
      }
    } else if (c == 'y' || c == 'z') {
      ++pos_;
      index = c == 'y' ? 2 : 3;
      used_alias_ = true;
    } else {
      fail("expected a variable");
    }
    max_index_ = std::max(max_index_, index);
    return index;
  }

  Exponent parse_number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      fail("expected a number");
    Exponent value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc())
      fail("number out of range");
    return value;
  }

  [[noreturn]] void fail(const std::string &why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool consume(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
  bool used_alias_ = false;
};

} // namespace

MonomialIdeal parse_ideal(std::string_view input, std::optional<std::size_t> n) {
  auto first = std::ranges::find_if_not(
      input, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (first != input.end() && *first == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(input);
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(std::string("invalid JSON ideal: ") + e.what());
    }
    MonomialIdeal ideal = ideal_from_json(j);
    if (n && *n != ideal.dimension())
      throw ParseError("JSON ideal has n = " + std::to_string(ideal.dimension()) +
                       " but n = " + std::to_string(*n) + " was requested");
    return ideal;
  }
  return TextParser(input).parse(n);
}

ExponentVector exponent_from_json(const nlohmann::json &j) {
  if (!j.is_array())
    throw ParseError("exponent vector must be a JSON array");
  std::vector<Exponent> entries;
  for (const auto &e : j) {
    if (!e.is_number_integer() || e.get<Exponent>() < 0)
      throw ParseError("exponents must be nonnegative integers");
    entries.push_back(e.get<Exponent>());
  }
  return ExponentVector(std::move(entries));
}

nlohmann::json exponent_to_json(const ExponentVector &v) {
  nlohmann::json out = nlohmann::json::array();
  for (Exponent e : v)
    out.push_back(e);
  return out;
}

MonomialIdeal ideal_from_json(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gens"))
    throw ParseError("JSON ideal needs keys \"n\" and \"gens\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw ParseError("\"n\" must be a positive integer");
  if (!j["gens"].is_array())
    throw ParseError("\"gens\" must be an array");
  auto n = j["n"].get<std::size_t>();
  std::vector<ExponentVector> gens;
  for (const auto &g : j["gens"]) {
    ExponentVector v = exponent_from_json(g);
    if (v.size() != n)
      throw ParseError("generator of length " + std::to_string(v.size()) + " but n = " +
                       std::to_string(n));
    gens.push_back(std::move(v));
  }
  return minimalize(std::move(gens), n);
}

nlohmann::json ideal_to_json(const MonomialIdeal &ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto &g : ideal.generators())
    gens.push_back(exponent_to_json(g));
  return {{"n", ideal.dimension()}, {"gens", std::move(gens)}};
}

std::string to_canonical_json(const MonomialIdeal &ideal) {
  return ideal_to_json(ideal).dump();
}

std::string monomial_to_text(const ExponentVector &v) {
  static constexpr const char *aliases[] = {"x", "y", "z"};
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += v.size() <= 3 ? std::string(aliases[i]) : "x" + std::to_string(i + 1);
    if (v[i] > 1)
      out += "^" + std::to_string(v[i]);
  }
  return out.empty() ? "1" : out;
}

std::string ideal_to_text(const MonomialIdeal &ideal) {
  if (ideal.is_zero())
    return "0";
  std::string out;
  for (const auto &g : ideal.generators()) {
    if (!out.empty())
      out += ", ";
    out += monomial_to_text(g);
  }
  return out;
}

ExponentVector parse_exponent_list(std::string_view text) {
  std::vector<Exponent> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.remove_suffix(1);
    Exponent value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || value < 0)
      throw ParseError("bad exponent list \"" + std::string(text) + "\"");
    entries.push_back(value);
    pos = comma + 1;
  }
  return ExponentVector(std::move(entries));
}

} // namespace regclosure
