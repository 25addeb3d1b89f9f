#include "circlet/text_format.hpp"

#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "circlet/errors.hpp"

namespace circlet {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

int parse_int(std::string_view word, int line, const char* what) {
  int value = 0;
  const auto [end, ec] =
      std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || end != word.data() + word.size())
    throw ParseError(line, std::string("bad ") + what + " '" +
                               std::string(word) + "'");
  return value;
}

struct PendingEdge {
  int line;
  Vertex i, j;
  Rational w;
};

}  // namespace

Document parse_document(std::string_view text) {
  std::optional<int> n;
  std::optional<std::vector<Vertex>> tour;
  int tour_line = 0;
  std::vector<PendingEdge> edges;

  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto words = split_words(line);
    if (words.empty() || words[0].front() == '#') continue;

    const std::string_view key = words[0];
    if (key == "n") {
      if (words.size() != 2) throw ParseError(line_no, "expected 'n <int>'");
      if (n) throw ParseError(line_no, "duplicate 'n' line");
      n = parse_int(words[1], line_no, "vertex count");
      if (*n < 3) throw ParseError(line_no, "n must be at least 3");
    } else if (key == "tour") {
      if (tour) throw ParseError(line_no, "duplicate 'tour' line");
      if (!edges.empty()) throw ParseError(line_no, "'tour' mixed with 'e' lines");
      std::vector<Vertex> order;
      for (std::size_t w = 1; w < words.size(); ++w)
        order.push_back(parse_int(words[w], line_no, "vertex"));
      tour = std::move(order);
      tour_line = line_no;
    } else if (key == "e") {
      if (tour) throw ParseError(line_no, "'e' line mixed with 'tour'");
      if (!n) throw ParseError(line_no, "'e' line before 'n'");
      if (words.size() != 4) throw ParseError(line_no, "expected 'e <i> <j> <p>/<q>'");
      const Vertex i = parse_int(words[1], line_no, "vertex");
      const Vertex j = parse_int(words[2], line_no, "vertex");
      if (i < 1 || i > *n || j < 1 || j > *n || i == j)
        throw ParseError(line_no, "invalid edge {" + std::to_string(i) + "," +
                                      std::to_string(j) + "}");
      auto w = parse_rational(words[3]);
      if (!w) throw ParseError(line_no, "non-rational weight '" +
                                            std::string(words[3]) + "'");
      edges.push_back({line_no, i, j, *w});
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(key) + "'");
    }
  }

  if (tour) {
    if (n && *n != static_cast<int>(tour->size()))
      throw ParseError(tour_line, "tour has " + std::to_string(tour->size()) +
                                      " vertices but n is " + std::to_string(*n));
    try {
      return Tour(std::move(*tour));
    } catch (const Error& e) {
      throw ParseError(tour_line, e.what());
    }
  }
  if (!n) throw ParseError(line_no == 0 ? 1 : line_no, "empty document");
  if (edges.empty()) return Instance(*n);

  FractionalPoint x{Instance(*n)};
  std::vector<bool> seen(static_cast<std::size_t>(*n) * (*n + 1), false);
  for (const auto& e : edges) {
    const Edge key = Edge::of(e.i, e.j);
    const std::size_t slot = static_cast<std::size_t>(key.lo) * (*n) + key.hi - 1;
    if (seen[slot])
      throw ParseError(e.line, "duplicate edge {" + std::to_string(key.lo) + "," +
                                   std::to_string(key.hi) + "}");
    seen[slot] = true;
    x.set(e.i, e.j, e.w);
  }
  return x;
}

std::string serialize(const Instance& inst) {
  return "n " + std::to_string(inst.n()) + "\n";
}

std::string serialize(const Tour& tour) {
  std::string out = "n " + std::to_string(tour.size()) + "\ntour";
  for (Vertex v : tour.order()) out += " " + std::to_string(v);
  return out + "\n";
}

std::string serialize(const FractionalPoint& x) {
  std::string out = serialize(x.instance());
  for (const auto& [e, w] : x.support())
    out += "e " + std::to_string(e.lo) + " " + std::to_string(e.hi) + " " +
           to_fraction_string(w) + "\n";
  return out;
}

std::string serialize(const Document& doc) {
  return std::visit([](const auto& v) { return serialize(v); }, doc);
}

}  // namespace circlet
