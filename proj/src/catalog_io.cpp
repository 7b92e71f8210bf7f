#include "centra/catalog_io.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "centra/constructors.hpp"
#include "centra/errors.hpp"

namespace centra {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    ++number;
    const std::string_view t = trim(raw);
    if (!t.empty() && t.front() != '#') out.push_back({number, t});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line) {
  if (tok.empty() || tok.size() > 9) throw ParseError(line, "bad number '" + std::string(tok) + "'");
  std::size_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') throw ParseError(line, "bad number '" + std::string(tok) + "'");
    v = v * 10 + std::size_t(c - '0');
  }
  return v;
}

// "keyword rest" -> rest, when the line starts with keyword
std::optional<std::string_view> keyword(const Line& l, std::string_view kw) {
  if (l.text == kw) return std::string_view();
  if (l.text.size() > kw.size() && l.text.substr(0, kw.size()) == kw &&
      (l.text[kw.size()] == ' ' || l.text[kw.size()] == '\t'))
    return trim(l.text.substr(kw.size()));
  return std::nullopt;
}

void expect_header(std::string_view text, std::string_view header) {
  const auto nl = text.find('\n');
  if (trim(text.substr(0, nl)) != header) throw ParseError(1, "expected header '" + std::string(header) + "'");
}

}  // namespace

Group read_grp(std::string_view text, std::size_t order_cap) {
  expect_header(text, "%grp 1");
  const auto lines = content_lines(text);
  std::size_t i = 1;  // lines[0] is the header
  std::string name;
  if (i < lines.size())
    if (auto rest = keyword(lines[i], "name")) {
      name = std::string(*rest);
      ++i;
    }
  if (i >= lines.size()) throw ParseError(lines.back().number, "missing 'order' line");
  const auto order_arg = keyword(lines[i], "order");
  if (!order_arg) throw ParseError(lines[i].number, "expected 'order <n>'");
  const std::size_t n = parse_index(*order_arg, lines[i].number);
  if (n == 0) throw ParseError(lines[i].number, "order must be positive");
  if (n > order_cap) throw OrderCapExceeded(order_cap);
  ++i;
  if (i >= lines.size() || lines[i].text != "table") throw ParseError(i < lines.size() ? lines[i].number : 0, "expected 'table'");
  ++i;
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r, ++i) {
    if (i >= lines.size()) throw ParseError(lines.back().number, "table has fewer than " + std::to_string(n) + " rows");
    const auto toks = split_ws(lines[i].text);
    if (toks.size() != n)
      throw ParseError(lines[i].number, "row has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(n));
    for (auto tok : toks) {
      const std::size_t v = parse_index(tok, lines[i].number);
      if (v >= n) throw ParseError(lines[i].number, "index " + std::to_string(v) + " out of range");
      flat.push_back(static_cast<Elem>(v));
    }
  }
  if (i < lines.size()) throw ParseError(lines[i].number, "unexpected content after the table");
  return Group::from_flat(n, std::move(flat), std::move(name), order_cap);
}

std::string write_grp(const Group& g) {
  std::string out = "%grp 1\n";
  if (!g.name().empty()) out += "name " + g.name() + "\n";
  out += "order " + std::to_string(g.order()) + "\ntable\n";
  for (Elem a = 0; a < g.order(); ++a) {
    const auto row = g.row(a);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

Group read_permgrp(std::string_view text, std::size_t order_cap) {
  expect_header(text, "%permgrp 1");
  const auto lines = content_lines(text);
  std::size_t i = 1;
  std::string name;
  if (i < lines.size())
    if (auto rest = keyword(lines[i], "name")) {
      name = std::string(*rest);
      ++i;
    }
  if (i >= lines.size()) throw ParseError(lines.back().number, "missing 'degree' line");
  const auto degree_arg = keyword(lines[i], "degree");
  if (!degree_arg) throw ParseError(lines[i].number, "expected 'degree <d>'");
  const std::size_t d = parse_index(*degree_arg, lines[i].number);
  if (d == 0) throw ParseError(lines[i].number, "degree must be positive");
  ++i;

  using Perm = std::vector<Elem>;
  std::vector<Perm> gens;
  for (; i < lines.size(); ++i) {
    const auto rest = keyword(lines[i], "gen");
    if (!rest) throw ParseError(lines[i].number, "expected 'gen <images>'");
    const auto toks = split_ws(*rest);
    if (toks.size() != d)
      throw NotAPermutation("line " + std::to_string(lines[i].number) + ": " + std::to_string(toks.size()) +
                            " images for degree " + std::to_string(d));
    Perm p;
    std::vector<char> hit(d, 0);
    for (auto tok : toks) {
      const std::size_t v = parse_index(tok, lines[i].number);
      if (v >= d || hit[v])
        throw NotAPermutation("line " + std::to_string(lines[i].number) + ": images are not a bijection of 0.." +
                              std::to_string(d - 1));
      hit[v] = 1;
      p.push_back(static_cast<Elem>(v));
    }
    gens.push_back(std::move(p));
  }
  if (gens.empty()) throw ParseError(lines.back().number, "at least one 'gen' line is required");

  Perm identity(d);
  for (std::size_t x = 0; x < d; ++x) identity[x] = static_cast<Elem>(x);
  std::map<Perm, Elem> index{{identity, 0}};
  std::vector<Perm> elems{identity};
  auto compose = [d](const Perm& first, const Perm& then) {
    Perm c(d);
    for (std::size_t x = 0; x < d; ++x) c[x] = then[first[x]];
    return c;
  };
  for (std::size_t q = 0; q < elems.size(); ++q)
    for (const Perm& g : gens) {
      Perm c = compose(elems[q], g);
      if (index.contains(c)) continue;
      if (elems.size() >= order_cap) throw OrderCapExceeded(order_cap);
      index.emplace(c, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(c));
    }

  const std::size_t n = elems.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = index.at(compose(elems[a], elems[b]));
  return Group::from_flat(n, std::move(flat), std::move(name), order_cap);
}

std::string default_group_name(const std::filesystem::path& path) { return path.stem().string(); }

Group read_group_file(const std::filesystem::path& path, std::size_t order_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const std::string_view head = trim(std::string_view(text).substr(0, text.find('\n')));
  Group g = head == "%permgrp 1" ? read_permgrp(text, order_cap) : read_grp(text, order_cap);
  if (g.name().empty()) g = g.renamed(default_group_name(path));
  return g;
}

CorpusManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
  CorpusManifest m;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    ++number;
    const std::string_view t = trim(raw);
    if (!t.empty() && t.front() != '#') {
      const bool indented = raw.front() == ' ' || raw.front() == '\t';
      const Line l{number, t};
      if (auto rest = keyword(l, "assert")) {
        if (!indented) throw ParseError(number, "'assert' lines must be indented under an entry");
        if (m.entries.empty()) throw ParseError(number, "'assert' before any entry");
        const auto sp = rest->find_first_of(" \t");
        if (sp == std::string_view::npos) throw ParseError(number, "expected 'assert <key> <value>'");
        m.entries.back().assertions.emplace_back(std::string(rest->substr(0, sp)),
                                                 std::string(trim(rest->substr(sp))));
      } else if (auto path = keyword(l, "file")) {
        if (path->empty()) throw ParseError(number, "'file' needs a path");
        std::filesystem::path p(*path);
        if (p.is_relative()) p = base_dir / p;
        m.entries.push_back({ManifestEntry::Kind::File, p.lexically_normal().string(), {}, number});
      } else if (auto spec = keyword(l, "construct")) {
        if (spec->empty()) throw ParseError(number, "'construct' needs a spec");
        m.entries.push_back({ManifestEntry::Kind::Construct, std::string(*spec), {}, number});
      } else {
        throw ParseError(number, "expected 'file', 'construct' or 'assert'");
      }
    }
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return m;
}

CorpusManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open manifest " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str(), path.parent_path());
}

std::vector<CorpusEntry> load_corpus(const CorpusManifest& manifest, std::size_t order_cap) {
  std::vector<CorpusEntry> out;
  out.reserve(manifest.entries.size());
  for (const auto& e : manifest.entries) {
    CorpusEntry c;
    c.source = (e.kind == ManifestEntry::Kind::File ? "file " : "construct ") + e.target;
    c.assertions = e.assertions;
    try {
      c.group = e.kind == ManifestEntry::Kind::File ? read_group_file(e.target, order_cap)
                                                    : construct_from_spec(e.target, order_cap);
    } catch (const std::exception& ex) {
      c.error = ex.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::filesystem::path builtin_manifest_path() {
  if (const char* env = std::getenv("CENTRA_FIXTURE_DIR"))
    if (*env) return std::filesystem::path(env) / "builtin.manifest";
  return std::filesystem::path(CENTRA_FIXTURE_DIR) / "builtin.manifest";
}

}  // namespace centra
