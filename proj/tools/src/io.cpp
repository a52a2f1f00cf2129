#include "mixcay_cli/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mixcay/errors.hpp"

namespace mixcay::cli {

namespace {

double clean_zero(double x) { return std::abs(x) < 5e-7 ? 0.0 : x; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text, std::string_view whole) {
  const std::string s(trim(text));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw Error(ErrorCode::BadInput, "malformed number '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6f%+.6fi", clean_zero(z.real()), clean_zero(z.imag()));
  return buf;
}

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorCode::BadInput, "empty complex value");
  if (s.back() != 'i') return {parse_double(s, text), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_double(body, text)};
  return {parse_double(body.substr(0, split), text), parse_double(body.substr(split), text)};
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (const char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string character_table_csv(const GroupContext& ctx) {
  std::ostringstream os;
  os << "character";
  for (ClassIndex c = 0; c < ctx.classes.num_classes(); ++c) os << ',' << csv_field(ctx.group.label(ctx.classes.reps[c]));
  os << '\n';
  for (std::size_t j = 0; j < ctx.characters.size(); ++j) {
    os << "chi" << j + 1;
    for (ClassIndex c = 0; c < ctx.classes.num_classes(); ++c) os << ',' << format_complex(ctx.characters.value(j, c));
    os << '\n';
  }
  return os.str();
}

CharacterTable read_character_table_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open character table '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::BadInput, "character table '" + path + "' is empty");
  const std::size_t columns = split_csv_line(line).size();
  std::vector<std::vector<Complex>> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != columns) {
      throw Error(ErrorCode::BadInput, "row '" + fields.front() + "' has " + std::to_string(fields.size()) +
                                           " fields, expected " + std::to_string(columns));
    }
    std::vector<Complex> row;
    for (std::size_t i = 1; i < fields.size(); ++i) row.push_back(parse_complex(fields[i]));
    rows.push_back(std::move(row));
  }
  if (rows.size() + 1 != columns) throw Error(ErrorCode::BadInput, "character table is not square");
  return CharacterTable::from_values(std::move(rows));
}

ElementSet parse_set(const Group& group, const ClassData& classes, std::string_view text) {
  ElementSet set(group.order());
  auto find = [&](std::string_view label) {
    const auto e = group.find_label(trim(label));
    if (!e) throw Error(ErrorCode::BadInput, "no element labelled '" + std::string(trim(label)) + "'");
    return *e;
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string_view token = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (token.empty()) continue;
    if (token.starts_with("Cl[") && token.ends_with("]")) {
      const Element rep = find(token.substr(3, token.size() - 4));
      for (const auto e : classes.members[classes.class_of[rep]]) set.set(e);
    } else if (token.starts_with("#")) {
      const double idx = parse_double(token.substr(1), token);
      if (idx < 0 || idx >= static_cast<double>(group.order()) || idx != std::floor(idx)) {
        throw Error(ErrorCode::BadInput, "element index out of range in '" + std::string(token) + "'");
      }
      set.set(static_cast<std::size_t>(idx));
    } else {
      set.set(find(token));
    }
  }
  return set;
}

std::string to_dot(const Group& group, const ConnectionSet& set, const std::string& title) {
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n";
  os << "  node [shape=circle];\n";
  for (Element u = 0; u < group.order(); ++u) os << "  " << u << " [label=\"" << group.label(u) << "\"];\n";
  for (Element u = 0; u < group.order(); ++u) {
    const Element u_inv = group.inv(u);
    for (Element v = 0; v < group.order(); ++v) {
      const Element d = group.mul(v, u_inv);
      if (set.skew_part().test(d)) {
        os << "  " << u << " -> " << v << ";\n";
      } else if (u < v && set.symmetric_part().test(d)) {
        os << "  " << u << " -> " << v << " [dir=none];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace mixcay::cli
