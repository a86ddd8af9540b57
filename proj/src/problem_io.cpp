#include "slp/problem_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace slp {

namespace {

struct Value {
  bool is_list = false;
  std::string scalar;               // unquoted token
  std::vector<std::string> items;   // tokens or quoted strings
  std::vector<bool> quoted;
  int line = 0;
};

std::string trim(std::string_view v) {
  std::size_t b = 0, e = v.size();
  while (b < e && std::isspace(static_cast<unsigned char>(v[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(v[e - 1]))) --e;
  return std::string(v.substr(b, e - b));
}

[[noreturn]] void bad(int line, const std::string& what) {
  throw Error(errc::file_error, "problem file line " + std::to_string(line) + ": " + what);
}

double to_number(const std::string& tok, int line) {
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0') bad(line, "'" + tok + "' is not a number");
  return v;
}

Value parse_value(const std::string& raw, int line) {
  Value v;
  v.line = line;
  if (raw.empty()) bad(line, "missing value");
  if (raw.front() != '[') {
    v.scalar = raw;
    return v;
  }
  if (raw.back() != ']') bad(line, "unterminated list");
  v.is_list = true;
  std::string body = raw.substr(1, raw.size() - 2);
  std::size_t i = 0;
  while (true) {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    if (i >= body.size()) break;
    if (body[i] == '"') {
      std::size_t close = body.find('"', i + 1);
      if (close == std::string::npos) bad(line, "unterminated string");
      v.items.push_back(body.substr(i + 1, close - i - 1));
      v.quoted.push_back(true);
      i = close + 1;
    } else {
      std::size_t end = body.find(',', i);
      std::string tok = trim(body.substr(i, end == std::string::npos ? end : end - i));
      if (tok.empty()) bad(line, "empty list item");
      v.items.push_back(tok);
      v.quoted.push_back(false);
      i = end == std::string::npos ? body.size() : end;
    }
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    if (i < body.size()) {
      if (body[i] != ',') bad(line, "',' expected in list");
      ++i;
    }
  }
  return v;
}

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    else if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

std::string format_double(double v) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace

ProblemSpec parse_problem_text(std::string_view text) {
  std::map<std::string, Value> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    std::size_t eq = body.find('=');
    if (eq == std::string::npos) bad(lineno, "expected 'key = value'");
    std::string key = trim(body.substr(0, eq));
    std::string raw = trim(body.substr(eq + 1));
    if (key.empty()) bad(lineno, "empty key");
    if (kv.count(key)) bad(lineno, "duplicate key '" + key + "'");
    kv.emplace(key, parse_value(raw, lineno));
  }

  auto require = [&](const std::string& key) -> const Value& {
    auto it = kv.find(key);
    if (it == kv.end())
      throw Error(errc::file_error, "problem file: missing key '" + key + "'");
    return it->second;
  };
  auto scalar_number = [&](const std::string& key) {
    const Value& v = require(key);
    if (v.is_list) bad(v.line, "'" + key + "' must be a number");
    return to_number(v.scalar, v.line);
  };
  auto number_list = [&](const std::string& key, std::size_t n) {
    const Value& v = require(key);
    if (!v.is_list || v.items.size() != n)
      bad(v.line, "'" + key + "' must be a list of " + std::to_string(n) + " numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (v.quoted[i]) bad(v.line, "'" + key + "' entries must be numbers");
      out.push_back(to_number(v.items[i], v.line));
    }
    return out;
  };
  auto expr_list = [&](const std::string& key) {
    const Value& v = require(key);
    if (!v.is_list || v.items.size() != 3)
      bad(v.line, "'" + key + "' must be a list of 3 quoted expressions");
    std::array<Expr, 3> out;
    for (int i = 0; i < 3; ++i) {
      if (!v.quoted[i]) bad(v.line, "'" + key + "' entries must be quoted expressions");
      try {
        out[i] = Expr::parse(v.items[i]);
      } catch (const SyntaxError& e) {
        bad(v.line, "'" + key + "' entry " + std::to_string(i + 1) + ": " + e.what());
      }
    }
    return out;
  };

  double fmt = scalar_number("format");
  if (fmt != 1.0)
    throw Error(errc::file_error, "unsupported problem file format " + format_double(fmt));

  ProblemSpec spec;
  spec.h1 = scalar_number("h1");
  spec.h2 = scalar_number("h2");
  auto alpha = number_list("alpha", 2);
  auto beta = number_list("beta", 2);
  auto gamma = number_list("gamma", 4);
  auto delta = number_list("delta", 4);
  spec.alpha1 = alpha[0];
  spec.alpha2 = alpha[1];
  spec.beta1 = beta[0];
  spec.beta2 = beta[1];
  for (int i = 0; i < 4; ++i) {
    spec.gamma[i] = gamma[i];
    spec.delta[i] = delta[i];
  }
  spec.r_pieces = expr_list("r");
  spec.p_pieces = expr_list("p");
  spec.q_pieces = expr_list("q");
  return spec;
}

ProblemSpec load_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::file_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

std::string problem_to_text(const ProblemSpec& spec) {
  std::ostringstream out;
  out << "format = 1\n";
  out << "h1 = " << format_double(spec.h1) << "\n";
  out << "h2 = " << format_double(spec.h2) << "\n";
  out << "alpha = [" << format_double(spec.alpha1) << ", " << format_double(spec.alpha2) << "]\n";
  out << "beta = [" << format_double(spec.beta1) << ", " << format_double(spec.beta2) << "]\n";
  auto list4 = [&](const char* key, const std::array<double, 4>& v) {
    out << key << " = [" << format_double(v[0]) << ", " << format_double(v[1]) << ", "
        << format_double(v[2]) << ", " << format_double(v[3]) << "]\n";
  };
  list4("gamma", spec.gamma);
  list4("delta", spec.delta);
  auto exprs = [&](const char* key, const std::array<Expr, 3>& v) {
    out << key << " = [\"" << v[0].str() << "\", \"" << v[1].str() << "\", \"" << v[2].str()
        << "\"]\n";
  };
  exprs("r", spec.r_pieces);
  exprs("p", spec.p_pieces);
  exprs("q", spec.q_pieces);
  return out.str();
}

void save_problem_file(const ProblemSpec& spec, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::file_error, "cannot write '" + path + "'");
  out << problem_to_text(spec);
}

}  // namespace slp
