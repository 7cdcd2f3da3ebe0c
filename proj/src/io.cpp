#include "dichotomy/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace dichotomy::io {

namespace {

class Tokens {
 public:
  explicit Tokens(std::istream& in) : in_(in) {}

  std::string word(const char* what) {
    std::string tok;
    if (!(in_ >> tok)) throw ParseError(std::string("unexpected end of input, expected ") + what);
    return tok;
  }

  std::int64_t integer(const char* what) {
    const std::string tok = word(what);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("expected integer " + std::string(what) + ", got '" + tok + "'");
    return v;
  }

  void expect_end() {
    std::string tok;
    if (in_ >> tok) throw ParseError("trailing data: '" + tok + "'");
  }

 private:
  std::istream& in_;
};

void join(std::ostringstream& os, const std::vector<std::int64_t>& v, std::size_t from, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) os << (i ? " " : "") << v[from + i];
  os << '\n';
}

}  // namespace

Problem parse_instance(std::istream& in) {
  Tokens tok(in);
  Problem pr;
  const std::string magic = tok.word("header");
  if (magic == "MOAP") pr.kind = ProblemKind::Assignment;
  else if (magic == "MOKP") pr.kind = ProblemKind::Knapsack;
  else throw ParseError("unknown header '" + magic + "' (expected MOAP or MOKP)");

  const auto p = tok.integer("p");
  const auto n = tok.integer("n");
  if (p < 1 || p > 16) throw ParseError("objective count out of range");
  if (n < 1 || n > 100000) throw ParseError("problem size out of range");
  pr.p = int(p);
  pr.n = int(n);

  if (pr.kind == ProblemKind::Assignment) {
    for (int k = 0; k < pr.p; ++k) {
      std::vector<std::int64_t> c(std::size_t(n) * n);
      for (auto& v : c) v = tok.integer("cost");
      pr.objectives.push_back(std::move(c));
    }
  } else {
    pr.capacity = tok.integer("capacity");
    pr.weights.resize(n);
    for (auto& v : pr.weights) v = tok.integer("weight");
    for (int k = 0; k < pr.p; ++k) {
      std::vector<std::int64_t> c(n);
      for (auto& v : c) v = tok.integer("profit");
      pr.objectives.push_back(std::move(c));
    }
  }
  tok.expect_end();
  try {
    pr.validate();
  } catch (const InvalidProblem& e) {
    throw ParseError(e.what());
  }
  return pr;
}

Problem parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Problem read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_instance(in);
}

std::string format_instance(const Problem& pr) {
  pr.validate();
  std::ostringstream os;
  const auto n = std::size_t(pr.n);
  if (pr.kind == ProblemKind::Assignment) {
    os << "MOAP " << pr.p << ' ' << pr.n << '\n';
    for (const auto& c : pr.objectives)
      for (std::size_t i = 0; i < n; ++i) join(os, c, i * n, n);
  } else {
    os << "MOKP " << pr.p << ' ' << pr.n << '\n' << pr.capacity << '\n';
    join(os, pr.weights, 0, n);
    for (const auto& c : pr.objectives) join(os, c, 0, n);
  }
  return os.str();
}

void write_instance(const std::filesystem::path& path, const Problem& problem) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_instance(problem);
}

std::string format_points(const std::vector<std::vector<std::int64_t>>& points) {
  std::ostringstream os;
  for (const auto& y : points) join(os, y, 0, y.size());
  return os.str();
}

std::vector<std::vector<std::int64_t>> parse_points(std::istream& in) {
  std::vector<std::vector<std::int64_t>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::int64_t> y;
    std::string w;
    while (ls >> w) {
      std::istringstream one(w);
      y.push_back(Tokens(one).integer("coordinate"));
    }
    if (y.empty()) continue;
    if (!out.empty() && y.size() != out.front().size()) throw ParseError("points of mixed dimension");
    out.push_back(std::move(y));
  }
  return out;
}

std::vector<std::vector<std::int64_t>> to_original_sorted(const Instance& inst,
                                                         const std::vector<OutcomePoint>& points) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& y : points) out.push_back(inst.to_original(y.y));
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_report(const RunStats& stats, std::size_t ysn1) {
  std::ostringstream os;
  os << "ysn1=" << ysn1 << '\n'
     << "solver_calls=" << stats.solver_calls << '\n'
     << "float_calls=" << stats.float_calls << '\n'
     << "init_calls=" << stats.init_solver_calls << '\n'
     << "wide_calls=" << stats.wide_calls << '\n'
     << "time_s=" << std::fixed << std::setprecision(6) << stats.wall_time_s << '\n';
  return os.str();
}

}  // namespace dichotomy::io
