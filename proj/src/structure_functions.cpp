#include "fsusy/structure_functions.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "fsusy/errors.hpp"

namespace fsusy {

namespace {

int reduce(int s, int k) { return ((s % k) + k) % k; }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

StructureFunctionSet StructureFunctionSet::affine(int k, Real a, Real b) {
  if (k < 2) {
    throw ConfigError("grading order k must be >= 2");
  }
  return {k, Affine{a, b}};
}

StructureFunctionSet StructureFunctionSet::cyclic(std::vector<Real> constants) {
  const int k = static_cast<int>(constants.size());
  if (k < 2) {
    throw ConfigError("cyclic family needs one constant per grade and k >= 2");
  }
  return {k, Cyclic{std::move(constants)}};
}

StructureFunctionSet StructureFunctionSet::table(int k, std::map<std::pair<int, long>, Real> values) {
  if (k < 2) {
    throw ConfigError("grading order k must be >= 2");
  }
  for (const auto& [key, value] : values) {
    if (key.first < 0 || key.first >= k) {
      throw ConfigError("table grade " + std::to_string(key.first) + " outside 0.." + std::to_string(k - 1));
    }
    if (key.second < 0) {
      throw ConfigError("table level must be non-negative");
    }
    if (!std::isfinite(value)) {
      throw ConfigError("table value is not finite");
    }
  }
  return {k, Table{std::move(values)}};
}

Real StructureFunctionSet::operator()(int s, long n) const {
  const int grade = reduce(s, k_);
  return std::visit(overloaded{
                        [&](const Affine& f) { return f.a * static_cast<Real>(n) + f.b; },
                        [&](const Cyclic& f) { return f.constants[static_cast<std::size_t>(grade)]; },
                        [&](const Table& f) {
                          const auto it = f.values.find({grade, n});
                          if (it == f.values.end()) {
                            throw ConfigError("table has no value for s=" + std::to_string(grade) +
                                              ", n=" + std::to_string(n));
                          }
                          return it->second;
                        },
                    },
                    family_);
}

bool StructureFunctionSet::covers(long levels) const {
  const auto* tab = std::get_if<Table>(&family_);
  if (tab == nullptr) {
    return true;
  }
  for (int s = 0; s < k_; ++s) {
    for (long n = 0; n < levels; ++n) {
      if (!tab->values.contains({s, n})) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Affine> StructureFunctionSet::as_affine() const {
  return std::visit(
      overloaded{
          [](const Affine& f) -> std::optional<Affine> { return f; },
          [](const Cyclic& f) -> std::optional<Affine> {
            for (Real c : f.constants) {
              if (c != f.constants.front()) {
                return std::nullopt;
              }
            }
            return Affine{0, f.constants.front()};
          },
          [this](const Table& f) -> std::optional<Affine> {
            const auto v0 = f.values.find({0, 0});
            const auto v1 = f.values.find({0, 1});
            if (v0 == f.values.end() || v1 == f.values.end()) {
              return std::nullopt;
            }
            const Affine fit{v1->second - v0->second, v0->second};
            for (const auto& [key, value] : f.values) {
              const Real expected = fit.a * static_cast<Real>(key.second) + fit.b;
              if (std::abs(value - expected) > 1e-12L * std::max<Real>(1, std::abs(value))) {
                return std::nullopt;
              }
            }
            // Every grade must be present for the fit to describe the whole set.
            for (int s = 0; s < k_; ++s) {
              if (!f.values.contains({s, 0})) {
                return std::nullopt;
              }
            }
            return fit;
          },
      },
      family_);
}

std::string StructureFunctionSet::describe() const {
  std::ostringstream out;
  std::visit(overloaded{
                 [&](const Affine& f) {
                   out << "affine(a=" << static_cast<double>(f.a) << ", b=" << static_cast<double>(f.b) << ")";
                 },
                 [&](const Cyclic& f) {
                   out << "cyclic(";
                   for (std::size_t i = 0; i < f.constants.size(); ++i) {
                     out << (i ? "," : "") << static_cast<double>(f.constants[i]);
                   }
                   out << ")";
                 },
                 [&](const Table& f) { out << "table(" << f.values.size() << " entries)"; },
             },
             family_);
  return out.str();
}

StructureFunctionSet load_table(std::istream& in, int k) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "s,n,value") {
    throw ConfigError("table file must start with header 's,n,value'");
  }
  std::map<std::pair<int, long>, Real> values;
  long row = 1;
  while (std::getline(in, line)) {
    ++row;
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    std::istringstream fields(line);
    std::string s_txt, n_txt, v_txt, extra;
    if (!std::getline(fields, s_txt, ',') || !std::getline(fields, n_txt, ',') || !std::getline(fields, v_txt, ',') ||
        std::getline(fields, extra, ',')) {
      throw ConfigError("table row " + std::to_string(row) + ": expected three comma-separated fields");
    }
    try {
      std::size_t used = 0;
      const int s = std::stoi(trim(s_txt), &used);
      if (used != trim(s_txt).size()) throw std::invalid_argument("s");
      const long n = std::stol(trim(n_txt), &used);
      if (used != trim(n_txt).size()) throw std::invalid_argument("n");
      const Real v = std::stold(trim(v_txt), &used);
      if (used != trim(v_txt).size()) throw std::invalid_argument("value");
      if (!values.emplace(std::make_pair(s, n), v).second) {
        throw ConfigError("table row " + std::to_string(row) + ": duplicate (s, n)");
      }
    } catch (const std::logic_error&) {
      throw ConfigError("table row " + std::to_string(row) + ": malformed number in '" + line + "'");
    }
  }
  return StructureFunctionSet::table(k, std::move(values));
}

StructureFunctionSet load_table(const std::filesystem::path& path, int k) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open table file " + path.string());
  }
  return load_table(in, k);
}

}  // namespace fsusy
